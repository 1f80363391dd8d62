#include "qgeval/text.hpp"

#include <algorithm>
#include <stdexcept>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace qgeval {
namespace {

icu::UnicodeString to_nfc(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  icu::UnicodeString out = nfc->normalize(s, status);
  if (U_FAILURE(status)) {
    // Ill-formed input; fall back to the raw code points.
    return s;
  }
  return out;
}

bool is_word_char(UChar32 c) {
  return u_hasBinaryProperty(c, UCHAR_ALPHABETIC) || u_isdigit(c) ||
         (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool is_joiner(UChar32 c) {
  return c == u'-' || c == u'\'' || c == 0x2010 || c == 0x2019;
}

std::string utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::vector<icu::UnicodeString> split(const icu::UnicodeString& text) {
  std::vector<icu::UnicodeString> out;
  icu::UnicodeString word;
  auto flush = [&] {
    if (!word.isEmpty()) {
      out.push_back(word);
      word.remove();
    }
  };

  const int32_t len = text.length();
  for (int32_t i = 0; i < len;) {
    const UChar32 c = text.char32At(i);
    const int32_t next = text.moveIndex32(i, 1);
    if (u_isUWhiteSpace(c)) {
      flush();
    } else if (is_word_char(c)) {
      word.append(c);
    } else if (is_joiner(c) && !word.isEmpty() && next < len &&
               is_word_char(text.char32At(next))) {
      word.append(c);
    } else {
      flush();
      out.emplace_back(c);
    }
    i = next;
  }
  flush();
  return out;
}

icu::UnicodeString from_utf8(std::string_view raw) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
}

}  // namespace

TokenSeq normalize(std::string_view raw) {
  TokenSeq seq;
  seq.raw = std::string(raw);
  for (auto& piece : split(to_nfc(from_utf8(raw)))) {
    piece.toLower(icu::Locale::getRoot());
    seq.tokens.push_back(utf8(to_nfc(piece)));
  }
  return seq;
}

std::vector<std::string> surface_tokens(std::string_view raw) {
  std::vector<std::string> out;
  for (const auto& piece : split(to_nfc(from_utf8(raw)))) {
    out.push_back(utf8(piece));
  }
  return out;
}

std::string join(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

bool is_punctuation(std::string_view token) {
  const auto s = from_utf8(token);
  if (s.isEmpty()) return false;
  for (int32_t i = 0; i < s.length(); i = s.moveIndex32(i, 1)) {
    if (is_word_char(s.char32At(i))) return false;
  }
  return true;
}

std::size_t NgramCounts::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& [gram, c] : counts) sum += c;
  return sum;
}

std::size_t NgramCounts::count(const Ngram& gram) const noexcept {
  const auto it = counts.find(gram);
  return it == counts.end() ? 0 : it->second;
}

NgramCounts ngrams(std::span<const std::string> tokens, int order) {
  if (order < 1 || order > kMaxNgramOrder) {
    throw std::invalid_argument("n-gram order must be in [1, 4], got " +
                                std::to_string(order));
  }
  NgramCounts out;
  out.order = order;
  const auto n = static_cast<std::size_t>(order);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out.counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single rolling row over the shorter sequence.
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const auto& x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = (x == b[j - 1]) ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace qgeval
