#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgeval {

// A normalized question. `tokens` is always normalize(raw).tokens.
struct TokenSeq {
  std::vector<std::string> tokens;
  std::string raw;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  friend bool operator==(const TokenSeq& a, const TokenSeq& b) {
    return a.tokens == b.tokens;
  }
};

// NFC-normalizes, lowercases and splits `raw` into word and punctuation
// tokens. Hyphens and apostrophes between two word characters stay inside
// the word ("catch-phrase", "don't"); every other non-space, non-word
// character becomes a token of its own.
TokenSeq normalize(std::string_view raw);

// Same split as normalize() but without lowercasing. Element i corresponds
// to normalize(raw).tokens[i].
std::vector<std::string> surface_tokens(std::string_view raw);

// Tokens joined with single spaces.
std::string join(std::span<const std::string> tokens);

// True if the token consists only of punctuation/symbol characters.
bool is_punctuation(std::string_view token);

using Ngram = std::vector<std::string>;

struct NgramCounts {
  int order = 1;
  std::map<Ngram, std::size_t> counts;

  std::size_t total() const noexcept;
  std::size_t count(const Ngram& gram) const noexcept;
};

inline constexpr int kMaxNgramOrder = 4;

// All contiguous n-grams of `tokens` with multiplicity. Throws
// std::invalid_argument unless 1 <= order <= kMaxNgramOrder.
NgramCounts ngrams(std::span<const std::string> tokens, int order);
inline NgramCounts ngrams(const TokenSeq& seq, int order) {
  return ngrams(std::span<const std::string>(seq.tokens), order);
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);
inline std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b) {
  return lcs_length(std::span<const std::string>(a.tokens),
                    std::span<const std::string>(b.tokens));
}

// Classic Porter (1980) stemmer, as published. Expects a lowercase token.
std::string stem(std::string_view token);

}  // namespace qgeval
