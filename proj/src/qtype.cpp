#include "qgeval/qtype.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace qgeval {
namespace {

constexpr std::array<std::pair<std::string_view, QuestionType>, 7> kTypeWords{{
    {"who", QuestionType::who},
    {"when", QuestionType::when},
    {"where", QuestionType::where},
    {"what", QuestionType::what},
    {"why", QuestionType::why},
    {"which", QuestionType::which},
    {"how", QuestionType::how},
}};

std::optional<QuestionType> type_word(std::string_view tok) {
  for (const auto& [word, type] : kTypeWords) {
    if (word == tok) return type;
  }
  return std::nullopt;
}

bool is_yes_no(std::string_view answer) {
  const TokenSeq a = normalize(answer);
  std::vector<std::string> words;
  for (const auto& t : a.tokens) {
    if (!is_punctuation(t)) words.push_back(t);
  }
  return words.size() == 1 && (words[0] == "yes" || words[0] == "no");
}

}  // namespace

std::string_view to_string(QuestionType t) {
  switch (t) {
    case QuestionType::who: return "who";
    case QuestionType::when: return "when";
    case QuestionType::where: return "where";
    case QuestionType::what: return "what";
    case QuestionType::why: return "why";
    case QuestionType::which: return "which";
    case QuestionType::how: return "how";
    case QuestionType::quantity: return "quantity";
    case QuestionType::other: return "other";
  }
  return "other";
}

QuestionType determine_type(const TokenSeq& question,
                            std::optional<std::string_view> answer) {
  if (question.empty()) {
    throw std::invalid_argument("determine_type: empty question");
  }
  if (answer && is_yes_no(*answer)) return QuestionType::other;

  const auto& toks = question.tokens;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (type_word(toks[i])) {
      first = i;
      break;
    }
  }

  if (first && toks[*first] == "how" && *first + 1 < toks.size() &&
      (toks[*first + 1] == "much" || toks[*first + 1] == "many")) {
    return QuestionType::quantity;
  }
  for (const auto& t : toks) {
    if (t == "whose" || t == "whom") return QuestionType::who;
  }
  if (first) return *type_word(toks[*first]);
  return QuestionType::other;
}

std::set<QuestionType> TypeLabels::labels() const {
  std::set<QuestionType> out;
  for (const auto& [t, c] : counts) {
    if (c > 0) out.insert(t);
  }
  return out;
}

std::size_t TypeLabels::total() const {
  std::size_t n = 0;
  for (const auto& [t, c] : counts) n += c;
  return n;
}

TypeLabels type_label_set(std::span<const TokenSeq> questions) {
  TypeLabels out;
  for (const auto& q : questions) ++out.counts[determine_type(q)];
  return out;
}

}  // namespace qgeval
