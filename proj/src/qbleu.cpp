#include "qgeval/qbleu.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace qgeval {
namespace {

constexpr std::array<std::string_view, 9> kQuestionWords{
    "who", "whom", "whose", "when", "where", "what", "which", "why", "how"};

// English function words (the common NLTK list, minus the question words).
constexpr std::string_view kFunctionWords[] = {
    "i",          "me",       "my",       "myself",     "we",        "our",
    "ours",       "ourselves", "you",     "you're",     "you've",    "you'll",
    "you'd",      "your",     "yours",    "yourself",   "yourselves", "he",
    "him",        "his",      "himself",  "she",        "she's",     "her",
    "hers",       "herself",  "it",       "it's",       "its",       "itself",
    "they",       "them",     "their",    "theirs",     "themselves", "this",
    "that",       "that'll",  "these",    "those",      "am",        "is",
    "are",        "was",      "were",     "be",         "been",      "being",
    "have",       "has",      "had",      "having",     "do",        "does",
    "did",        "doing",    "a",        "an",         "the",       "and",
    "but",        "if",       "or",       "because",    "as",        "until",
    "while",      "of",       "at",       "by",         "for",       "with",
    "about",      "against",  "between",  "into",       "through",   "during",
    "before",     "after",    "above",    "below",      "to",        "from",
    "up",         "down",     "in",       "out",        "on",        "off",
    "over",       "under",    "again",    "further",    "then",      "once",
    "here",       "there",    "all",      "any",        "both",      "each",
    "few",        "more",     "most",     "other",      "some",      "such",
    "no",         "nor",      "not",      "only",       "own",       "same",
    "so",         "than",     "too",      "very",       "s",         "t",
    "can",        "will",     "just",     "don",        "don't",     "should",
    "should've",  "now",      "d",        "ll",         "m",         "o",
    "re",         "ve",       "y",        "ain",        "aren",      "aren't",
    "couldn",     "couldn't", "didn",     "didn't",     "doesn",     "doesn't",
    "hadn",       "hadn't",   "hasn",     "hasn't",     "haven",     "haven't",
    "isn",        "isn't",    "ma",       "mightn",     "mightn't",  "mustn",
    "mustn't",    "needn",    "needn't",  "shan",       "shan't",    "shouldn",
    "shouldn't",  "wasn",     "wasn't",   "weren",      "weren't",   "won",
    "won't",      "wouldn",   "wouldn't"};

bool starts_uppercase(const std::string& surface) {
  const auto u = icu::UnicodeString::fromUTF8(surface);
  return !u.isEmpty() && u_isupper(u.char32At(0));
}

using Bag = std::map<std::string, std::size_t>;

std::array<Bag, 4> component_bags(const TokenSeq& seq) {
  std::array<Bag, 4> bags;
  const auto roles = token_roles(seq);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (roles[i] == TokenRole::Ignored) continue;
    ++bags[static_cast<std::size_t>(roles[i])][seq.tokens[i]];
  }
  return bags;
}

std::size_t bag_size(const Bag& b) {
  std::size_t n = 0;
  for (const auto& [t, c] : b) n += c;
  return n;
}

double overlap_f1(const Bag& pred, const Bag& ref) {
  const std::size_t np = bag_size(pred);
  const std::size_t nr = bag_size(ref);
  if (np == 0 && nr == 0) return 1.0;
  if (np == 0 || nr == 0) return 0.0;
  std::size_t common = 0;
  for (const auto& [tok, c] : pred) {
    const auto it = ref.find(tok);
    if (it != ref.end()) common += std::min(c, it->second);
  }
  if (common == 0) return 0.0;
  const double p = static_cast<double>(common) / static_cast<double>(np);
  const double r = static_cast<double>(common) / static_cast<double>(nr);
  return 2.0 * p * r / (p + r);
}

}  // namespace

void AnswerabilityWeights::validate() const {
  for (double v : {delta, w_qt, w_content, w_ne, w_stop}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("answerability weights must be non-negative");
    }
  }
  if (delta > 1.0) throw std::invalid_argument("delta must be in [0, 1]");
  if (std::abs(w_qt + w_content + w_ne + w_stop - 1.0) > 1e-9) {
    throw std::invalid_argument("answerability component weights must sum to 1");
  }
}

bool is_question_word(std::string_view token) {
  return std::find(kQuestionWords.begin(), kQuestionWords.end(), token) !=
         kQuestionWords.end();
}

bool is_function_word(std::string_view token) {
  return std::find(std::begin(kFunctionWords), std::end(kFunctionWords),
                   token) != std::end(kFunctionWords);
}

std::vector<TokenRole> token_roles(const TokenSeq& seq) {
  const auto surface = surface_tokens(seq.raw);
  std::vector<TokenRole> roles;
  roles.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& tok = seq.tokens[i];
    if (is_punctuation(tok)) {
      roles.push_back(TokenRole::Ignored);
    } else if (is_question_word(tok)) {
      roles.push_back(TokenRole::QuestionWord);
    } else if (is_function_word(tok)) {
      roles.push_back(TokenRole::Function);
    } else if (i < surface.size() && starts_uppercase(surface[i])) {
      roles.push_back(TokenRole::NamedEntity);
    } else {
      roles.push_back(TokenRole::Content);
    }
  }
  return roles;
}

double answerability(const TokenSeq& pred, const TokenSeq& ref,
                     const AnswerabilityWeights& w) {
  const auto p = component_bags(pred);
  const auto r = component_bags(ref);
  const auto part = [&](TokenRole role) {
    const auto i = static_cast<std::size_t>(role);
    return overlap_f1(p[i], r[i]);
  };
  return w.w_qt * part(TokenRole::QuestionWord) +
         w.w_ne * part(TokenRole::NamedEntity) +
         w.w_stop * part(TokenRole::Function) +
         w.w_content * part(TokenRole::Content);
}

double qmetric(const TokenSeq& pred, std::span<const TokenSeq> refs,
               MetricId base, const AnswerabilityWeights& w,
               const MetricConfig& cfg) {
  double base_score = 0.0;
  switch (base) {
    case MetricId::BLEU1: base_score = bleu(pred, refs, 1, cfg); break;
    case MetricId::BLEU2: base_score = bleu(pred, refs, 2, cfg); break;
    case MetricId::BLEU4: base_score = bleu(pred, refs, 4, cfg); break;
    case MetricId::ROUGE_L: base_score = rouge_l(pred, refs, cfg); break;
    case MetricId::METEOR: base_score = meteor(pred, refs, cfg); break;
    case MetricId::QBLEU1:
      throw std::invalid_argument("qmetric: base metric must be an n-gram metric");
  }
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, answerability(pred, r, w));
  return 100.0 * (w.delta * best + (1.0 - w.delta) * base_score / 100.0);
}

}  // namespace qgeval
