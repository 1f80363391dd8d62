#pragma once

#include <span>

#include "qgeval/metrics.hpp"
#include "qgeval/text.hpp"

namespace qgeval {

// Interpolation weight and component weights of the answerability score.
// The component weights must sum to 1.
struct AnswerabilityWeights {
  double delta = 0.66;
  double w_qt = 0.2;
  double w_content = 0.1;
  double w_ne = 0.6;
  double w_stop = 0.1;

  void validate() const;
};

enum class TokenRole { QuestionWord, NamedEntity, Function, Content, Ignored };

// Partition used by answerability(). Question words and function words
// come from fixed lexicons; a remaining token counts as a named entity when
// its surface form in `seq.raw` starts with an uppercase letter; anything
// else is a content word. Punctuation is ignored.
std::vector<TokenRole> token_roles(const TokenSeq& seq);

bool is_question_word(std::string_view token);
bool is_function_word(std::string_view token);

// Weighted sum of per-component F1 overlaps in [0, 1]. A component that is
// empty on both sides counts as a perfect match.
double answerability(const TokenSeq& pred, const TokenSeq& ref,
                     const AnswerabilityWeights& w = {});

// 100 * (delta * best answerability + (1 - delta) * base / 100), where the
// answerability is maximized over references. `base` must be one of the
// BLEU orders or ROUGE_L/METEOR.
double qmetric(const TokenSeq& pred, std::span<const TokenSeq> refs,
               MetricId base, const AnswerabilityWeights& w = {},
               const MetricConfig& cfg = {});

}  // namespace qgeval
