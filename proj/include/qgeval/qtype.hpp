#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>

#include "qgeval/text.hpp"

namespace qgeval {

enum class QuestionType { who, when, where, what, why, which, how, quantity, other };

std::string_view to_string(QuestionType t);

// Rule cascade, first match wins:
//   1. answer given and equal to "yes"/"no"          -> other
//   2. the first question word is "how" followed by
//      "much"/"many"                                 -> quantity
//   3. "whose" or "whom" anywhere                    -> who
//   4. first of who/when/where/what/why/which/how    -> that type
//   5. otherwise                                     -> other
// The literal words "quantity" and "other" never select a type.
// Throws std::invalid_argument for an empty question.
QuestionType determine_type(const TokenSeq& question,
                            std::optional<std::string_view> answer = std::nullopt);

struct TypeLabels {
  std::map<QuestionType, std::size_t> counts;

  std::set<QuestionType> labels() const;
  std::size_t total() const;
};

TypeLabels type_label_set(std::span<const TokenSeq> questions);

}  // namespace qgeval
