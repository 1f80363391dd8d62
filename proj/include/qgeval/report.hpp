#pragma once

#include <span>
#include <string>

#include "qgeval/evaluation.hpp"

namespace qgeval {

// Two-decimal display value ("18.56").
std::string display(double value);

// JSON: stable key order; every score appears at full precision and again
// rounded under "display". CSV: header, one row per sample, then an
// "__aggregate__" row of corpus means. Requires result.corpus.
std::string emit_report(const EvaluationResult& result, const RunConfig& cfg,
                        ReportFormat format);

// Human-readable dump of a score matrix and its optimal assignment.
std::string format_assignment(std::span<const TokenSeq> preds, std::span<const TokenSeq> refs,
                              const std::string& metric_name, const ScoreMatrix& matrix,
                              const MultiScore& score);

}  // namespace qgeval
