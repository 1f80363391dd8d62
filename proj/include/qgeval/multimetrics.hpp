#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgeval/assignment.hpp"
#include "qgeval/metrics.hpp"
#include "qgeval/qbleu.hpp"
#include "qgeval/text.hpp"

namespace qgeval {

struct MetricSettings {
  MetricConfig metric;
  AnswerabilityWeights answerability;
};

// A sequence-level metric M(pred, refs) on a 0-100 scale. Scorers built by
// make_scorer() reduce multiple references the same way the underlying
// metric does; a custom scorer only has to be defined on non-empty `refs`.
struct Scorer {
  std::string name;
  std::function<double(const TokenSeq& pred, std::span<const TokenSeq> refs)> score;

  double operator()(const TokenSeq& pred, std::span<const TokenSeq> refs) const {
    return score(pred, refs);
  }
  double operator()(const TokenSeq& pred, const TokenSeq& ref) const {
    return score(pred, std::span<const TokenSeq>(&ref, 1));
  }
};

Scorer make_scorer(MetricId id, const MetricSettings& settings = {});

struct MultiScore {
  double s = 0.0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  double pr = 0.0;
  double re = 0.0;
  double multi = 0.0;
  Assignment assignment;
  // pr is reported as 0 when there are no predictions; these tell that case
  // apart from a genuine zero score.
  bool no_predictions = false;
  bool no_references = false;
};

// values(i, j) = M(preds[i], {refs[j]}).
ScoreMatrix build_score_matrix(std::span<const TokenSeq> preds,
                               std::span<const TokenSeq> refs, const Scorer& scorer);

// Multi-M from an already built score matrix.
MultiScore multi_score(const ScoreMatrix& matrix);

MultiScore multi_score(std::span<const TokenSeq> preds,
                       std::span<const TokenSeq> refs, const Scorer& scorer);

enum class AverageMode {
  AllReferences,  // mean over predictions of M(pred, all refs)
  AssignedPairs,  // mean of the assigned pair scores
};

// Average metric. Empty when it is undefined: no predictions, or (for
// AllReferences) no references, or (for AssignedPairs) no assigned pairs.
std::optional<double> average_score(std::span<const TokenSeq> preds,
                                    std::span<const TokenSeq> refs,
                                    const Scorer& scorer,
                                    AverageMode mode = AverageMode::AllReferences);

std::optional<double> assigned_mean(const ScoreMatrix& matrix, const Assignment& a);

// n - m; positive means under-prediction.
long cardinality_diff(std::size_t predictions, std::size_t references);

struct MetricReport {
  MultiScore multi;
  std::optional<double> average;
};

struct SampleReport {
  std::string id;
  std::size_t m = 0;
  std::size_t n = 0;
  long car_diff = 0;
  double self_bleu2 = 0.0;
  // Keyed by scorer name, in the order the metrics were requested.
  std::vector<std::pair<std::string, MetricReport>> metrics;
  // Set when the sample failed under lenient evaluation.
  std::optional<std::string> error;
};

struct FieldStats {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct CorpusReport {
  std::size_t samples = 0;
  // Field names like "m", "car_diff", "METEOR.multi", "METEOR.average".
  std::map<std::string, FieldStats> fields;
  std::vector<std::string> field_order;
};

// Unweighted macro average (plus min and max) of every numeric field. The
// reduction runs over samples sorted by id so the result does not depend
// on input order. Samples carrying an error are skipped. Throws
// std::invalid_argument if no sample remains.
CorpusReport corpus_aggregate(std::span<const SampleReport> reports);

}  // namespace qgeval
