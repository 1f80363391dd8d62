#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgeval/multimetrics.hpp"
#include "qgeval/samples.hpp"
#include "qgeval/selection.hpp"

namespace qgeval {

enum class ReportFormat { Json, Csv };

struct RunConfig {
  std::vector<MetricId> metrics{MetricId::BLEU4, MetricId::METEOR, MetricId::ROUGE_L,
                                MetricId::QBLEU1};
  AverageMode avg_mode = AverageMode::AllReferences;
  SelectionSpec selection;
  std::uint64_t seed = 13;
  ReportFormat format = ReportFormat::Json;
  MetricSettings settings;
  bool lenient = false;
  bool allow_empty_references = false;
  // Worker threads; 0 picks the hardware concurrency. Output does not
  // depend on this value.
  unsigned jobs = 1;

  void validate() const;
};

// Applies one flat `key = value` setting (keys as in the config file).
// Throws std::invalid_argument for unknown keys or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// Reads a flat JSON object (comments allowed) whose keys mirror RunConfig:
// metrics, avg_mode, select, seed, answerability_threshold, dedup, output,
// lenient, allow_empty_references, jobs, bleu_smoothing, rouge_beta,
// meteor_alpha, meteor_beta, meteor_gamma, qbleu_delta, qbleu_w_qt,
// qbleu_w_content, qbleu_w_ne, qbleu_w_stop.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});
RunConfig parse_config(std::string_view text, RunConfig base = {});

std::string_view to_string(AverageMode mode);
std::vector<MetricId> parse_metric_list(std::string_view csv);

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::string sample_id, const std::string& what)
      : std::runtime_error("sample \"" + sample_id + "\": " + what),
        sample_id_(std::move(sample_id)) {}
  const std::string& sample_id() const noexcept { return sample_id_; }

 private:
  std::string sample_id_;
};

struct EvaluationResult {
  std::vector<SampleReport> samples;  // input order
  std::optional<CorpusReport> corpus;
  std::size_t failures = 0;
};

// Seed used for sample number `index` (position in the input file).
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

// Selection, then per-metric Multi-M and average, self-BLEU2 and
// cardinality difference for one sample.
SampleReport evaluate_sample(const EvalSample& sample, std::size_t index,
                             const RunConfig& cfg, std::span<const Scorer> scorers);

// Evaluates every sample with scorers built from cfg.metrics. Without
// cfg.lenient the first failing sample (in input order) aborts with
// EvaluationError; with it, failures are reported and left out of the
// corpus aggregate.
EvaluationResult run_evaluation(std::span<const EvalSample> samples, const RunConfig& cfg);

// Same, with explicit scorers instead of cfg.metrics.
EvaluationResult run_evaluation(std::span<const EvalSample> samples, const RunConfig& cfg,
                                std::span<const Scorer> scorers);

}  // namespace qgeval
