#include "qgeval/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace qgeval {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument(std::string(key) + ": expected a number, got \"" + v + "\"");
  }
  return out;
}

std::uint64_t to_uint(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument(std::string(key) + ": expected a non-negative integer, got \"" +
                                v + "\"");
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument(std::string(key) + ": expected true or false");
}

std::vector<TokenSeq> tokenize_all(const std::vector<std::string>& raw) {
  std::vector<TokenSeq> out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back(normalize(r));
  return out;
}

}  // namespace

std::string_view to_string(AverageMode mode) {
  return mode == AverageMode::AllReferences ? "all-refs" : "assigned";
}

std::vector<MetricId> parse_metric_list(std::string_view csv) {
  std::vector<MetricId> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto part = trim(csv.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start));
    if (!part.empty()) {
      const auto id = parse_metric(part);
      if (!id) throw std::invalid_argument("unknown metric \"" + part + "\"");
      if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  if (metrics.empty()) throw std::invalid_argument("at least one metric is required");
  settings.metric.validate();
  settings.answerability.validate();
  if (!(selection.threshold >= 0.0 && selection.threshold <= 1.0)) {
    throw std::invalid_argument("answerability threshold must lie in [0, 1]");
  }
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  auto& mc = cfg.settings.metric;
  auto& aw = cfg.settings.answerability;
  if (key == "metrics") {
    cfg.metrics = parse_metric_list(v);
  } else if (key == "avg_mode") {
    if (v == "all-refs" || v == "all") {
      cfg.avg_mode = AverageMode::AllReferences;
    } else if (v == "assigned") {
      cfg.avg_mode = AverageMode::AssignedPairs;
    } else {
      throw std::invalid_argument("avg_mode must be all-refs or assigned");
    }
  } else if (key == "select") {
    const SelectionSpec parsed = parse_selection(v);
    cfg.selection.kind = parsed.kind;
    cfg.selection.k = parsed.k;
  } else if (key == "seed") {
    cfg.seed = to_uint(key, v);
  } else if (key == "answerability_threshold") {
    cfg.selection.threshold = to_double(key, v);
  } else if (key == "dedup") {
    cfg.selection.dedup = to_bool(key, v);
  } else if (key == "output") {
    if (v == "json") {
      cfg.format = ReportFormat::Json;
    } else if (v == "csv") {
      cfg.format = ReportFormat::Csv;
    } else {
      throw std::invalid_argument("output must be json or csv");
    }
  } else if (key == "lenient") {
    cfg.lenient = to_bool(key, v);
  } else if (key == "allow_empty_references") {
    cfg.allow_empty_references = to_bool(key, v);
  } else if (key == "jobs") {
    cfg.jobs = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "bleu_smoothing") {
    mc.bleu_smoothing = to_double(key, v);
  } else if (key == "rouge_beta") {
    mc.rouge_beta = to_double(key, v);
  } else if (key == "meteor_alpha") {
    mc.meteor_alpha = to_double(key, v);
  } else if (key == "meteor_beta") {
    mc.meteor_beta = to_double(key, v);
  } else if (key == "meteor_gamma") {
    mc.meteor_gamma = to_double(key, v);
  } else if (key == "qbleu_delta") {
    aw.delta = to_double(key, v);
  } else if (key == "qbleu_w_qt") {
    aw.w_qt = to_double(key, v);
  } else if (key == "qbleu_w_content") {
    aw.w_content = to_double(key, v);
  } else if (key == "qbleu_w_ne") {
    aw.w_ne = to_double(key, v);
  } else if (key == "qbleu_w_stop") {
    aw.w_stop = to_double(key, v);
  } else {
    throw std::invalid_argument("unknown config key \"" + std::string(key) + "\"");
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    std::string flat;
    if (value.is_string()) {
      flat = value.get<std::string>();
    } else if (value.is_array()) {
      for (const auto& item : value) {
        if (!item.is_string()) throw std::invalid_argument(key + ": expected strings");
        if (!flat.empty()) flat += ',';
        flat += item.get<std::string>();
      }
    } else if (value.is_boolean() || value.is_number()) {
      flat = value.dump();
    } else {
      throw std::invalid_argument(key + ": nested values are not supported");
    }
    apply_setting(base, key, flat);
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SampleReport evaluate_sample(const EvalSample& sample, std::size_t index,
                             const RunConfig& cfg, std::span<const Scorer> scorers) {
  if (sample.references.empty() && !cfg.allow_empty_references) {
    throw EvaluationError(sample.id, "no references");
  }
  if (sample.prediction_scores &&
      sample.prediction_scores->size() != sample.predictions.size()) {
    throw EvaluationError(sample.id, "prediction_scores is not aligned with predictions");
  }

  std::vector<Candidate> cands;
  cands.reserve(sample.predictions.size());
  for (std::size_t i = 0; i < sample.predictions.size(); ++i) {
    Candidate c;
    c.text = normalize(sample.predictions[i]);
    if (sample.prediction_scores) c.answerability = (*sample.prediction_scores)[i];
    c.origin = i;
    cands.push_back(std::move(c));
  }

  std::vector<Candidate> chosen;
  try {
    chosen = apply_selection(cands, cfg.selection, sample_seed(cfg.seed, index));
  } catch (const std::invalid_argument& e) {
    throw EvaluationError(sample.id, e.what());
  }

  std::vector<TokenSeq> preds;
  preds.reserve(chosen.size());
  for (auto& c : chosen) preds.push_back(std::move(c.text));
  const std::vector<TokenSeq> refs = tokenize_all(sample.references);

  SampleReport report;
  report.id = sample.id;
  report.m = preds.size();
  report.n = refs.size();
  report.car_diff = cardinality_diff(report.m, report.n);
  report.self_bleu2 = self_bleu(preds, 2, cfg.settings.metric);

  for (const auto& scorer : scorers) {
    MetricReport mr;
    const ScoreMatrix matrix = build_score_matrix(preds, refs, scorer);
    mr.multi = multi_score(matrix);
    if (cfg.avg_mode == AverageMode::AssignedPairs) {
      mr.average = assigned_mean(matrix, mr.multi.assignment);
    } else {
      mr.average = average_score(preds, refs, scorer, AverageMode::AllReferences);
    }
    report.metrics.emplace_back(scorer.name, std::move(mr));
  }
  return report;
}

EvaluationResult run_evaluation(std::span<const EvalSample> samples, const RunConfig& cfg) {
  cfg.validate();
  std::vector<Scorer> scorers;
  for (const auto id : cfg.metrics) scorers.push_back(make_scorer(id, cfg.settings));
  return run_evaluation(samples, cfg, scorers);
}

EvaluationResult run_evaluation(std::span<const EvalSample> samples, const RunConfig& cfg,
                                std::span<const Scorer> scorers) {
  std::vector<SampleReport> reports(samples.size());
  std::vector<std::exception_ptr> errors(samples.size());

  const auto work = [&](std::size_t i) {
    try {
      reports[i] = evaluate_sample(samples[i], i, cfg, scorers);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, samples.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < samples.size();) work(i);
      });
    }
  }

  EvaluationResult result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!errors[i]) continue;
    std::string message;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const EvaluationError& e) {
      if (!cfg.lenient) throw;
      message = e.what();
    } catch (const std::exception& e) {
      if (!cfg.lenient) throw EvaluationError(samples[i].id, e.what());
      message = EvaluationError(samples[i].id, e.what()).what();
    }
    reports[i] = SampleReport{};
    reports[i].id = samples[i].id;
    reports[i].error = message;
    ++result.failures;
  }

  if (result.failures < samples.size()) result.corpus = corpus_aggregate(reports);
  result.samples = std::move(reports);
  return result;
}

}  // namespace qgeval
