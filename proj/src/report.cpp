#include "qgeval/report.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qgeval {
namespace {

using ojson = nlohmann::ordered_json;

std::string full(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

ojson optional_number(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson optional_display(const std::optional<double>& v) {
  return v ? ojson(display(*v)) : ojson(nullptr);
}

ojson metric_json(const MetricReport& mr) {
  const MultiScore& ms = mr.multi;
  ojson j;
  j["s"] = ms.s;
  j["pr"] = ms.pr;
  j["re"] = ms.re;
  j["multi"] = ms.multi;
  j["average"] = optional_number(mr.average);
  j["k"] = ms.k;
  j["no_predictions"] = ms.no_predictions;
  j["no_references"] = ms.no_references;
  ojson pairs = ojson::array();
  for (const auto& [i, r] : ms.assignment.pairs) pairs.push_back({i, r});
  j["pairs"] = std::move(pairs);
  j["display"] = {{"s", display(ms.s)},
                  {"pr", display(ms.pr)},
                  {"re", display(ms.re)},
                  {"multi", display(ms.multi)},
                  {"average", optional_display(mr.average)}};
  return j;
}

ojson sample_json(const SampleReport& r) {
  ojson j;
  j["id"] = r.id;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["m"] = r.m;
  j["n"] = r.n;
  j["car_diff"] = r.car_diff;
  j["self_bleu2"] = r.self_bleu2;
  ojson metrics = ojson::object();
  for (const auto& [name, mr] : r.metrics) metrics[name] = metric_json(mr);
  j["metrics"] = std::move(metrics);
  j["display"] = {{"self_bleu2", display(r.self_bleu2)}};
  return j;
}

ojson corpus_json(const CorpusReport& c) {
  ojson fields = ojson::object();
  for (const auto& key : c.field_order) {
    const FieldStats& st = c.fields.at(key);
    ojson f;
    f["count"] = st.count;
    if (st.count) {
      f["mean"] = st.mean;
      f["min"] = st.min;
      f["max"] = st.max;
      f["display"] = display(st.mean);
    } else {
      f["mean"] = nullptr;
      f["min"] = nullptr;
      f["max"] = nullptr;
      f["display"] = nullptr;
    }
    fields[key] = std::move(f);
  }
  return {{"samples", c.samples}, {"fields", std::move(fields)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string emit_json(const EvaluationResult& result, const RunConfig& cfg) {
  ojson j;
  ojson metrics = ojson::array();
  for (const auto id : cfg.metrics) metrics.push_back(std::string(to_string(id)));
  j["config"] = {{"metrics", std::move(metrics)},
                 {"avg_mode", std::string(to_string(cfg.avg_mode))},
                 {"select", cfg.selection.to_string()},
                 {"seed", cfg.seed}};
  ojson samples = ojson::array();
  for (const auto& r : result.samples) samples.push_back(sample_json(r));
  j["samples"] = std::move(samples);
  j["aggregate"] = corpus_json(*result.corpus);
  return j.dump(2) + "\n";
}

std::string emit_csv(const EvaluationResult& result) {
  const CorpusReport& corpus = *result.corpus;
  std::ostringstream out;
  out << "id";
  for (const auto& key : corpus.field_order) out << ',' << key;
  out << ",error\n";

  for (const auto& r : result.samples) {
    out << csv_field(r.id);
    if (r.error) {
      for (std::size_t i = 0; i < corpus.field_order.size(); ++i) out << ',';
      out << ',' << csv_field(*r.error) << '\n';
      continue;
    }
    std::map<std::string, std::optional<double>> row{
        {"m", static_cast<double>(r.m)},
        {"n", static_cast<double>(r.n)},
        {"car_diff", static_cast<double>(r.car_diff)},
        {"self_bleu2", r.self_bleu2}};
    for (const auto& [name, mr] : r.metrics) {
      row[name + ".s"] = mr.multi.s;
      row[name + ".pr"] = mr.multi.pr;
      row[name + ".re"] = mr.multi.re;
      row[name + ".multi"] = mr.multi.multi;
      row[name + ".average"] = mr.average;
    }
    for (const auto& key : corpus.field_order) {
      out << ',';
      const auto it = row.find(key);
      if (it != row.end() && it->second) out << full(*it->second);
    }
    out << ",\n";
  }

  out << "__aggregate__";
  for (const auto& key : corpus.field_order) {
    out << ',';
    const FieldStats& st = corpus.fields.at(key);
    if (st.count) out << full(st.mean);
  }
  out << ",\n";
  return out.str();
}

}  // namespace

std::string display(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string emit_report(const EvaluationResult& result, const RunConfig& cfg,
                        ReportFormat format) {
  if (!result.corpus) {
    throw std::invalid_argument("emit_report: no corpus aggregate (no successful samples)");
  }
  return format == ReportFormat::Json ? emit_json(result, cfg) : emit_csv(result);
}

std::string format_assignment(std::span<const TokenSeq> preds, std::span<const TokenSeq> refs,
                              const std::string& metric_name, const ScoreMatrix& matrix,
                              const MultiScore& score) {
  std::ostringstream out;
  out << "score matrix (" << metric_name << "), rows = predictions, columns = references\n";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << "  p" << i << ':';
    for (std::size_t j = 0; j < matrix.cols(); ++j) out << ' ' << display(matrix(i, j));
    out << '\n';
  }
  out << '\n';
  for (const auto& [i, j] : score.assignment.pairs) {
    out << "Prediction: " << preds[i].raw << '\n'
        << "  -> assigned to Reference: " << refs[j].raw << " (" << metric_name << ": "
        << display(matrix(i, j)) << ")\n";
  }
  const auto avg = assigned_mean(matrix, score.assignment);
  out << '\n'
      << "Average " << metric_name << ": " << (avg ? display(*avg) : std::string("n/a"))
      << "; Overall Match Score (S): " << display(score.s) << "; Multi-" << metric_name
      << ": " << display(score.multi) << '\n';
  return out.str();
}

}  // namespace qgeval
