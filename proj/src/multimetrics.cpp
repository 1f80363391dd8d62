#include "qgeval/multimetrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgeval {

Scorer make_scorer(MetricId id, const MetricSettings& settings) {
  settings.metric.validate();
  const MetricConfig cfg = settings.metric;
  Scorer s;
  s.name = std::string(to_string(id));
  switch (id) {
    case MetricId::BLEU1:
    case MetricId::BLEU2:
    case MetricId::BLEU4: {
      const int order = id == MetricId::BLEU1 ? 1 : id == MetricId::BLEU2 ? 2 : 4;
      s.score = [cfg, order](const TokenSeq& p, std::span<const TokenSeq> refs) {
        return bleu(p, refs, order, cfg);
      };
      break;
    }
    case MetricId::ROUGE_L:
      s.score = [cfg](const TokenSeq& p, std::span<const TokenSeq> refs) {
        return rouge_l(p, refs, cfg);
      };
      break;
    case MetricId::METEOR:
      s.score = [cfg](const TokenSeq& p, std::span<const TokenSeq> refs) {
        return meteor(p, refs, cfg);
      };
      break;
    case MetricId::QBLEU1: {
      settings.answerability.validate();
      const AnswerabilityWeights w = settings.answerability;
      s.score = [cfg, w](const TokenSeq& p, std::span<const TokenSeq> refs) {
        return qmetric(p, refs, MetricId::BLEU1, w, cfg);
      };
      break;
    }
  }
  return s;
}

ScoreMatrix build_score_matrix(std::span<const TokenSeq> preds,
                               std::span<const TokenSeq> refs, const Scorer& scorer) {
  ScoreMatrix out(preds.size(), refs.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < refs.size(); ++j) out(i, j) = scorer(preds[i], refs[j]);
  }
  return out;
}

MultiScore multi_score(const ScoreMatrix& matrix) {
  MultiScore out;
  out.m = matrix.rows();
  out.n = matrix.cols();
  out.k = std::min(out.m, out.n);
  out.no_predictions = out.m == 0;
  out.no_references = out.n == 0;
  out.assignment = solve(matrix);
  out.s = out.assignment.s;
  if (out.m > 0) out.pr = out.s / static_cast<double>(out.m);
  if (out.n > 0) out.re = out.s / static_cast<double>(out.n);
  if (out.pr + out.re > 0.0) out.multi = 2.0 * out.pr * out.re / (out.pr + out.re);
  return out;
}

MultiScore multi_score(std::span<const TokenSeq> preds,
                       std::span<const TokenSeq> refs, const Scorer& scorer) {
  return multi_score(build_score_matrix(preds, refs, scorer));
}

std::optional<double> assigned_mean(const ScoreMatrix& matrix, const Assignment& a) {
  if (a.pairs.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& [i, j] : a.pairs) sum += matrix(i, j);
  return sum / static_cast<double>(a.pairs.size());
}

std::optional<double> average_score(std::span<const TokenSeq> preds,
                                    std::span<const TokenSeq> refs,
                                    const Scorer& scorer, AverageMode mode) {
  if (preds.empty() || refs.empty()) return std::nullopt;
  if (mode == AverageMode::AssignedPairs) {
    const ScoreMatrix matrix = build_score_matrix(preds, refs, scorer);
    return assigned_mean(matrix, solve(matrix));
  }
  double sum = 0.0;
  for (const auto& p : preds) sum += scorer(p, refs);
  return sum / static_cast<double>(preds.size());
}

long cardinality_diff(std::size_t predictions, std::size_t references) {
  return static_cast<long>(references) - static_cast<long>(predictions);
}

CorpusReport corpus_aggregate(std::span<const SampleReport> reports) {
  std::vector<const SampleReport*> ok;
  for (const auto& r : reports) {
    if (!r.error) ok.push_back(&r);
  }
  if (ok.empty()) {
    throw std::invalid_argument("corpus_aggregate: no successful sample reports");
  }
  std::sort(ok.begin(), ok.end(),
            [](const SampleReport* a, const SampleReport* b) { return a->id < b->id; });

  CorpusReport out;
  out.samples = ok.size();
  std::map<std::string, std::vector<double>> values;
  const auto add = [&](const std::string& key, std::optional<double> v) {
    if (!values.contains(key)) out.field_order.push_back(key);
    auto& column = values[key];
    if (v) column.push_back(*v);
  };
  for (const SampleReport* r : ok) {
    add("m", static_cast<double>(r->m));
    add("n", static_cast<double>(r->n));
    add("car_diff", static_cast<double>(r->car_diff));
    add("self_bleu2", r->self_bleu2);
    for (const auto& [name, mr] : r->metrics) {
      add(name + ".s", mr.multi.s);
      add(name + ".pr", mr.multi.pr);
      add(name + ".re", mr.multi.re);
      add(name + ".multi", mr.multi.multi);
      add(name + ".average", mr.average);
    }
  }
  for (const auto& key : out.field_order) {
    const auto& column = values[key];
    FieldStats st;
    st.count = column.size();
    if (!column.empty()) {
      st.mean = std::accumulate(column.begin(), column.end(), 0.0) /
                static_cast<double>(column.size());
      const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
      st.min = *lo;
      st.max = *hi;
    }
    out.fields.emplace(key, st);
  }
  return out;
}

}  // namespace qgeval
