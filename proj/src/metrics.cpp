#include "qgeval/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace qgeval {
namespace {

constexpr std::array<std::pair<MetricId, std::string_view>, 6> kMetricNames{{
    {MetricId::BLEU1, "BLEU1"},
    {MetricId::BLEU2, "BLEU2"},
    {MetricId::BLEU4, "BLEU4"},
    {MetricId::ROUGE_L, "ROUGE_L"},
    {MetricId::METEOR, "METEOR"},
    {MetricId::QBLEU1, "QBLEU1"},
}};

void require_refs(std::span<const TokenSeq> refs, std::string_view who) {
  if (refs.empty()) {
    throw std::invalid_argument(std::string(who) + ": reference list is empty");
  }
}

std::size_t closest_ref_length(std::size_t pred_len,
                               std::span<const TokenSeq> refs) {
  std::size_t best = refs.front().size();
  for (const auto& r : refs) {
    const auto d = [&](std::size_t len) {
      return len > pred_len ? len - pred_len : pred_len - len;
    };
    if (d(r.size()) < d(best) || (d(r.size()) == d(best) && r.size() < best)) {
      best = r.size();
    }
  }
  return best;
}

double rouge_l_single(const TokenSeq& pred, const TokenSeq& ref, double beta) {
  if (pred.empty() || ref.empty()) return 0.0;
  const auto lcs = static_cast<double>(lcs_length(pred, ref));
  if (lcs == 0.0) return 0.0;
  const double p = lcs / static_cast<double>(pred.size());
  const double r = lcs / static_cast<double>(ref.size());
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (r + b2 * p);
}

double meteor_single(const TokenSeq& pred, const TokenSeq& ref,
                     const MetricConfig& cfg) {
  const auto [matches, chunks] = meteor_align(pred, ref);
  if (matches == 0) return 0.0;
  const double p = static_cast<double>(matches) / static_cast<double>(pred.size());
  const double r = static_cast<double>(matches) / static_cast<double>(ref.size());
  const double fmean = p * r / (cfg.meteor_alpha * p + (1.0 - cfg.meteor_alpha) * r);
  const double frag = static_cast<double>(chunks) / static_cast<double>(matches);
  const double penalty = cfg.meteor_gamma * std::pow(frag, cfg.meteor_beta);
  return std::max(0.0, fmean * (1.0 - penalty));
}

}  // namespace

std::string_view to_string(MetricId id) {
  for (const auto& [m, name] : kMetricNames) {
    if (m == id) return name;
  }
  return "UNKNOWN";
}

std::optional<MetricId> parse_metric(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c == '-') c = '_';
  }
  if (upper == "ROUGEL" || upper == "ROUGE-L") upper = "ROUGE_L";
  if (upper == "Q_BLEU1") upper = "QBLEU1";
  for (const auto& [m, n] : kMetricNames) {
    if (n == upper) return m;
  }
  return std::nullopt;
}

void MetricConfig::validate() const {
  const auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  };
  check(bleu_smoothing, "bleu_smoothing");
  check(rouge_beta, "rouge_beta");
  check(meteor_alpha, "meteor_alpha");
  check(meteor_beta, "meteor_beta");
  check(meteor_gamma, "meteor_gamma");
  if (meteor_alpha > 1.0) {
    throw std::invalid_argument("meteor_alpha must not exceed 1");
  }
}

double bleu(const TokenSeq& pred, std::span<const TokenSeq> refs, int max_n,
            const MetricConfig& cfg) {
  require_refs(refs, "bleu");
  if (max_n < 1 || max_n > kMaxNgramOrder) {
    throw std::invalid_argument("bleu: max_n must be in [1, 4]");
  }
  if (pred.empty()) return 0.0;

  const int orders = std::min<int>(max_n, static_cast<int>(pred.size()));
  double log_sum = 0.0;
  for (int n = 1; n <= orders; ++n) {
    const NgramCounts cand = ngrams(pred, n);
    std::vector<NgramCounts> ref_counts;
    ref_counts.reserve(refs.size());
    for (const auto& r : refs) ref_counts.push_back(ngrams(r, n));

    std::size_t clipped = 0;
    for (const auto& [gram, count] : cand.counts) {
      std::size_t ceiling = 0;
      for (const auto& rc : ref_counts) ceiling = std::max(ceiling, rc.count(gram));
      clipped += std::min(count, ceiling);
    }
    const double precision =
        clipped == 0 ? cfg.bleu_smoothing
                     : static_cast<double>(clipped) / static_cast<double>(cand.total());
    log_sum += std::log(precision);
  }

  const auto c = static_cast<double>(pred.size());
  const auto r = static_cast<double>(closest_ref_length(pred.size(), refs));
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return 100.0 * bp * std::exp(log_sum / orders);
}

double rouge_l(const TokenSeq& pred, std::span<const TokenSeq> refs,
               const MetricConfig& cfg) {
  require_refs(refs, "rouge_l");
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, rouge_l_single(pred, r, cfg.rouge_beta));
  return 100.0 * best;
}

MeteorAlignment meteor_align(const TokenSeq& pred, const TokenSeq& ref) {
  constexpr std::size_t kUnaligned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> target(pred.size(), kUnaligned);
  std::vector<bool> used(ref.size(), false);

  const auto run_stage = [&](auto&& key) {
    std::vector<std::string> ref_keys;
    ref_keys.reserve(ref.size());
    for (const auto& t : ref.tokens) ref_keys.push_back(key(t));
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (target[i] != kUnaligned) continue;
      const std::string k = key(pred.tokens[i]);
      for (std::size_t j = 0; j < ref.size(); ++j) {
        if (!used[j] && ref_keys[j] == k) {
          used[j] = true;
          target[i] = j;
          break;
        }
      }
    }
  };
  run_stage([](const std::string& t) { return t; });
  run_stage([](const std::string& t) { return stem(t); });

  MeteorAlignment out;
  std::size_t prev_i = kUnaligned;
  std::size_t prev_j = kUnaligned;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (target[i] == kUnaligned) continue;
    ++out.matches;
    const bool continues = prev_i != kUnaligned && i == prev_i + 1 &&
                           target[i] == prev_j + 1;
    if (!continues) ++out.chunks;
    prev_i = i;
    prev_j = target[i];
  }
  return out;
}

double meteor(const TokenSeq& pred, std::span<const TokenSeq> refs,
              const MetricConfig& cfg) {
  require_refs(refs, "meteor");
  double best = 0.0;
  for (const auto& r : refs) best = std::max(best, meteor_single(pred, r, cfg));
  return 100.0 * best;
}

double self_bleu(std::span<const TokenSeq> preds, int n, const MetricConfig& cfg) {
  if (preds.size() < 2) return 0.0;
  double sum = 0.0;
  std::vector<TokenSeq> others;
  others.reserve(preds.size() - 1);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < preds.size(); ++j) {
      if (j != i) others.push_back(preds[j]);
    }
    sum += bleu(preds[i], others, n, cfg);
  }
  return sum / static_cast<double>(preds.size());
}

}  // namespace qgeval
