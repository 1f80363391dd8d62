#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qgeval/text.hpp"

namespace qgeval {

enum class MetricId { BLEU1, BLEU2, BLEU4, ROUGE_L, METEOR, QBLEU1 };

std::string_view to_string(MetricId id);
std::optional<MetricId> parse_metric(std::string_view name);

// Parameters of the sequence-level scorers. All must be strictly positive.
struct MetricConfig {
  double bleu_smoothing = 1e-9;
  double rouge_beta = 1.2;
  double meteor_alpha = 0.9;
  double meteor_beta = 3.0;
  double meteor_gamma = 0.5;

  // Throws std::invalid_argument on a non-positive parameter.
  void validate() const;
};

// Sentence-level BLEU on a 0-100 scale. Clipped counts use the maximum
// count of each n-gram over all references; the brevity penalty uses the
// reference length closest to the prediction (shorter on ties). An order
// with no clipped match contributes `bleu_smoothing` as its precision.
// Orders longer than the prediction are left out of the geometric mean.
double bleu(const TokenSeq& pred, std::span<const TokenSeq> refs, int max_n,
            const MetricConfig& cfg = {});

// LCS-based F-measure with recall weight `rouge_beta`; max over references.
double rouge_l(const TokenSeq& pred, std::span<const TokenSeq> refs,
               const MetricConfig& cfg = {});

// Result of aligning one prediction against one reference.
struct MeteorAlignment {
  std::size_t matches = 0;
  std::size_t chunks = 0;
};

// Greedy two-stage unigram alignment: exact tokens first, then Porter stems
// on whatever is still unaligned.
MeteorAlignment meteor_align(const TokenSeq& pred, const TokenSeq& ref);

// METEOR-style score built on meteor_align(): harmonic F-mean weighted by
// `meteor_alpha` and a fragmentation penalty gamma * (chunks/matches)^beta.
// No synonym or paraphrase matching. Max over references.
double meteor(const TokenSeq& pred, std::span<const TokenSeq> refs,
              const MetricConfig& cfg = {});

// Mean BLEU-n of each prediction against all the others; 0 for fewer than
// two predictions.
double self_bleu(std::span<const TokenSeq> preds, int n = 2,
                 const MetricConfig& cfg = {});

}  // namespace qgeval
