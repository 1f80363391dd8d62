#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgeval/text.hpp"

namespace qgeval {

// An overgenerated question. `origin` is its generation order; origin 0 is
// the greedy-decoded one.
struct Candidate {
  TokenSeq text;
  std::optional<double> answerability;
  std::size_t origin = 0;
};

// Uniform integer in [0, bound) drawn from a 64-bit Mersenne Twister by
// rejection, so the sequence is identical on every platform (unlike
// std::uniform_int_distribution).
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

// Rand@k: min(k, |cands|) candidates sampled without replacement (partial
// Fisher-Yates driven by std::mt19937_64 seeded with `seed`). Returned in
// input order. Throws std::invalid_argument if k == 0.
std::vector<Candidate> select_rand_k(std::span<const Candidate> cands, std::size_t k,
                                     std::uint64_t seed);

// Top@1: the origin-0 candidate, or the lowest origin if none is 0.
std::vector<Candidate> select_top1(std::span<const Candidate> cands);

// Rank@k: drop duplicate texts (the earliest origin survives) unless
// `dedup` is false, drop candidates below `threshold`, sort by answerability
// descending then origin ascending, keep the first k. Throws
// std::invalid_argument naming the first candidate without a score.
std::vector<Candidate> select_rank_k(std::span<const Candidate> cands, std::size_t k,
                                     double threshold = 0.5, bool dedup = true);

struct SelectionSpec {
  enum class Kind { None, Rand, Top1, Rank } kind = Kind::None;
  std::size_t k = 5;
  double threshold = 0.5;
  bool dedup = true;

  std::string to_string() const;
};

// Parses "none", "rand@K", "top@1" or "rank@K".
SelectionSpec parse_selection(std::string_view text);

std::vector<Candidate> apply_selection(std::span<const Candidate> cands,
                                       const SelectionSpec& spec, std::uint64_t seed);

}  // namespace qgeval
