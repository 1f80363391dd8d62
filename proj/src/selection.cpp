#include "qgeval/selection.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qgeval {

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // Largest multiple of bound that fits, so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

std::vector<Candidate> select_rand_k(std::span<const Candidate> cands, std::size_t k,
                                     std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("select_rand_k: k must be at least 1");
  std::vector<std::size_t> idx(cands.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t take = std::min(k, cands.size());
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(gen, idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(take);
  std::sort(idx.begin(), idx.end());

  std::vector<Candidate> out;
  out.reserve(take);
  for (const auto i : idx) out.push_back(cands[i]);
  return out;
}

std::vector<Candidate> select_top1(std::span<const Candidate> cands) {
  if (cands.empty()) return {};
  const auto it = std::min_element(
      cands.begin(), cands.end(),
      [](const Candidate& a, const Candidate& b) { return a.origin < b.origin; });
  return {*it};
}

std::vector<Candidate> select_rank_k(std::span<const Candidate> cands, std::size_t k,
                                     double threshold, bool dedup) {
  for (const auto& c : cands) {
    if (!c.answerability) {
      throw std::invalid_argument("select_rank_k: candidate " + std::to_string(c.origin) +
                                  " (\"" + c.text.raw + "\") has no answerability score");
    }
  }

  std::vector<Candidate> pool;
  if (dedup) {
    std::vector<const Candidate*> by_origin;
    for (const auto& c : cands) by_origin.push_back(&c);
    std::stable_sort(by_origin.begin(), by_origin.end(),
                     [](const Candidate* a, const Candidate* b) { return a->origin < b->origin; });
    for (const Candidate* c : by_origin) {
      const bool seen = std::any_of(pool.begin(), pool.end(), [&](const Candidate& p) {
        return p.text.tokens == c->text.tokens;
      });
      if (!seen) pool.push_back(*c);
    }
  } else {
    pool.assign(cands.begin(), cands.end());
  }

  std::erase_if(pool, [&](const Candidate& c) { return *c.answerability < threshold; });
  std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    if (*a.answerability != *b.answerability) return *a.answerability > *b.answerability;
    return a.origin < b.origin;
  });
  if (pool.size() > k) pool.resize(k);
  return pool;
}

std::string SelectionSpec::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Rand: return "rand@" + std::to_string(k);
    case Kind::Top1: return "top@1";
    case Kind::Rank: return "rank@" + std::to_string(k);
  }
  return "none";
}

SelectionSpec parse_selection(std::string_view raw) {
  std::string lowered(raw);
  for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const std::string_view text = lowered;
  SelectionSpec spec;
  if (text.empty() || text == "none") return spec;
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("selection must look like rand@K, top@1 or rank@K");
  }
  const auto name = text.substr(0, at);
  const auto num = text.substr(at + 1);
  std::size_t k = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
  if (ec != std::errc() || ptr != num.data() + num.size() || k == 0) {
    throw std::invalid_argument("selection size must be a positive integer: " +
                                std::string(text));
  }
  spec.k = k;
  if (name == "rand") {
    spec.kind = SelectionSpec::Kind::Rand;
  } else if (name == "rank") {
    spec.kind = SelectionSpec::Kind::Rank;
  } else if (name == "top") {
    if (k != 1) throw std::invalid_argument("only top@1 is supported");
    spec.kind = SelectionSpec::Kind::Top1;
  } else {
    throw std::invalid_argument("unknown selection strategy: " + std::string(text));
  }
  return spec;
}

std::vector<Candidate> apply_selection(std::span<const Candidate> cands,
                                       const SelectionSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case SelectionSpec::Kind::None: return {cands.begin(), cands.end()};
    case SelectionSpec::Kind::Rand: return select_rand_k(cands, spec.k, seed);
    case SelectionSpec::Kind::Top1: return select_top1(cands);
    case SelectionSpec::Kind::Rank:
      return select_rank_k(cands, spec.k, spec.threshold, spec.dedup);
  }
  return {};
}

}  // namespace qgeval
