#include "qgeval/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qgeval/selection.hpp"

namespace qgeval {
namespace {

double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> random_permutation(std::mt19937_64& gen, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[static_cast<std::size_t>(uniform_below(gen, i))]);
  }
  return p;
}

bool well_formed(const ScoreMatrix& x, const Assignment& a) {
  if (a.pairs.size() != std::min(x.rows(), x.cols())) return false;
  std::set<std::size_t> rows, cols;
  double s = 0.0;
  for (const auto& [i, j] : a.pairs) {
    if (i >= x.rows() || j >= x.cols()) return false;
    if (!rows.insert(i).second || !cols.insert(j).second) return false;
    s += x(i, j);
  }
  return std::abs(s - a.s) <= kScoreTolerance;
}

struct Check {
  const char* name;
  std::size_t failures = 0;
};

}  // namespace

ScoreMatrix random_score_matrix(std::mt19937_64& gen, std::size_t max_dim,
                                bool integer_valued) {
  const auto rows = static_cast<std::size_t>(uniform_below(gen, max_dim + 1));
  const auto cols = static_cast<std::size_t>(uniform_below(gen, max_dim + 1));
  ScoreMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      x(i, j) = integer_valued ? static_cast<double>(uniform_below(gen, 4)) : 100.0 * unit(gen);
    }
  }
  return x;
}

bool run_assignment_selftest(const SelftestOptions& opts, std::ostream& log) {
  std::mt19937_64 gen(opts.seed);
  Check optimal{"optimal S equals brute force"};
  Check formed{"k = min(m,n) disjoint pairs"};
  Check tiebreak{"same tie-break as brute force"};
  Check permuted{"row/column permutation equivariance"};
  Check scaled{"scale equivariance"};
  Check monotone{"monotone in every entry"};

  for (std::size_t t = 0; t < opts.trials; ++t) {
    const bool integer_valued = t % 2 == 1;
    const ScoreMatrix x = random_score_matrix(gen, opts.max_dim, integer_valued);
    const Assignment fast = solve(x);
    const Assignment slow = brute_force_solve(x);

    if (std::abs(fast.s - slow.s) > kScoreTolerance) ++optimal.failures;
    if (!well_formed(x, fast) || !well_formed(x, slow)) ++formed.failures;
    if (fast.pairs != slow.pairs) ++tiebreak.failures;

    // Permute rows and columns; with continuous entries the optimum is
    // unique, so the pairs must follow the permutation exactly.
    const auto pr = random_permutation(gen, x.rows());
    const auto pc = random_permutation(gen, x.cols());
    ScoreMatrix y(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) y(pr[i], pc[j]) = x(i, j);
    }
    const Assignment py = solve(y);
    bool perm_ok = std::abs(py.s - fast.s) <= kScoreTolerance;
    if (perm_ok && !integer_valued) {
      std::vector<std::pair<std::size_t, std::size_t>> mapped;
      for (const auto& [i, j] : fast.pairs) mapped.emplace_back(pr[i], pc[j]);
      std::sort(mapped.begin(), mapped.end());
      perm_ok = mapped == py.pairs;
    }
    if (!perm_ok) ++permuted.failures;

    const double c = 0.25 + 4.0 * unit(gen);
    ScoreMatrix z = x;
    for (std::size_t i = 0; i < z.rows(); ++i) {
      for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) *= c;
    }
    const Assignment sz = solve(z);
    if (std::abs(sz.s - c * fast.s) > kScoreTolerance * std::max(1.0, c) ||
        sz.pairs != fast.pairs) {
      ++scaled.failures;
    }

    if (!x.empty()) {
      ScoreMatrix w = x;
      const auto i = static_cast<std::size_t>(uniform_below(gen, w.rows()));
      const auto j = static_cast<std::size_t>(uniform_below(gen, w.cols()));
      w(i, j) += 50.0 * unit(gen);
      if (solve(w).s < fast.s - kScoreTolerance) ++monotone.failures;
    }
  }

  bool all = true;
  for (const Check* c : {&optimal, &formed, &tiebreak, &permuted, &scaled, &monotone}) {
    log << (c->failures == 0 ? "PASS " : "FAIL ") << c->name << " (" << opts.trials
        << " trials, " << c->failures << " failures)\n";
    all = all && c->failures == 0;
  }
  return all;
}

}  // namespace qgeval
