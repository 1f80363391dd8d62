#include "qgeval/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgeval {

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

ScoreMatrix::ScoreMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ScoreMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ScoreMatrix ScoreMatrix::transposed() const {
  ScoreMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void ScoreMatrix::validate() const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const double v = data_[k];
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("ScoreMatrix: entry (" + std::to_string(k / cols_) +
                                  ", " + std::to_string(k % cols_) +
                                  ") is negative or not finite");
    }
  }
}

namespace {

struct SquareSolution {
  std::vector<std::size_t> col_of;  // row -> column
  std::vector<double> u;            // row potentials
  std::vector<double> v;            // column potentials
};

// Shortest augmenting path Kuhn-Munkres for a square cost matrix
// (minimization). Returns an optimal matching and optimal dual potentials.
SquareSolution min_cost_matching(const std::vector<double>& cost, std::size_t n) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based; index 0 is the virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  SquareSolution out;
  out.col_of.assign(n, 0);
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  for (std::size_t j = 1; j <= n; ++j) out.col_of[p[j] - 1] = j - 1;
  return out;
}

// Rewrites `col_of` into the lexicographically smallest perfect matching
// of the equality subgraph. Every perfect matching of that subgraph is
// optimal by complementary slackness, so only the tie-break changes.
void lexicographic_min(std::vector<std::size_t>& col_of,
                       const std::vector<char>& tight, std::size_t n) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < n; ++r) row_of[col_of[r]] = r;

  std::vector<std::size_t> moves_to(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t freed = col_of[i];
    // Rows > i that can shift along tight edges so that some column becomes
    // free while `freed` is taken over.
    std::fill(moves_to.begin(), moves_to.end(), kNone);
    queue.assign(1, freed);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t c = queue[q];
      for (std::size_t r = i + 1; r < n; ++r) {
        if (moves_to[r] == kNone && tight[r * n + c]) {
          moves_to[r] = c;
          queue.push_back(col_of[r]);
        }
      }
    }
    std::size_t best = kNone;
    for (const std::size_t c : queue) {
      if (tight[i * n + c] && c < best) best = c;
    }
    if (best == freed || best == kNone) continue;

    std::size_t r = row_of[best];
    col_of[i] = best;
    row_of[best] = i;
    while (r != kNone) {
      const std::size_t c = moves_to[r];
      const std::size_t displaced = c == freed ? kNone : row_of[c];
      col_of[r] = c;
      row_of[c] = r;
      r = displaced;
    }
  }
}

Assignment finish(const ScoreMatrix& matrix,
                  std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Assignment out;
  for (const auto& [i, j] : pairs) out.s += matrix(i, j);
  out.pairs = std::move(pairs);
  return out;
}

}  // namespace

Assignment solve(const ScoreMatrix& matrix) {
  matrix.validate();
  if (matrix.empty()) return {};

  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();
  const std::size_t dim = std::max(m, n);

  double top = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (const double x : matrix.row(i)) top = std::max(top, x);
  }
  // Dummy rows/columns score 0, i.e. cost `top`.
  std::vector<double> cost(dim * dim, top);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * dim + j] = top - matrix(i, j);
  }

  SquareSolution sol = min_cost_matching(cost, dim);

  std::vector<char> tight(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      tight[i * dim + j] = cost[i * dim + j] - sol.u[i] - sol.v[j] <= kScoreTolerance;
    }
  }
  lexicographic_min(sol.col_of, tight, dim);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(std::min(m, n));
  for (std::size_t i = 0; i < m; ++i) {
    if (sol.col_of[i] < n) pairs.emplace_back(i, sol.col_of[i]);
  }
  return finish(matrix, std::move(pairs));
}

Assignment brute_force_solve(const ScoreMatrix& matrix) {
  matrix.validate();
  if (matrix.rows() > kBruteForceMaxDim || matrix.cols() > kBruteForceMaxDim) {
    throw std::invalid_argument("brute_force_solve: dimension exceeds " +
                                std::to_string(kBruteForceMaxDim));
  }
  if (matrix.empty()) return {};

  // Enumerate injections from the smaller side into the larger one.
  const bool by_rows = matrix.rows() <= matrix.cols();
  const std::size_t small = by_rows ? matrix.rows() : matrix.cols();
  const std::size_t large = by_rows ? matrix.cols() : matrix.rows();
  const auto value = [&](std::size_t a, std::size_t b) {
    return by_rows ? matrix(a, b) : matrix(b, a);
  };

  std::vector<std::size_t> pick(small);
  std::vector<char> taken(large, 0);
  bool have_best = false;
  double best_s = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> best_pairs;

  const auto consider = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double s = 0.0;
    for (std::size_t a = 0; a < small; ++a) {
      s += value(a, pick[a]);
      pairs.emplace_back(by_rows ? a : pick[a], by_rows ? pick[a] : a);
    }
    std::sort(pairs.begin(), pairs.end());
    const bool better = !have_best || s > best_s + kScoreTolerance;
    const bool tie = have_best && std::abs(s - best_s) <= kScoreTolerance;
    if (better || (tie && pairs < best_pairs)) {
      have_best = true;
      if (better) best_s = s;
      best_pairs = std::move(pairs);
    }
  };

  const auto recurse = [&](auto&& self, std::size_t a) -> void {
    if (a == small) {
      consider();
      return;
    }
    for (std::size_t b = 0; b < large; ++b) {
      if (taken[b]) continue;
      taken[b] = 1;
      pick[a] = b;
      self(self, a + 1);
      taken[b] = 0;
    }
  };
  recurse(recurse, 0);
  return finish(matrix, std::move(best_pairs));
}

}  // namespace qgeval
