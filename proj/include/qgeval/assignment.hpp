#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qgeval {

inline constexpr double kScoreTolerance = 1e-9;

// Dense m x n matrix of pairwise scores M(prediction_i, reference_j).
// Entries must be finite and non-negative.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  ScoreMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  ScoreMatrix transposed() const;

  // Throws std::invalid_argument on a negative or non-finite entry.
  void validate() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Assignment {
  // (prediction index, reference index), sorted by prediction index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double s = 0.0;
};

// Maximum-score one-to-one assignment of min(m, n) pairs (Kuhn-Munkres on
// the zero-padded square cost matrix, O(max(m, n)^3)). Among co-optimal
// assignments (scores equal within kScoreTolerance) the lexicographically
// smallest pair list is returned.
Assignment solve(const ScoreMatrix& matrix);

inline constexpr std::size_t kBruteForceMaxDim = 8;

// Exhaustive reference solver with the same contract and tie-break as
// solve(). Refuses matrices with a dimension above kBruteForceMaxDim.
Assignment brute_force_solve(const ScoreMatrix& matrix);

}  // namespace qgeval
