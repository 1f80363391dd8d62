#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "qgeval/assignment.hpp"

namespace qgeval {

// Random non-negative matrix with rows, cols drawn from [0, max_dim].
// With `integer_valued`, entries are small integers so ties are frequent.
ScoreMatrix random_score_matrix(std::mt19937_64& gen, std::size_t max_dim,
                                bool integer_valued);

struct SelftestOptions {
  std::size_t trials = 1000;
  std::size_t max_dim = 7;
  std::uint64_t seed = 13;
};

// Property suite for solve() against brute_force_solve(): optimality, the
// pair-count and disjointness constraints, identical tie-breaks, row and
// column permutation equivariance, scale equivariance and monotonicity.
// Writes one line per property; returns true if all hold.
bool run_assignment_selftest(const SelftestOptions& opts, std::ostream& log);

}  // namespace qgeval
