#pragma once

#include <cstdint>

#include "psdb/matrix.hpp"

namespace psdb {

// Relative singular-value threshold that defines numerical rank. Exposed so
// stress tests can tighten or loosen it; reports record the value used.
constexpr double kDefaultRankTol = 1e-9;

// Count of singular values above rel_tol * sigma_max. The all-zero matrix
// has rank 0.
int numerical_rank(const NonnegMatrix& m, double rel_tol = kDefaultRankTol);

// column_normalize(U*V) with U (n x r), V (r x m) drawn uniform on (0,1].
// Regenerates (up to 10 times) until the numerical rank equals r.
StochasticMatrix random_rank_r_stochastic(std::size_t n, std::size_t m, int r,
                                          std::uint64_t seed);

}  // namespace psdb
