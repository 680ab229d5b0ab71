#pragma once

#include <cstddef>

namespace psdb::kernels {

// Execution policy for the data-parallel kernels. The parallel variants
// partition work per output slot and combine partials in a fixed order, so
// they produce bitwise-identical results to the serial references for any
// thread count.
enum class Exec { serial, parallel };

// g (m x m) <- squared column Gram of s (n x m, row-major):
// g[i][j] = (sum_k s[k][i] * s[k][j])^2.
void squared_col_gram_serial(const double* s, std::size_t n, std::size_t m, double* g);
void squared_col_gram_parallel(const double* s, std::size_t n, std::size_t m, double* g);
void squared_col_gram(const double* s, std::size_t n, std::size_t m, double* g, Exec exec);

// Sum of l1 distances over all ordered column pairs of a (n x m, row-major):
// sum_{i,j} ||a_col_i - a_col_j||_1.
double pairwise_col_l1_serial(const double* a, std::size_t n, std::size_t m);
double pairwise_col_l1_parallel(const double* a, std::size_t n, std::size_t m);
double pairwise_col_l1(const double* a, std::size_t n, std::size_t m, Exec exec);

// Number of worker threads the parallel variants would use.
int max_threads();

}  // namespace psdb::kernels
