#include "psdb/kernels.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace psdb::kernels {

namespace {

// Below this many flops the fork/join overhead dominates.
constexpr std::size_t kParallelCutoff = 1u << 16;

inline double col_dot(const double* s, std::size_t n, std::size_t m, std::size_t i,
                      std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += s[k * m + i] * s[k * m + j];
    return acc;
}

inline double col_l1(const double* a, std::size_t n, std::size_t m, std::size_t i,
                     std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::abs(a[k * m + i] - a[k * m + j]);
    return acc;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void squared_col_gram_serial(const double* s, std::size_t n, std::size_t m, double* g) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double d = col_dot(s, n, m, i, j);
            g[i * m + j] = g[j * m + i] = d * d;
        }
    }
}

void squared_col_gram_parallel(const double* s, std::size_t n, std::size_t m, double* g) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double d = col_dot(s, n, m, i, j);
            g[i * m + j] = g[j * m + i] = d * d;
        }
    }
}

void squared_col_gram(const double* s, std::size_t n, std::size_t m, double* g, Exec exec) {
    if (exec == Exec::parallel && n * m * m >= kParallelCutoff) {
        squared_col_gram_parallel(s, n, m, g);
    } else {
        squared_col_gram_serial(s, n, m, g);
    }
}

double pairwise_col_l1_serial(const double* a, std::size_t n, std::size_t m) {
    // Accumulate one partial per leading column, then combine in index order;
    // the parallel variant reproduces exactly this summation order.
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double part = 0.0;
        for (std::size_t j = i + 1; j < m; ++j) part += col_l1(a, n, m, i, j);
        total += 2.0 * part;
    }
    return total;
}

double pairwise_col_l1_parallel(const double* a, std::size_t n, std::size_t m) {
    std::vector<double> parts(m, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::size_t i = 0; i < m; ++i) {
        double part = 0.0;
        for (std::size_t j = i + 1; j < m; ++j) part += col_l1(a, n, m, i, j);
        parts[i] = part;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += 2.0 * parts[i];
    return total;
}

double pairwise_col_l1(const double* a, std::size_t n, std::size_t m, Exec exec) {
    if (exec == Exec::parallel && n * m * m >= kParallelCutoff) {
        return pairwise_col_l1_parallel(a, n, m);
    }
    return pairwise_col_l1_serial(a, n, m);
}

}  // namespace psdb::kernels
