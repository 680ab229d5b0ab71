#include "psdb/rank.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <random>

namespace psdb {

namespace {

Eigen::MatrixXd to_eigen(const NonnegMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    }
    return e;
}

}  // namespace

int numerical_rank(const NonnegMatrix& m, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw InvalidArgumentError("rank tolerance must lie in (0, 1)");
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > cutoff) ++rank;
    }
    return rank;
}

StochasticMatrix random_rank_r_stochastic(std::size_t n, std::size_t m, int r,
                                          std::uint64_t seed) {
    if (r < 1 || static_cast<std::size_t>(r) > std::min(n, m)) {
        throw InvalidArgumentError("rank must satisfy 1 <= r <= min(n, m)");
    }
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // 1 - U maps [0,1) onto (0,1].
    auto draw = [&] { return 1.0 - unif(gen); };

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<double> u(n * r), v(r * m);
        for (double& x : u) x = draw();
        for (double& x : v) x = draw();
        std::vector<double> prod(n * m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (int k = 0; k < r; ++k) {
                const double uik = u[i * r + k];
                for (std::size_t j = 0; j < m; ++j) prod[i * m + j] += uik * v[k * m + j];
            }
        }
        StochasticMatrix s = column_normalize(NonnegMatrix(n, m, std::move(prod)));
        if (numerical_rank(s.matrix()) == r) return s;
    }
    throw RankDeficientError(r);
}

}  // namespace psdb
