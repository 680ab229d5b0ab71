#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "psdb/errors.hpp"

namespace psdb {

// Dense nonnegative matrix, row-major. Values are immutable after
// construction; all operations return fresh matrices.
//
// Convention used throughout: columns are the probability distributions
// (a stochastic matrix has every COLUMN summing to 1).
class NonnegMatrix {
public:
    // Entries in [-kClampBand, 0) are clamped to 0; anything more negative
    // is rejected as a genuine sign error.
    static constexpr double kClampBand = 1e-12;

    NonnegMatrix(std::size_t rows, std::size_t cols);
    NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    static NonnegMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::vector<double> column(std::size_t j) const;
    const std::vector<double>& data() const { return data_; }

    double max_abs() const;
    double total_sum() const;
    std::vector<double> column_sums() const;
    std::vector<double> row_sums() const;

    bool row_is_nonzero(std::size_t i, double tol = 1e-12) const;
    std::size_t nonzero_row_count(double tol = 1e-12) const;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

// Nonnegative matrix whose every column sums to 1.
class StochasticMatrix {
public:
    static constexpr double kColumnSumTol = 1e-10;

    explicit StochasticMatrix(NonnegMatrix base);

    const NonnegMatrix& matrix() const { return base_; }
    std::size_t rows() const { return base_.rows(); }
    std::size_t cols() const { return base_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return base_(i, j); }

private:
    NonnegMatrix base_;
};

// Nonnegative matrix summing to 1 overall, with cached marginals:
// p over rows, q over columns.
class JointDistribution {
public:
    static constexpr double kTotalSumTol = 1e-10;

    explicit JointDistribution(NonnegMatrix base);

    const NonnegMatrix& matrix() const { return base_; }
    std::size_t rows() const { return base_.rows(); }
    std::size_t cols() const { return base_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return base_(i, j); }
    const std::vector<double>& p() const { return p_; }
    const std::vector<double>& q() const { return q_; }

private:
    NonnegMatrix base_;
    std::vector<double> p_, q_;
};

// Divides each column by its sum. Throws ZeroColumnError if a column sums
// to <= 1e-14.
StochasticMatrix column_normalize(const NonnegMatrix& m);

// Divides all entries by the total sum. Throws ZeroMatrixError if the total
// is <= 1e-14.
JointDistribution global_normalize(const NonnegMatrix& m);

// out[i][j] = row_factors[i] * m[i][j] * col_factors[j]. Rank-preserving.
NonnegMatrix scale(const NonnegMatrix& m, const std::vector<double>& row_factors,
                   const std::vector<double>& col_factors);

// CSV: one matrix row per line, comma-separated decimal entries, no header.
NonnegMatrix read_matrix_csv(std::istream& in);
NonnegMatrix read_matrix_csv_file(const std::string& path);
void write_matrix_csv(std::ostream& out, const NonnegMatrix& m);
void write_matrix_csv_file(const std::string& path, const NonnegMatrix& m);

// 12 significant digits, locale-independent.
std::string format_double(double v);

}  // namespace psdb
