#include "psdb/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace psdb {

namespace {

std::vector<double> validate_and_clamp(std::size_t rows, std::size_t cols,
                                       std::vector<double> entries) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgumentError("matrix dimensions must be positive");
    }
    if (entries.size() != rows * cols) {
        throw DimensionMismatchError("entry count does not match rows*cols");
    }
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        double v = entries[idx];
        if (v < 0.0) {
            if (v < -NonnegMatrix::kClampBand) {
                throw NegativeEntryError(idx / cols, idx % cols, v);
            }
            entries[idx] = 0.0;
        }
    }
    return entries;
}

}  // namespace

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(validate_and_clamp(rows, cols, std::vector<double>(rows * cols, 0.0))) {}

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(validate_and_clamp(rows, cols, std::move(entries))) {}

NonnegMatrix NonnegMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw InvalidArgumentError("matrix dimensions must be positive");
    }
    const std::size_t m = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * m);
    for (const auto& r : rows) {
        if (r.size() != m) throw DimensionMismatchError("ragged row lengths");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return NonnegMatrix(rows.size(), m, std::move(flat));
}

std::vector<double> NonnegMatrix::column(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * cols_ + j];
    return c;
}

double NonnegMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double NonnegMatrix::total_sum() const {
    return std::accumulate(data_.begin(), data_.end(), 0.0);
}

std::vector<double> NonnegMatrix::column_sums() const {
    std::vector<double> s(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s[j] += data_[i * cols_ + j];
    }
    return s;
}

std::vector<double> NonnegMatrix::row_sums() const {
    std::vector<double> s(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s[i] += data_[i * cols_ + j];
    }
    return s;
}

bool NonnegMatrix::row_is_nonzero(std::size_t i, double tol) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (data_[i * cols_ + j] > tol) return true;
    }
    return false;
}

std::size_t NonnegMatrix::nonzero_row_count(double tol) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < rows_; ++i) count += row_is_nonzero(i, tol);
    return count;
}

StochasticMatrix::StochasticMatrix(NonnegMatrix base) : base_(std::move(base)) {
    const auto sums = base_.column_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (std::abs(sums[j] - 1.0) > kColumnSumTol) {
            throw NotADistributionError("column " + std::to_string(j) + " sums to " +
                                        std::to_string(sums[j]) + ", expected 1");
        }
    }
}

JointDistribution::JointDistribution(NonnegMatrix base)
    : base_(std::move(base)), p_(base_.row_sums()), q_(base_.column_sums()) {
    const double total = base_.total_sum();
    if (std::abs(total - 1.0) > kTotalSumTol) {
        throw NotADistributionError("entries sum to " + std::to_string(total) + ", expected 1");
    }
}

StochasticMatrix column_normalize(const NonnegMatrix& m) {
    const auto sums = m.column_sums();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (sums[j] <= 1e-14) throw ZeroColumnError(j);
    }
    std::vector<double> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i * m.cols() + j] = m(i, j) / sums[j];
        }
    }
    return StochasticMatrix(NonnegMatrix(m.rows(), m.cols(), std::move(out)));
}

JointDistribution global_normalize(const NonnegMatrix& m) {
    const double total = m.total_sum();
    if (total <= 1e-14) throw ZeroMatrixError();
    std::vector<double> out(m.data());
    for (double& v : out) v /= total;
    return JointDistribution(NonnegMatrix(m.rows(), m.cols(), std::move(out)));
}

NonnegMatrix scale(const NonnegMatrix& m, const std::vector<double>& row_factors,
                   const std::vector<double>& col_factors) {
    if (row_factors.size() != m.rows() || col_factors.size() != m.cols()) {
        throw DimensionMismatchError("factor vector lengths must match matrix dimensions");
    }
    for (double f : row_factors) {
        if (!(f > 0.0)) throw NonPositiveFactorError();
    }
    for (double f : col_factors) {
        if (!(f > 0.0)) throw NonPositiveFactorError();
    }
    std::vector<double> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i * m.cols() + j] = row_factors[i] * m(i, j) * col_factors[j];
        }
    }
    return NonnegMatrix(m.rows(), m.cols(), std::move(out));
}

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

NonnegMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string field = line.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            const char* begin = field.c_str();
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            while (end && *end == ' ') ++end;
            if (end == begin || (end && *end != '\0')) {
                throw ParseError("line " + std::to_string(lineno) + ": cannot parse field '" +
                                 field + "'");
            }
            row.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(rows.front().size()) + " fields, got " +
                             std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix file");
    return NonnegMatrix::from_rows(rows);
}

NonnegMatrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const NonnegMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv_file(const std::string& path, const NonnegMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_matrix_csv(out, m);
}

}  // namespace psdb
