#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psdb {

// Base class for all library errors. Subclasses carry the offending
// indices/values where a caller can act on them.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeEntryError : Error {
    std::size_t row, col;
    double value;
    NegativeEntryError(std::size_t r, std::size_t c, double v)
        : Error("negative entry " + std::to_string(v) + " at row " + std::to_string(r) +
                ", column " + std::to_string(c) + " (0-based)"),
          row(r), col(c), value(v) {}
};

struct ZeroColumnError : Error {
    std::size_t col;
    explicit ZeroColumnError(std::size_t c)
        : Error("column " + std::to_string(c) + " (0-based) sums to zero"), col(c) {}
};

struct ZeroMatrixError : Error {
    ZeroMatrixError() : Error("matrix has zero total sum") {}
};

struct NonPositiveFactorError : Error {
    NonPositiveFactorError() : Error("scaling factors must be strictly positive") {}
};

struct RankDeficientError : Error {
    explicit RankDeficientError(int wanted)
        : Error("failed to generate a rank-" + std::to_string(wanted) +
                " matrix after 10 attempts") {}
};

struct NoDependenceError : Error {
    using Error::Error;
};

struct SignDegeneracyError : Error {
    SignDegeneracyError() : Error("dependence coefficients lack a positive or negative entry") {}
};

struct EpsOutOfIntervalError : Error {
    double eps, lo, hi;
    EpsOutOfIntervalError(double e, double l, double h)
        : Error("epsilon " + std::to_string(e) + " outside [" + std::to_string(l) + ", " +
                std::to_string(h) + "]"),
          eps(e), lo(l), hi(h) {}
};

struct SolverFailureError : Error {
    int iterations;
    double gap;
    SolverFailureError(int it, double g)
        : Error("QP solver exhausted " + std::to_string(it) +
                " iterations with gap " + std::to_string(g)),
          iterations(it), gap(g) {}
};

struct ZeroObjectiveVectorError : Error {
    ZeroObjectiveVectorError() : Error("objective vector is identically zero") {}
};

struct DimensionTooLargeError : Error {
    explicit DimensionTooLargeError(std::size_t m)
        : Error("grid oracle limited to dimension 4, got " + std::to_string(m)) {}
};

struct LengthMismatchError : Error {
    LengthMismatchError() : Error("distributions have different lengths") {}
};

struct NotADistributionError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NotPSDError : Error {
    std::size_t index;
    std::string side;  // "row" or "col"
    NotPSDError(std::size_t i, std::string s)
        : Error(s + " factor " + std::to_string(i) + " is not positive semidefinite"),
          index(i), side(std::move(s)) {}
};

struct NegativeSlackError : Error {
    std::size_t vertex, facet;
    NegativeSlackError(std::size_t v, std::size_t f, double s)
        : Error("vertex " + std::to_string(v) + " violates facet " + std::to_string(f) +
                " with slack " + std::to_string(s)),
          vertex(v), facet(f) {}
};

struct UnsupportedFamilyError : Error {
    explicit UnsupportedFamilyError(const std::string& name)
        : Error("unknown polytope family '" + name + "'") {}
};

struct BadParamError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

}  // namespace psdb
