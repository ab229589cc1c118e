#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace likert {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// CSV ingestion failure. Coordinates are 1-based positions in the source
// file, counting any header row / label column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t col)
        : Error(what), row(row), col(col) {}
    std::size_t row;
    std::size_t col;
};

// A constructed object violates a documented invariant (bad shape, bad
// bounds, duplicate labels, invalid generator spec, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Operands do not conform (matrix sizes, vector lengths).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Cholesky pivot collapsed: the constraint matrix is not positive definite.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

// The Jacobi sweep cap was hit before the off-diagonal mass vanished.
class NoConvergence : public Error {
public:
    using Error::Error;
};

// No usable embedding exists (no edges anywhere, or every eigenpair
// projects the datapoints onto a near-constant line).
class DegenerateProblem : public Error {
public:
    using Error::Error;
};

// One or more datapoints carry no ratings at all, so their mean is undefined.
class AllMissingColumn : public Error {
public:
    AllMissingColumn(const std::string& what, std::vector<std::size_t> columns)
        : Error(what), columns(std::move(columns)) {}
    std::vector<std::size_t> columns;  // 0-based datapoint indices
};

// A rank correlation was requested for a constant vector.
class ZeroVariance : public Error {
public:
    using Error::Error;
};

}  // namespace likert
