#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simrank {

/// Base of every error raised by the library. The CLI maps these to the
/// "data error" exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class MissingColumn : public Error {
public:
    explicit MissingColumn(std::string column)
        : Error("missing column '" + column + "'"), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// A cell that could not be read as a finite decimal number. Row and column
/// are 1-based positions in the source file (row 1 is the header).
class ParseError : public Error {
public:
    ParseError(std::size_t row, std::size_t col, const std::string& what)
        : Error("parse error at row " + std::to_string(row) + ", column " +
                std::to_string(col) + ": " + what),
          row_(row), col_(col) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

class DuplicatePlayer : public Error {
public:
    explicit DuplicatePlayer(std::string player)
        : Error("duplicate player '" + player + "'"), player_(std::move(player)) {}
    const std::string& player() const noexcept { return player_; }

private:
    std::string player_;
};

class EmptyDataset : public Error {
public:
    EmptyDataset() : Error("dataset has no data rows") {}
};

class InvalidDataset : public Error {
public:
    using Error::Error;
};

class UnknownCriterion : public Error {
public:
    explicit UnknownCriterion(std::string criterion)
        : Error("unknown criterion '" + criterion + "'"), criterion_(std::move(criterion)) {}
    const std::string& criterion() const noexcept { return criterion_; }

private:
    std::string criterion_;
};

class UnknownPlayer : public Error {
public:
    explicit UnknownPlayer(std::string player)
        : Error("unknown player '" + player + "'"), player_(std::move(player)) {}
    const std::string& player() const noexcept { return player_; }

private:
    std::string player_;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class ConstantColumn : public Error {
public:
    ConstantColumn() : Error("correlation undefined for a constant column") {}
};

class InsufficientSamples : public Error {
public:
    explicit InsufficientSamples(long long n)
        : Error("need at least 3 samples, got " + std::to_string(n)) {}
};

class KOutOfRange : public Error {
public:
    KOutOfRange(std::size_t k, std::size_t max)
        : Error("k = " + std::to_string(k) + " out of range [1, " + std::to_string(max) + "]") {}
};

class InvalidMetric : public Error {
public:
    using Error::Error;
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("scatter series has no points") {}
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace simrank
