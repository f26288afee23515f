#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perronkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
public:
    NotSquare(std::size_t rows, std::size_t cols)
        : Error("matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)),
          rows_(rows), cols_(cols) {}
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t rows_, cols_;
};

/// Entry error carrying a zero-based (row, col) position.
class EntryError : public Error {
public:
    EntryError(const std::string& what, std::size_t row, std::size_t col)
        : Error(what + " at (" + std::to_string(row) + ", " + std::to_string(col) + ")"),
          row_(row), col_(col) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_, col_;
};

class NegativeEntry : public EntryError {
public:
    NegativeEntry(std::size_t row, std::size_t col) : EntryError("negative entry", row, col) {}
};

class NonFiniteEntry : public EntryError {
public:
    NonFiniteEntry(std::size_t row, std::size_t col) : EntryError("non-finite entry", row, col) {}
};

class DuplicateEntry : public EntryError {
public:
    DuplicateEntry(std::size_t row, std::size_t col) : EntryError("duplicate entry", row, col) {}
};

/// Index error: a scaling component <= 0 or a sum == 0.
class IndexError : public Error {
public:
    IndexError(const std::string& what, std::size_t index)
        : Error(what + " at index " + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NonPositiveScale : public IndexError {
public:
    explicit NonPositiveScale(std::size_t i) : IndexError("non-positive scaling component", i) {}
};

/// A zero row (column) sum: by Lemma-2 type reasoning the matrix cannot be primitive.
class ZeroSum : public IndexError {
public:
    explicit ZeroSum(std::size_t i) : IndexError("zero sum (matrix cannot be primitive)", i) {}
};

class NotStochastic : public IndexError {
public:
    explicit NotStochastic(std::size_t i) : IndexError("row does not sum to 1", i) {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class InsufficientHistory : public Error {
public:
    InsufficientHistory() : Error("convergence history needs at least two entries") {}
};

class Breakdown : public Error {
public:
    Breakdown() : Error("power iteration broke down: A*v is zero") {}
};

class RootNotOne : public Error {
public:
    explicit RootNotOne(double root)
        : Error("Perron root of a stochastic matrix is not 1: " + std::to_string(root)), root_(root) {}
    double root() const noexcept { return root_; }

private:
    double root_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace perronkit
