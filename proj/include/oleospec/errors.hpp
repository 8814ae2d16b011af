#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oleospec {

// Error taxonomy. The CLI maps these onto exit codes:
//   InvalidInputError (and subclasses) -> 2, IoError -> 3, NumericalError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: bad shapes, bad vocabulary, invalid configuration.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Input that is structurally valid but unusable (constant spectrum,
// single-class training set). Never produces NaN output downstream.
class DegenerateInputError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

// Malformed file content; carries the 1-based line number.
class ParseError : public InvalidInputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InvalidInputError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Numerical failure: NaN loss, failed factorization.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace oleospec
