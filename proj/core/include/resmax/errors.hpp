#pragma once

#include <stdexcept>
#include <string>

namespace resmax {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range elements, mismatched ground sets,
/// infeasible budgets, invalid weights or tables.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// An enumeration or exact solve would exceed the configured work cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Cholesky factorization encountered a non-positive pivot.
class NotPositiveDefiniteError : public Error {
public:
    using Error::Error;
};

/// Curvature is undefined because some singleton value is numerically zero.
class DegenerateElementError : public Error {
public:
    DegenerateElementError(int element, const std::string& what)
        : Error(what), element_(element) {}

    int element() const { return element_; }

private:
    int element_;
};

/// An instance description or subset literal could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace resmax
