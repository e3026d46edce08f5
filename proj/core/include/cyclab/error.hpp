#pragma once

#include <stdexcept>
#include <string>

namespace cyclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A jet is too short to produce the requested coefficients.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Floating-point failure: overflow, underflow, or an iteration that did not converge.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cyclab
