#pragma once

#include <stdexcept>
#include <string>

namespace bient {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (shape, normalization,
/// Hermiticity, finiteness).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A scalar argument lies outside the domain of a function.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Two computations that must agree by construction did not.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace bient
