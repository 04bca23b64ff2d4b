#ifndef CONDLAB_ERROR_HPP
#define CONDLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condlab {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, ring header or fixture text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Operands live in different rings, or shapes/orders disagree.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Degree cap, exponent width or iteration cap reached.
class ComputationLimit : public Error {
public:
  using Error::Error;
};

/// A genericity or nodality certificate failed.
class CertificateFailure : public Error {
public:
  using Error::Error;
};

/// Randomized construction gave up after its retry budget.
class RetryBudgetExhausted : public Error {
public:
  using Error::Error;
};

/// Internal consistency check failed; indicates an engine bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace condlab

#endif
