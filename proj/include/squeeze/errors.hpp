#pragma once

#include <stdexcept>
#include <string>

namespace squeeze {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed rational literal or zero denominator.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation precondition (e.g. theta on the wrong side of c1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (Bernoulli table) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Series depth needed to reach a requested width exceeds the depth cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Witness search, bisection or refinement could not produce a certificate.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace squeeze
