#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q outside (0, 1], or a deformed-only operation called with q = 1.
class InvalidDeformation : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (negative x, bad order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or product hit its term cap before meeting the tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A Fock truncation could not bring the tail below its threshold.
class TruncationInsufficient : public Error {
 public:
  using Error::Error;
};

/// Semi-infinite quadrature reached the domain cap before the tail died.
class DomainCapReached : public Error {
 public:
  using Error::Error;
};

/// A ratio whose denominator underflowed to zero.
class DivisionDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace qcs
