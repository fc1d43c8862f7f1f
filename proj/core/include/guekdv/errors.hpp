#pragma once

#include <stdexcept>
#include <string>

namespace guekdv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

/// A request exceeds the configured enumeration or computation bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Alias used by the intersection-number code for the same condition.
using BudgetExceeded = BoundExceeded;

/// An order-by-order linear solve found an inconsistent equation.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// An operator that must live on a fixed set of degrees has other terms.
class SupportViolation : public Error {
 public:
  using Error::Error;
};

/// A symbolic expression refers to lattice indices outside the substitution window.
class WindowExceeded : public Error {
 public:
  using Error::Error;
};

/// Series with incompatible truncation were combined, or a coefficient
/// was requested above the known precision.
class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

/// Pseudodifferential composition would need terms below the kept depth.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

/// Two caches disagree on a map count.
class CacheConflict : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (rationals, exponent keys, config files, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace guekdv
