#pragma once

#include <stdexcept>
#include <string>

namespace hypercone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix/polynomial dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An integer parameter (derivative order, gallery size, degree cap) is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Floating-point evidence is too weak to decide (root residual too large,
/// eigenvalue inside the ambiguous zero band, ...).
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, points, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercone
