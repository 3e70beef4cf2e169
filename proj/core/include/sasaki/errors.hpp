#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Field or structure evaluated outside its declared domain of validity,
// or the data itself violates a domain requirement (P0 vanishing, artanh
// argument reaching +-1, point outside a grid rectangle, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Metric determinant fell below the degeneracy threshold.
class DegenerateMetricError : public Error {
public:
  using Error::Error;
};

// A frame failed its orthonormality invariant.
class FrameError : public Error {
public:
  using Error::Error;
};

// Quadrature could not reach the requested tolerance.
class AccuracyError : public Error {
public:
  using Error::Error;
};

// Iterative solver exhausted its budget; carries the residual history text.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// An operation asked for more derivative orders than the input can supply.
class CapabilityError : public Error {
public:
  using Error::Error;
};

// Input violated a stated precondition (e.g. a non-holomorphic map).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Expression parse/evaluation failure with a byte offset into the source.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace sasaki
