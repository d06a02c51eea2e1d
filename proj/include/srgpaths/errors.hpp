#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srgpaths {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex index is out of range, duplicated, or forms a loop.
class InvalidVertex : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a hard size cap (graph vertex cap, isomorphism cap).
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a strongly regular input was given something else.
class NotSrg : public Error {
 public:
  using Error::Error;
};

/// A parameter quadruple is infeasible (negative component, broken identity).
class InfeasibleResult : public Error {
 public:
  using Error::Error;
};

/// A generator argument is outside the family's valid range.
class BadOrder : public Error {
 public:
  using Error::Error;
};

/// An index selects a nonexistent catalog entry.
class BadIndex : public Error {
 public:
  using Error::Error;
};

/// A witness construction requires a primitive strongly regular graph.
class ImprimitiveInput : public Error {
 public:
  using Error::Error;
};

/// A counting argument inside a witness construction found an empty
/// candidate set. Unreachable on valid input; the test suite proves it.
class ProofViolation : public Error {
 public:
  using Error::Error;
};

/// The order is below the threshold where the pattern is guaranteed.
class BelowThreshold : public Error {
 public:
  using Error::Error;
};

/// graph6 decoding failure, with the byte offset of the defect.
class MalformedGraph6 : public Error {
 public:
  MalformedGraph6(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Latin square property violated (repeated symbol in a row or column).
class NotLatin : public Error {
 public:
  using Error::Error;
};

/// A grid has inconsistent shape or unparseable cells.
class Ragged : public Error {
 public:
  using Error::Error;
};

/// Steiner triple system invariant violated; names the offending pair.
class NotSts : public Error {
 public:
  using Error::Error;
};

/// Two Latin squares fail the orthogonality check.
class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

}  // namespace srgpaths
