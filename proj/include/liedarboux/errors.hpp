#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ld {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an argument that violates a documented precondition
/// (odd interval count, non-orthonormal frame, mismatched grids, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text. `offset()` is the byte offset of the
/// offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name)
      : ParseError(offset, "unknown identifier '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Expression evaluation produced a non-finite value. `node()` is the
/// printed form of the subexpression that failed.
class DomainError : public Error {
 public:
  DomainError(const std::string& node, const std::string& message)
      : Error("domain error in '" + node + "': " + message), node_(node) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

/// A rational map hit its pole (north pole of the indicatrix, coincident
/// Riccati solutions, Moebius denominator).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Geometric input too degenerate to process (straight line given to the
/// axis fit, empty residual input, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Imaginary residue of a reconstructed tangent exceeded its tolerance.
class IntegrationDrift : public Error {
 public:
  using Error::Error;
};

}  // namespace ld
