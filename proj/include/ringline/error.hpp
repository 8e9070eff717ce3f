#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringline {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring expression. `position()` is a character offset into the input.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at offset " + std::to_string(position) + ": expected " + expected),
        position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

/// Grammatically valid expression that does not denote a ring we can build.
class SemanticError : public Error {
public:
  using Error::Error;
};

/// A tabulated ring failed the exhaustive axiom scan.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Ring order exceeds the configured bound.
class BoundError : public Error {
public:
  using Error::Error;
};

class NotAUnit : public Error {
public:
  using Error::Error;
};

/// An enumeration result contradicts an independently known count.
class CrossCheckError : public Error {
public:
  using Error::Error;
};

/// A quantity that must be the same for every point (or pair, or clique member) is not.
class HomogeneityError : public Error {
public:
  using Error::Error;
};

/// Two independent computations of the same object disagree.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace ringline
