#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algact {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (non-square, singular,
/// rank-deficient, mismatched ranks, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation could not reach a verdict within its search bounds, e.g. a
/// determinant that trial division could not factor. Never means "false".
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace algact
