#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordmap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A symbol or generator that does not belong to the alphabet in use.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// A precondition on the shape of a word failed (e.g. letter is not a square).
class WordShapeError : public Error {
 public:
  using Error::Error;
};

// Group or character-table data failed a structural check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured evaluation budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordmap
