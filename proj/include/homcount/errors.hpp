#ifndef HOMCOUNT_ERRORS_HPP
#define HOMCOUNT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcount {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed one of the documented size budgets
/// (canonicalization, enumeration, map materialization, ...).
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A decoder was handed a value that no valid input could have produced.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// A construction's mathematical precondition did not hold, or its output
/// failed self-verification. Never swallowed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace homcount

#endif  // HOMCOUNT_ERRORS_HPP
