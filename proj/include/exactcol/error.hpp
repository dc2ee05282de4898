#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactcol {

enum class ErrorKind {
  kOutOfRange,
  kSelfLoop,
  kBadParameter,
  kParseError,
  kInconsistentHeader,
  kNotAPartition,
  kDisconnectedClass,
  kLengthMismatch,
  kBudgetExceeded,
  kNotATree,
  kNotACactus,
  kNotABlockGraph,
  kIncompleteLabeling,
  kNotFourRegular,
  kMalformedFormula,
  kLiftContractViolated,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` tells callers
// which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Text-format failure; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when a search exhausts its node budget. The answer is unknown, not
// negative.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorKind::kBudgetExceeded, what) {}
};

}  // namespace exactcol
