#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chained {

/// Base class for every error raised on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (bad n, k, square, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The object is defined only for circular boards with an even number of boards.
class UnsupportedDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Syntactically malformed document or string.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an invariant of the object it claims to be.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out.empty() ? std::string("validation failed") : out;
  }

  std::vector<std::string> problems_;
};

/// Raised when a result that must hold mathematically does not: a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome of a validator: empty problem list means valid.
struct Validation {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  explicit operator bool() const { return ok(); }

  void fail(std::string message) { problems.push_back(std::move(message)); }

  /// Throws ValidationError when not ok.
  void require() const {
    if (!ok()) throw ValidationError(problems);
  }
};

}  // namespace chained
