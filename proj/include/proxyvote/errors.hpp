#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxyvote {

// Malformed profile, ballot length mismatch, inconsistent revealed vote.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMajorityThreshold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoreNotCommon : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public std::runtime_error {
 public:
  RangeError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NoReviews : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyAfterFilter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace proxyvote
