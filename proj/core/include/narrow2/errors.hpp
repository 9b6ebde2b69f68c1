#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace narrow2 {

// Violated precondition on an argument (non-prime modulus, non-squarefree
// input, shared primes, prime congruent to 3 mod 4, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonResidueError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// An entry of a candidate vector is not acceptable. `index` is the 0-based
// position of the offending entry.
class AcceptabilityError : public ArgumentError {
 public:
  AcceptabilityError(std::size_t index, const std::string& what)
      : ArgumentError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class UnsupportedDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The bounded ternary-form search came up empty. Solvability is guaranteed
// under the documented preconditions, so this points at a bug.
class SearchExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prime search ran out of candidates below its limit.
class ExhaustionError : public std::runtime_error {
 public:
  ExhaustionError(std::size_t found, std::size_t wanted, const std::string& what)
      : std::runtime_error(what), found_(found), wanted_(wanted) {}
  std::size_t found() const noexcept { return found_; }
  std::size_t wanted() const noexcept { return wanted_; }

 private:
  std::size_t found_;
  std::size_t wanted_;
};

class IncompleteDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input; `location` names the offending JSON path.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace narrow2
