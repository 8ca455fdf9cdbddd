#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wittzeta {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad spec, non-unit constant term, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A division by a positive integer had no solution in the coefficient ring.
// `degree` is the series degree at which the failure happened (0 if not
// applicable) and `residue` a printable form of the value that was not
// divisible.
class IntegralityError : public Error {
 public:
  IntegralityError(std::string message, std::size_t degree, std::string residue)
      : Error(std::move(message)), degree_(degree), residue_(std::move(residue)) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::size_t degree_;
  std::string residue_;
};

// Exhaustive enumeration would visit more points than the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::string required, std::uint64_t budget)
      : Error(what + ": enumeration requires " + required + " points, budget is " +
              std::to_string(budget)),
        required_(std::move(required)),
        budget_(budget) {}

  const std::string& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::string required_;
  std::uint64_t budget_;
};

// Not enough precision (series length or point-count range) to answer.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, std::size_t required, std::size_t available)
      : Error(what + ": requires " + std::to_string(required) + ", have " +
              std::to_string(available)),
        required_(required),
        available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

// An internal identity that must hold for valid inputs was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace wittzeta
