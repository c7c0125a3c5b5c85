#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetalab {

enum class ErrorCode {
  CapExceeded,
  DivisionByZero,
  FieldMismatch,
  BadFieldParams,
  SyntaxError,
  NonHomogeneous,
  UnknownVariable,
  BudgetExceeded,
  NonIntegralSeries,
  NoStableFit,
  InsufficientTerms,
  DegreeCapExceeded,
  NotPrechecked,
  NotPure,
  Io,
};

std::string_view to_string(ErrorCode code);

// Base of every error raised by the library. The code is stable and is what
// callers (and the CLI exit-code logic) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& detail);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(mpz_class required, mpz_class budget, std::size_t largest_feasible_terms);
  const mpz_class& required() const noexcept { return required_; }
  const mpz_class& budget() const noexcept { return budget_; }
  // Largest M for which N_1..N_M all fit in the budget (0 if none does).
  std::size_t largest_feasible_terms() const noexcept { return largest_feasible_; }

 private:
  mpz_class required_;
  mpz_class budget_;
  std::size_t largest_feasible_;
};

class NoStableFit : public Error {
 public:
  NoStableFit(std::size_t best_residual_position, const std::string& detail);
  // Index of the first series coefficient the best candidate failed to match.
  std::size_t best_residual_position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace zetalab
