#include "zetalab/error.hpp"

#include <utility>

namespace zetalab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadFieldParams: return "BadFieldParams";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonIntegralSeries: return "NonIntegralSeries";
    case ErrorCode::NoStableFit: return "NoStableFit";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotPrechecked: return "NotPrechecked";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected,
                         const std::string& detail)
    : Error(ErrorCode::SyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                expected + (detail.empty() ? "" : " (" + detail + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

BudgetExceeded::BudgetExceeded(mpz_class required, mpz_class budget,
                               std::size_t largest_feasible_terms)
    : Error(ErrorCode::BudgetExceeded,
            "enumeration needs " + required.get_str() + " candidate tuples, budget is " +
                budget.get_str() + "; largest feasible number of terms is " +
                std::to_string(largest_feasible_terms)),
      required_(std::move(required)),
      budget_(std::move(budget)),
      largest_feasible_(largest_feasible_terms) {}

NoStableFit::NoStableFit(std::size_t best_residual_position, const std::string& detail)
    : Error(ErrorCode::NoStableFit, detail), position_(best_residual_position) {}

}  // namespace zetalab
