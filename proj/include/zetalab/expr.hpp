#pragma once

// Sparse multivariate integer polynomials and the shared expression grammar:
// integer literals, named variables, + - * ^ and parentheses. '^' binds
// tightest and takes a nonnegative integer literal, then '*', then '+'/'-';
// unary minus is allowed.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/poly.hpp"

namespace zetalab::expr {

using Exponents = std::vector<unsigned>;

class MPoly {
 public:
  explicit MPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  static MPoly constant(std::size_t num_vars, const Int& c);
  static MPoly variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponents, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Exponents& exps, const Int& c);

  // Exponent of variable v, maximized over terms.
  unsigned degree_in(std::size_t v) const;
  bool uses_variable(std::size_t v) const { return degree_in(v) > 0; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t num_vars_;
  std::map<Exponents, Int> terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);
unsigned total_degree(const Exponents& e);

// Position of the text inside a larger document, for error reporting.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Parses text as a polynomial in the given variable names. Identifiers that
// look like variables (a letter followed by letters/digits) but are not in the
// list raise UnknownVariable; anything else malformed raises SyntaxError.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                       SourcePos origin = {});

// Univariate view of an MPoly in one variable.
IntPoly to_univariate(const MPoly& p);

}  // namespace zetalab::expr
