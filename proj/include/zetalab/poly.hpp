#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zetalab {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z, coefficients stored constant term first.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t power);
  // 1 - c*T
  static IntPoly linear_factor(const Int& c);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of T^i, zero beyond the degree.
  Int coeff(std::size_t i) const;
  const Int& leading() const;
  const Int& constant_term() const;

  Int content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  // T^d * P(1/T) for d = degree().
  IntPoly reversed() const;
  // P(T^k).
  IntPoly substitute_power(unsigned k) const;
  // P(c*T).
  IntPoly scale_variable(const Int& c) const;
  Int evaluate(const Int& x) const;
  Rat evaluate(const Rat& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Int& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Total order used to sort factor lists deterministically: by degree, then
  // coefficients from the constant term up.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  // Renders e.g. "1 - 2*T + 5*T^2"; the zero polynomial renders as "0".
  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

// Quotient of a by b when b divides a in Z[T]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor in Z[T], primitive with positive leading coefficient.
// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Rational-coefficient helpers used by the exact real-root machinery.
using RatPoly = std::vector<Rat>;
void trim(RatPoly& p);
RatPoly to_rat(const IntPoly& p);
RatPoly rat_remainder(const RatPoly& a, const RatPoly& b);
RatPoly rat_derivative(const RatPoly& p);

}  // namespace zetalab
