#pragma once

// Zeta functions as normalized rational functions num/den with
// num, den in 1 + T*Z[T], together with the zeta algebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/poly.hpp"

namespace zetalab::zeta {

struct PowerSeries {
  std::vector<Rat> coeffs;  // z_0 .. z_N, z_0 = 1
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// exp(sum N_m T^m / m) to order M = counts.size(). Every coefficient must be
// a nonnegative integer; otherwise NonIntegralSeries names the first offender.
PowerSeries series_from_counts(const std::vector<Int>& counts);

// Taylor coefficients of num/den up to T^order. den(0) must be nonzero.
std::vector<Rat> series_of(const IntPoly& num, const IntPoly& den, std::size_t order);

class ZetaFunction {
 public:
  // Divides out gcd(num, den) and normalizes constant terms to 1. Both inputs
  // must have constant term +-1 after the gcd is removed.
  static ZetaFunction make(IntPoly num, IntPoly den, std::uint64_t p, unsigned e);
  static ZetaFunction one(std::uint64_t p, unsigned e);

  const IntPoly& numerator() const noexcept { return num_; }
  const IntPoly& denominator() const noexcept { return den_; }
  std::uint64_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  Int q() const;
  // deg num - deg den.
  int degree() const { return num_.degree() - den_.degree(); }
  // max(deg num, deg den).
  int total_degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  // "(num)/(den)", accepted back by parse_zeta_literal.
  std::string to_string() const;

  friend bool operator==(const ZetaFunction& a, const ZetaFunction& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ZetaFunction(IntPoly num, IntPoly den, std::uint64_t p, unsigned e)
      : num_(std::move(num)), den_(std::move(den)), p_(p), e_(e) {}
  IntPoly num_;
  IntPoly den_;
  std::uint64_t p_;
  unsigned e_;
};

struct ReconstructOptions {
  unsigned max_degree = 24;
  unsigned guard = 4;
};

// Coefficients needed to test total degree D: z_0 .. z_{2D+guard}.
std::size_t terms_needed(unsigned D, unsigned guard);

struct PadeAttempt {
  std::optional<ZetaFunction> fit;
  // First index whose coefficient the candidate fails to reproduce
  // (series order + 1 when every coefficient matches).
  std::size_t residual_position = 0;
};

// [D/D] Pade fit from z_0..z_{2D}; accepted only if it regenerates every
// supplied coefficient. Requires series order >= 2D + guard.
PadeAttempt try_pade(const PowerSeries& series, unsigned D, std::uint64_t p, unsigned e);

// Iterative deepening D = 1, 2, ... while the series is long enough.
// Throws InsufficientTerms, NoStableFit, NonIntegralSeries.
ZetaFunction reconstruct_rational(const PowerSeries& series, std::uint64_t p, unsigned e,
                                  const ReconstructOptions& options = {});

ZetaFunction multiply(const ZetaFunction& a, const ZetaFunction& b);
ZetaFunction divide(const ZetaFunction& total, const ZetaFunction& closed);

// Z over F_{p^e} viewed over F_{p^(e/k)}: T -> T^k. e must be divisible by k.
ZetaFunction base_change_down(const ZetaFunction& z, unsigned k);

// Z over F_{p^e} to F_{p^(e k)}: every reciprocal root a becomes a^k.
ZetaFunction base_change_up(const ZetaFunction& z, unsigned k);

struct ExpandedCounts {
  std::vector<Int> counts;  // N_1 .. N_M
  bool has_negative = false;
};

ExpandedCounts expand(const ZetaFunction& z, std::size_t M);

// Power sums s_1..s_M of the reciprocal roots of P in 1 + T*Z[T].
std::vector<Int> power_sums(const IntPoly& P, std::size_t M);
// Inverse of power_sums: the polynomial of degree d with given power sums.
IntPoly from_power_sums(const std::vector<Int>& sums, std::size_t d);

// `(<poly>)/(<poly>)` in T, or a single polynomial (denominator 1). Constant
// terms must be 1.
ZetaFunction parse_zeta_literal(std::string_view text, std::uint64_t p, unsigned e);

}  // namespace zetalab::zeta
