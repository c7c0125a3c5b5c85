#pragma once

// Weil-weight classification of zeta factors. A factor h in 1 + T*Z[T] is
// pure of weight r over F_q when every reciprocal root has absolute value
// q^(r/2) under every complex embedding.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/factor.hpp"
#include "zetalab/poly.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::weil {

// The unique r >= 0 with c_d^2 = q^(r d) for the top coefficient c_d of h.
std::optional<unsigned> candidate_weight(const IntPoly& h, const Int& q);

// Exact purity test; throws NotPrechecked unless candidate_weight(h, q) == r.
bool is_pure_weight(const IntPoly& h, const Int& q, unsigned r);

// Trace polynomial P_tr with m(T) = T^k P_tr(T + Q/T) for the monic reversal
// m of h, Q = q^r, deg h = 2k; nullopt when the functional equation fails.
std::optional<IntPoly> trace_polynomial(const IntPoly& h, const Int& Q);

// Distinct real roots of P in the open interval (-2 sqrt(Q), 2 sqrt(Q)),
// by a Sturm sequence with endpoint signs evaluated exactly in Q(sqrt(Q)).
std::size_t roots_in_weil_interval(const IntPoly& P, const Int& Q);

// Numerator and denominator sides of a weight bucket.
struct WeightPart {
  std::vector<factor::Factor> num_factors;
  std::vector<factor::Factor> den_factors;
  IntPoly numerator() const;
  IntPoly denominator() const;
  // deg numerator - deg denominator.
  int degree() const;
  bool is_trivial() const { return num_factors.empty() && den_factors.empty(); }
  std::string to_string() const;
};

struct WeightDecomposition {
  Int q;
  std::map<unsigned, WeightPart> parts;
  WeightPart leftover;  // factors pure of no weight
  // Weights with a nonempty bucket, ascending.
  std::vector<unsigned> weights() const;
};

WeightDecomposition classify(const zeta::ZetaFunction& z);

// Bucket r of classify, reassembled; trivial when empty.
WeightPart weight_part(const zeta::ZetaFunction& z, unsigned r);
WeightPart weight_part(const WeightDecomposition& d, unsigned r);

struct ReducedForm {
  IntPoly f{1};
  IntPoly g{1};
  // Signed multiplicities of the reciprocal roots +sqrt(Q) and -sqrt(Q):
  // positive on the numerator side, negative on the denominator side.
  long m0 = 0;
  long m1 = 0;
  unsigned r = 0;
  Int q;
};

// Throws NotPure if some factor is not pure of weight r.
ReducedForm reduced_form(const WeightPart& part, const Int& q, unsigned r);

// m0 of the reduced form of the weight-r part.
long m_order(const zeta::ZetaFunction& z, unsigned r);

// integer * sqrt(q)^(has_sqrt ? 1 : 0)
struct SurdValue {
  Int coefficient;
  bool has_sqrt = false;
  std::string to_string(const Int& q) const;
  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.has_sqrt == b.has_sqrt && a.coefficient == b.coefficient;
  }
};

struct DetResult {
  SurdValue value;      // product of reciprocal roots, (-1)^b * top coefficient
  SurdValue reference;  // q^(r b / 2)
  bool matches = false;
};

DetResult det_frobenius(const IntPoly& P, const Int& q, unsigned r);

}  // namespace zetalab::weil
