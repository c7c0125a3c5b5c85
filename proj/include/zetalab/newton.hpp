#pragma once

// Newton polygons of integer polynomials for the p-adic valuation normalized
// by v(q) = 1, q = p^e, and the slope multisets read off them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/multiset.hpp"
#include "zetalab/poly.hpp"

namespace zetalab::newton {

using SlopeMultiset = Multiset<Rat>;

struct PolygonPoint {
  std::size_t index;
  Rat valuation;  // ord_p(a_i) / e
};

struct NewtonPolygonData {
  std::vector<PolygonPoint> points;    // nonzero coefficients only
  std::vector<PolygonPoint> vertices;  // lower convex hull, by index
  std::uint64_t p = 0;
  unsigned e = 1;
};

struct NewtonResult {
  NewtonPolygonData polygon;
  SlopeMultiset slopes;
};

// p-adic order of a nonzero integer.
unsigned long ord(const Int& a, std::uint64_t p);

// Requires P(0) = 1 (the first hull vertex is (0, 0)).
NewtonResult newton_polygon(const IntPoly& P, std::uint64_t p, unsigned e);

SlopeMultiset reflect(const SlopeMultiset& s, const Rat& r);
bool is_autodual(const SlopeMultiset& s, const Rat& r);
// Combined multiplicity mu = mu_num + mu_den satisfies mu(s) = mu(r - s) mod 2.
bool is_autodual_mod2(const SlopeMultiset& num, const SlopeMultiset& den, const Rat& r);

struct DmResult {
  bool ok = true;
  std::optional<Rat> witness;  // a slope whose multiplicity its denominator does not divide
};
DmResult dieudonne_manin_check(const SlopeMultiset& s);

// "{0, 1/2, 1/2}" with slopes ascending.
std::string to_string(const SlopeMultiset& s);

}  // namespace zetalab::newton
