#include "zetalab/newton.hpp"

#include <stdexcept>

namespace zetalab::newton {

unsigned long ord(const Int& a, std::uint64_t p) {
  if (a == 0) throw std::invalid_argument("ord of zero");
  Int P = static_cast<unsigned long>(p);
  Int x = a;
  return mpz_remove(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
}

NewtonResult newton_polygon(const IntPoly& P, std::uint64_t p, unsigned e) {
  if (P.constant_term() != 1) throw std::invalid_argument("newton_polygon requires P(0) = 1");
  NewtonResult out;
  out.polygon.p = p;
  out.polygon.e = e;
  const auto& c = P.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out.polygon.points.push_back({i, Rat(static_cast<unsigned long>(ord(c[i], p)), e)});
  }
  // Monotone chain lower hull; collinear middle points are dropped so
  // consecutive segment slopes strictly increase.
  auto& hull = out.polygon.vertices;
  for (const auto& pt : out.polygon.points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Remove b unless it lies strictly below the segment a -> pt.
      Rat cross = (b.valuation - a.valuation) * Rat(static_cast<long>(pt.index - a.index)) -
                  (pt.valuation - a.valuation) * Rat(static_cast<long>(b.index - a.index));
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::size_t width = hull[i].index - hull[i - 1].index;
    Rat slope = (hull[i].valuation - hull[i - 1].valuation) / Rat(static_cast<long>(width));
    slope.canonicalize();
    out.slopes.add(slope, width);
  }
  return out;
}

SlopeMultiset reflect(const SlopeMultiset& s, const Rat& r) {
  return s.map([&](const Rat& v) { return Rat(r - v); });
}

bool is_autodual(const SlopeMultiset& s, const Rat& r) { return s == reflect(s, r); }

bool is_autodual_mod2(const SlopeMultiset& num, const SlopeMultiset& den, const Rat& r) {
  const SlopeMultiset mu = num + den;
  for (const auto& [v, m] : mu) {
    if ((m + mu.multiplicity(Rat(r - v))) % 2 != 0) return false;
  }
  return true;
}

DmResult dieudonne_manin_check(const SlopeMultiset& s) {
  DmResult out;
  for (const auto& [v, m] : s) {
    if (m % v.get_den().get_ui() != 0) {
      out.ok = false;
      out.witness = v;
      return out;
    }
  }
  return out;
}

std::string to_string(const SlopeMultiset& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, m] : s) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!first) out += ", ";
      first = false;
      out += v.get_str();
    }
  }
  return out + "}";
}

}  // namespace zetalab::newton
