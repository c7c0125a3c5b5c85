#pragma once

// Complete factorization of polynomials in 1 + T*Z[T] over the integers.

#include <cstdint>
#include <vector>

#include "zetalab/poly.hpp"

namespace zetalab::factor {

struct FactorOptions {
  unsigned max_degree = 64;
};

struct Factor {
  IntPoly poly;  // irreducible over Q, constant term 1
  unsigned multiplicity = 1;
  friend bool operator==(const Factor& a, const Factor& b) {
    return a.multiplicity == b.multiplicity && a.poly == b.poly;
  }
};

struct Factorization {
  // Distinct factors sorted by (degree, coefficients).
  std::vector<Factor> factors;
  IntPoly product() const;
};

// Throws DegreeCapExceeded; requires P(0) = 1.
Factorization factor_integer_poly(const IntPoly& P, const FactorOptions& options = {});

// Irreducible monic factors of a monic square-free polynomial over Z, sorted.
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f);

// Square-free decomposition of a monic polynomial: (part, multiplicity) with
// f = prod part^multiplicity, parts monic, square-free and pairwise coprime.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

}  // namespace zetalab::factor
