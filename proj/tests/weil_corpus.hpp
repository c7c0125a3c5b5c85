#pragma once

// Irreducible integer polynomials with constant term 1, built with a known
// weight (or known non-purity) for the factorization and purity tests.

#include <vector>

#include "zetalab/poly.hpp"

namespace corpus {

using zetalab::Int;
using zetalab::IntPoly;

struct KnownFactor {
  IntPoly poly;
  Int q;
  unsigned r = 0;  // weight; meaningful when pure
  bool pure = true;
};

// T^k P(T + Q/T) reversed, for monic P of degree k: constant term 1, top
// coefficient Q^k.
IntPoly from_trace(const std::vector<Int>& monic_trace, const Int& Q);

// Certified irreducible pure factors of degree <= 8 over q in {3, 4, 5},
// weights 0..3; deterministic.
std::vector<KnownFactor> weil_factor_pool();

// Irreducible factors satisfying the weight-r functional equation whose
// roots are real of unequal modulus; deterministic.
std::vector<KnownFactor> impostor_pool();

}  // namespace corpus
