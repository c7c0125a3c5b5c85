#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/modpoly.hpp"
#include "zetalab/poly.hpp"
#include "zetalab/variety.hpp"

namespace oracle {

using zetalab::Int;
using zetalab::IntPoly;

// #X(F_{q^m}) by evaluating every equation at every normalized point through
// the FieldElement API; no elimination, no tables.
Int brute_count(const zetalab::variety::VarietySpec& spec, unsigned m);

// Rabin's test over F_l: x^(l^n) = x mod f, and gcd(x^(l^(n/d)) - x, f) = 1
// for every prime d | n.
bool rabin_irreducible(const zetalab::modp::Poly& f, std::uint64_t l);

// Irreducible over Q, certified by some prime l < 200 keeping the degree and
// making f irreducible mod l. False means "not certified".
bool certified_irreducible(const IntPoly& f);

// |alpha| for the reciprocal roots alpha of h (h(0) = 1), via companion
// matrix eigenvalues in long double.
std::vector<long double> root_moduli(const IntPoly& h);

// Every root modulus within rel_tol of q^(r/2).
bool float_pure(const IntPoly& h, const Int& q, unsigned r, long double rel_tol = 1e-9L);

std::string fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace oracle
