#pragma once

// Dense polynomials over a prime field Z/lZ, coefficients constant term first.
// Shared by the finite-field module (modulus handling) and the integer
// factorizer (modular factorization step). Moduli are below 2^62.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace zetalab::modp {

using Poly = std::vector<std::uint64_t>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a nonzero residue modulo a prime m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t l);
Poly sub(const Poly& a, const Poly& b, std::uint64_t l);
Poly mul(const Poly& a, const Poly& b, std::uint64_t l);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t l);
void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem, std::uint64_t l);
Poly rem(const Poly& a, const Poly& b, std::uint64_t l);
Poly make_monic(const Poly& a, std::uint64_t l);
Poly gcd(Poly a, Poly b, std::uint64_t l);
Poly derivative(const Poly& a, std::uint64_t l);
// base^exp mod modulus.
Poly pow_mod(const Poly& base, const mpz_class& exp, const Poly& modulus, std::uint64_t l);

// Ben-Or test: f monic of degree d >= 1 is irreducible iff it has no roots
// (checked directly for d <= 3) and gcd(x^(l^i) - x, f) = 1 for 1 <= i <= d/2.
bool is_irreducible(const Poly& f, std::uint64_t l);

// Complete factorization of a monic square-free polynomial over an odd prime
// field into monic irreducibles (distinct-degree, then Cantor-Zassenhaus
// equal-degree splitting with a fixed-seed generator). Sorted output.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t l);

}  // namespace zetalab::modp
