#include "zetalab/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace zetalab::modp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) throw std::domain_error("inv_mod of zero");
  return pow_mod(a, m - 2, m);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t l) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i], l);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t l) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], l);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t l) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], l), l);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t l) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, l);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem, std::uint64_t l) {
  if (b.empty()) throw std::domain_error("modp::divmod by zero polynomial");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lead = inv_mod(b.back(), l);
  quot.assign(rem.size() - db, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint64_t c = mul_mod(rem[k + db], inv_lead, l);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b[j], l), l);
  }
  rem.resize(db);
  trim(rem);
  trim(quot);
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t l) {
  Poly q, r;
  divmod(a, b, q, r, l);
  return r;
}

Poly make_monic(const Poly& a, std::uint64_t l) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), l), l);
}

Poly gcd(Poly a, Poly b, std::uint64_t l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, l);
}

Poly derivative(const Poly& a, std::uint64_t l) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul_mod(a[i], i % l, l);
  trim(d);
  return d;
}

Poly pow_mod(const Poly& base, const mpz_class& exp, const Poly& modulus, std::uint64_t l) {
  Poly result{1 % l};
  trim(result);
  Poly b = rem(base, modulus, l);
  const std::size_t bits = exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, l), modulus, l);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = rem(mul(result, b, l), modulus, l);
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint64_t l) {
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  if (d <= 3 && l <= 100'000) {
    // A reducible polynomial of degree 2 or 3 has a linear factor.
    for (std::uint64_t x = 0; x < l; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, l), f[i], l);
      if (acc == 0) return false;
    }
    return true;
  }
  const Poly x{0, 1};
  Poly power = x;
  const mpz_class lz(static_cast<unsigned long>(l));
  for (int i = 1; i <= d / 2; ++i) {
    power = pow_mod(power, lz, f, l);
    Poly g = gcd(sub(power, x, l), f, l);
    if (degree(g) != 0) return false;
  }
  return true;
}

namespace {

// Distinct-degree factorization: pairs (product of all irreducible factors of
// degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(Poly f, std::uint64_t l) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly power = x;
  const mpz_class lz(static_cast<unsigned long>(l));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    power = pow_mod(power, lz, f, l);
    Poly g = gcd(sub(power, x, l), f, l);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      Poly q, r;
      divmod(f, g, q, r, l);
      f = q;
      power = rem(power, f, l);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

void equal_degree(const Poly& f, int d, std::uint64_t l, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  // (l^d - 1) / 2
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), l, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, l - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(a, f, l);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      Poly q, r;
      divmod(f, g, q, r, l);
      equal_degree(g, d, l, rng, out);
      equal_degree(make_monic(q, l), d, l, rng, out);
      return;
    }
    Poly b = pow_mod(a, e, f, l);
    b = sub(b, Poly{1}, l);
    g = gcd(b, f, l);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      Poly q, r;
      divmod(f, g, q, r, l);
      equal_degree(g, d, l, rng, out);
      equal_degree(make_monic(q, l), d, l, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t l) {
  if (l == 2) throw std::invalid_argument("factor_squarefree requires an odd prime");
  std::vector<Poly> out;
  if (degree(f) < 1) return out;
  std::mt19937_64 rng(0x5eedf00dULL ^ l);
  for (auto& [g, d] : distinct_degree(make_monic(f, l), l)) equal_degree(g, d, l, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace zetalab::modp
