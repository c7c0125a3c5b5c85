#include "zetalab/factor.hpp"

#include <algorithm>
#include <map>

#include "zetalab/error.hpp"
#include "zetalab/finite_field.hpp"
#include "zetalab/modpoly.hpp"

namespace zetalab::factor {

IntPoly Factorization::product() const {
  IntPoly p{1};
  for (const auto& f : factors) p *= pow(f.poly, f.multiplicity);
  return p;
}

namespace {

// gcd() is primitive with positive leading coefficient, hence monic for
// divisors of monic inputs.
IntPoly monic_gcd(const IntPoly& a, const IntPoly& b) { return gcd(a, b); }

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("inexact division in factorization");
  return *q;
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm; every intermediate is monic because f is.
  IntPoly a0 = monic_gcd(f, f.derivative());
  IntPoly b = divide_exact(f, a0);
  IntPoly c = divide_exact(f.derivative(), a0);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly a = monic_gcd(b, d);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

namespace {

using ZPoly = std::vector<Int>;

modp::Poly reduce(const IntPoly& f, std::uint64_t l) {
  modp::Poly r;
  const Int L = static_cast<unsigned long>(l);
  Int t;
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), L.get_mpz_t());
    r.push_back(t.get_ui());
  }
  modp::trim(r);
  return r;
}

// Polynomials with coefficients modulo M, kept in [0, M).
void zreduce(ZPoly& a, const Int& M) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& M) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  zreduce(r, M);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& M) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zreduce(r, M);
  return r;
}

ZPoly lift(const modp::Poly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

modp::Poly lower(const ZPoly& f, std::uint64_t l) {
  modp::Poly r;
  const Int L = static_cast<unsigned long>(l);
  Int t;
  for (const auto& c : f) {
    mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), L.get_mpz_t());
    r.push_back(t.get_ui());
  }
  modp::trim(r);
  return r;
}

// s*a + t*b = 1 over F_l for coprime a, b.
void bezout(const modp::Poly& a, const modp::Poly& b, std::uint64_t l, modp::Poly& s, modp::Poly& t) {
  modp::Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    modp::Poly q, r;
    modp::divmod(r0, r1, q, r, l);
    modp::Poly s2 = modp::sub(s0, modp::mul(q, s1, l), l);
    modp::Poly t2 = modp::sub(t0, modp::mul(q, t1, l), l);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("bezout: inputs are not coprime");
  std::uint64_t inv = modp::inv_mod(r0[0], l);
  s = modp::scale(s0, inv, l);
  t = modp::scale(t0, inv, l);
}

// Lifts f = g*h (mod l), g and h monic and coprime mod l, to mod l^k.
// Each step adds one power of l.
void hensel_lift(const ZPoly& f, const modp::Poly& g0, const modp::Poly& h0, std::uint64_t l, unsigned k,
                 ZPoly& g, ZPoly& h) {
  modp::Poly s, t;
  bezout(g0, h0, l, s, t);
  g = lift(g0);
  h = lift(h0);
  Int mod = static_cast<unsigned long>(l);
  const Int L = mod;
  for (unsigned j = 1; j < k; ++j) {
    Int next = mod * L;
    ZPoly e = zsub(f, zmul(g, h, next), next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    modp::Poly em = lower(e, l);
    // A*h + B*g = e with deg A < deg g, deg B < deg h keeps both monic.
    modp::Poly A = modp::rem(modp::mul(em, t, l), g0, l);
    modp::Poly B = modp::rem(modp::mul(em, s, l), h0, l);
    ZPoly dA = lift(A), dB = lift(B);
    g.resize(std::max(g.size(), dA.size()), 0);
    h.resize(std::max(h.size(), dB.size()), 0);
    for (std::size_t i = 0; i < dA.size(); ++i) mpz_addmul(g[i].get_mpz_t(), dA[i].get_mpz_t(), mod.get_mpz_t());
    for (std::size_t i = 0; i < dB.size(); ++i) mpz_addmul(h[i].get_mpz_t(), dB[i].get_mpz_t(), mod.get_mpz_t());
    zreduce(g, next);
    zreduce(h, next);
    mod = next;
  }
}

// Lifts the complete modular factorization by splitting the factor list in
// halves recursively.
void lift_tree(const ZPoly& f, const std::vector<modp::Poly>& factors, std::size_t lo, std::size_t hi,
               std::uint64_t l, unsigned k, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t mid = (lo + hi) / 2;
  modp::Poly g0 = {1}, h0 = {1};
  for (std::size_t i = lo; i < mid; ++i) g0 = modp::mul(g0, factors[i], l);
  for (std::size_t i = mid; i < hi; ++i) h0 = modp::mul(h0, factors[i], l);
  ZPoly g, h;
  hensel_lift(f, g0, h0, l, k, g, h);
  lift_tree(g, factors, lo, mid, l, k, out);
  lift_tree(h, factors, mid, hi, l, k, out);
}

IntPoly symmetric(const ZPoly& a, const Int& M) {
  Int half = M / 2;
  std::vector<Int> c;
  for (const auto& x : a) c.push_back(x > half ? Int(x - M) : x);
  return IntPoly(std::move(c));
}

// Ceiling of 2^n * ||f||_2, bounding every coefficient of any factor of f of degree <= n.
Int mignotte_bound(const IntPoly& f) {
  Int sq = 0;
  for (const auto& c : f.coeffs()) sq += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  root += 1;
  return root << static_cast<unsigned long>(f.degree());
}

bool squarefree_mod(const IntPoly& f, std::uint64_t l) {
  modp::Poly fm = reduce(f, l);
  if (modp::degree(fm) != f.degree()) return false;
  modp::Poly g = modp::gcd(fm, modp::derivative(fm, l), l);
  return modp::degree(g) == 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!field::is_prime(n)) ++n;
  return n;
}

}  // namespace

std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  // Among the first few admissible primes above 2*deg, keep the one giving
  // the fewest modular factors.
  std::uint64_t best_l = 0;
  std::vector<modp::Poly> best;
  std::uint64_t l = static_cast<std::uint64_t>(2 * f.degree()) + 1;
  for (int tried = 0; tried < 3;) {
    l = next_prime(l);
    if (squarefree_mod(f, l)) {
      auto fac = modp::factor_squarefree(reduce(f, l), l);
      if (best_l == 0 || fac.size() < best.size()) {
        best_l = l;
        best = std::move(fac);
      }
      ++tried;
    }
    ++l;
  }
  if (best.size() == 1) return {f};

  const Int bound = 2 * mignotte_bound(f) + 1;
  unsigned k = 1;
  Int M = static_cast<unsigned long>(best_l);
  while (M <= bound) {
    M *= static_cast<unsigned long>(best_l);
    ++k;
  }
  std::vector<ZPoly> lifted;
  ZPoly fz(f.coeffs().begin(), f.coeffs().end());
  zreduce(fz, M);
  lift_tree(fz, best, 0, best.size(), best_l, k, lifted);

  // Subset recombination, smallest subsets first.
  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly prod = {1};
      for (auto i : pick) prod = zmul(prod, pool[i], M);
      IntPoly cand = symmetric(prod, M);
      bool constant_ok = cand.constant_term() != 0 &&
                         mpz_divisible_p(rest.constant_term().get_mpz_t(), cand.constant_term().get_mpz_t());
      if (constant_ok) {
        if (auto q = exact_divide(rest, cand)) {
          out.push_back(cand);
          rest = *q;
          std::vector<ZPoly> remaining;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) remaining.push_back(pool[i]);
          pool = std::move(remaining);
          found = true;
          break;
        }
      }
      // Next combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor_integer_poly(const IntPoly& P, const FactorOptions& options) {
  if (P.constant_term() != 1) throw std::invalid_argument("factor_integer_poly requires P(0) = 1");
  if (P.degree() > static_cast<int>(options.max_degree))
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(P.degree()) + " exceeds the cap of " +
                                                  std::to_string(options.max_degree));
  Factorization out;
  if (P.degree() < 1) return out;
  // rev(P) is monic because P(0) = 1; its monic factors reverse to factors
  // of P with constant term 1.
  std::map<IntPoly, unsigned> acc;
  for (const auto& [part, mult] : squarefree_decomposition(P.reversed())) {
    for (const auto& g : factor_monic_squarefree(part)) acc[g.reversed()] += mult;
  }
  for (auto& [poly, mult] : acc) out.factors.push_back({poly, mult});
  return out;
}

}  // namespace zetalab::factor
