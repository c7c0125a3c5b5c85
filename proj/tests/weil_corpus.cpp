#include "weil_corpus.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "oracle.hpp"

namespace corpus {

IntPoly from_trace(const std::vector<Int>& monic_trace, const Int& Q) {
  const std::size_t k = monic_trace.size() - 1;
  const IntPoly base{0, 0, 1};
  const IntPoly t2q = base + IntPoly::constant(Q);
  IntPoly m;
  for (std::size_t j = 0; j <= k; ++j) m += zetalab::pow(t2q, static_cast<unsigned>(j)) * IntPoly::monomial(monic_trace[j], k - j);
  return m.reversed();
}

namespace {

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Roots of a monic real polynomial, low-to-high coefficients.
std::vector<std::complex<long double>> roots(const std::vector<Int>& c) {
  const int k = static_cast<int>(c.size()) - 1;
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat C = Mat::Zero(k, k);
  for (int i = 1; i < k; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < k; ++i) C(i, k - 1) = -c[static_cast<std::size_t>(i)].get_d();
  Eigen::EigenSolver<Mat> s(C, false);
  std::vector<std::complex<long double>> out;
  for (int i = 0; i < k; ++i) out.push_back(s.eigenvalues()[i]);
  return out;
}

// Monic integer polynomial near prod (u - t_i).
std::vector<Int> rounded_product(const std::vector<long double>& t) {
  std::vector<long double> c{1.0L};
  for (long double x : t) {
    std::vector<long double> n(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= x * c[i];
    }
    c = std::move(n);
  }
  std::vector<Int> out;
  for (long double x : c) out.emplace_back(static_cast<long>(std::llround(x)));
  out.back() = 1;
  return out;
}

const std::vector<std::vector<long>> kCyclotomic = {
    {1, -1}, {1, 1}, {1, 1, 1}, {1, 0, 1}, {1, 1, 1, 1, 1}, {1, -1, 1}, {1, 0, 0, 0, 1}, {1, 0, -1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 1, 0, 0, 1}, {1, -1, 1, -1, 1}, {1, 0, 0, 0, 0, 0, 0, 0, 1},
};

void add_unique(std::vector<KnownFactor>& out, std::set<std::pair<IntPoly, Int>>& seen, KnownFactor f) {
  if (seen.insert({f.poly, f.q}).second) out.push_back(std::move(f));
}

}  // namespace

std::vector<KnownFactor> weil_factor_pool() {
  std::vector<KnownFactor> out;
  std::set<std::pair<IntPoly, Int>> seen;
  std::mt19937_64 rng(31337);
  for (long qv : {3L, 4L, 5L}) {
    const Int q = qv;
    for (unsigned r = 0; r <= 3; ++r) {
      const Int Q = ipow(q, r);
      Int s;
      mpz_sqrt(s.get_mpz_t(), Q.get_mpz_t());
      const bool square = s * s == Q;
      if (square) {
        // Cyclotomic polynomials in sqrt(Q) T.
        for (const auto& c : kCyclotomic) {
          IntPoly phi{std::vector<Int>(c.begin(), c.end())};
          add_unique(out, seen, {phi.scale_variable(s), q, r, true});
        }
      }
      const long double bound = 2.0L * std::sqrt(static_cast<long double>(Q.get_d()));
      for (unsigned k = 1; k <= 4; ++k) {
        int made = 0;
        for (int attempt = 0; attempt < 400 && made < 3; ++attempt) {
          std::uniform_real_distribution<long double> dist(-0.95L * bound, 0.95L * bound);
          std::vector<long double> t(k);
          for (auto& x : t) x = dist(rng);
          auto c = rounded_product(t);
          bool inside = true;
          for (auto z : roots(c))
            inside = inside && std::abs(z.imag()) < 1e-12L && std::abs(z.real()) < bound * (1 - 1e-9L);
          if (!inside) continue;
          IntPoly h = from_trace(c, Q);
          if (!oracle::certified_irreducible(h)) continue;
          add_unique(out, seen, {h, q, r, true});
          ++made;
        }
      }
    }
  }
  return out;
}

std::vector<KnownFactor> impostor_pool() {
  std::vector<KnownFactor> out;
  std::set<std::pair<IntPoly, Int>> seen;
  add_unique(out, seen, {IntPoly{1, -5, 5}, 5, 1, false});
  std::mt19937_64 rng(4242);
  for (long qv : {3L, 4L, 5L}) {
    const Int q = qv;
    for (unsigned r = 1; r <= 3; ++r) {
      const Int Q = ipow(q, r);
      const long double bound = 2.0L * std::sqrt(static_cast<long double>(Q.get_d()));
      for (unsigned k = 1; k <= 3; ++k) {
        int made = 0;
        for (int attempt = 0; attempt < 400 && made < 2; ++attempt) {
          std::uniform_real_distribution<long double> dist(-2.0L * bound, 2.0L * bound);
          std::vector<long double> t(k);
          for (auto& x : t) x = dist(rng);
          // At least one trace root clearly outside the Weil interval.
          t[0] = (t[0] < 0 ? -1 : 1) * (bound * 1.2L + std::abs(t[0]));
          auto c = rounded_product(t);
          bool outside = false;
          for (auto z : roots(c)) outside = outside || (std::abs(z.imag()) < 1e-12L && std::abs(z.real()) > bound * 1.01L);
          if (!outside) continue;
          IntPoly h = from_trace(c, Q);
          if (!oracle::certified_irreducible(h)) continue;
          add_unique(out, seen, {h, q, r, false});
          ++made;
        }
      }
    }
  }
  return out;
}

}  // namespace corpus
