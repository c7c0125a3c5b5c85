#include "count_engine.hpp"

#include <algorithm>
#include <array>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "zetalab/error.hpp"
#include "zetalab/finite_field.hpp"
#include "zetalab/modpoly.hpp"

namespace zetalab::counts::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Log-table field. Nonzero elements are logarithms to a primitive root g in
// [0, q-1); the value q-1 encodes zero. zech_[n] = log(1 + g^n).

class LogField {
 public:
  using Elem = std::uint32_t;

  LogField(u64 p, unsigned degree) : p_(p), degree_(degree), q_(ipow(p, degree)), n_(q_ - 1) {
    build();
  }

  u64 p() const { return p_; }
  u64 order() const { return q_; }
  Elem zero() const { return static_cast<Elem>(n_); }
  Elem one() const { return 0; }
  Elem from_residue(std::uint32_t r) const { return small_log_[r]; }
  Elem element(u64 i) const { return static_cast<Elem>(i); }
  bool is_zero(Elem a) const { return a == n_; }

  Elem mul(Elem a, Elem b) const {
    if (a == n_ || b == n_) return zero();
    u64 s = u64{a} + b;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem add(Elem a, Elem b) const {
    if (a == n_) return b;
    if (b == n_) return a;
    Elem d = b >= a ? b - a : static_cast<Elem>(b + n_ - a);
    Elem z = zech_[d];
    if (z == n_) return zero();
    u64 s = u64{a} + z;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem neg(Elem a) const {
    if (a == n_ || p_ == 2) return a;
    u64 s = u64{a} + n_ / 2;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(n_ - a); }
  Elem pow(Elem a, u64 k) const {
    if (k == 0) return one();
    if (a == n_) return zero();
    return static_cast<Elem>(static_cast<u128>(a) * k % n_);
  }
  // a nonzero, g | q-1.
  bool is_power(Elem a, u64 g) const { return a % g == 0; }
  unsigned trace2(Elem a) const { return a == n_ ? 0 : trace_[a]; }

 private:
  void build() {
    const unsigned d = degree_;
    modp::Poly f = primitive_modulus();
    std::vector<std::uint32_t> log_of(q_);
    std::vector<std::uint32_t> exp_of(n_);
    std::vector<u64> cur(d, 0), place(d, 1);
    for (unsigned i = 1; i < d; ++i) place[i] = place[i - 1] * p_;
    cur[0] = 1;
    for (u64 n = 0; n < n_; ++n) {
      u64 idx = 0;
      for (unsigned i = 0; i < d; ++i) idx += cur[i] * place[i];
      exp_of[n] = static_cast<std::uint32_t>(idx);
      log_of[idx] = static_cast<std::uint32_t>(n);
      // cur *= x modulo the monic f.
      u64 top = cur[d - 1];
      for (unsigned i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top) {
        for (unsigned i = 0; i < d; ++i) cur[i] = modp::sub_mod(cur[i], modp::mul_mod(top, f[i], p_), p_);
      }
    }
    log_of[0] = static_cast<std::uint32_t>(n_);
    zech_.resize(n_);
    for (u64 n = 0; n < n_; ++n) {
      u64 idx = exp_of[n];
      u64 next = idx % p_ == p_ - 1 ? idx - (p_ - 1) : idx + 1;
      zech_[n] = log_of[next];
    }
    small_log_.resize(p_);
    for (u64 r = 0; r < p_; ++r) small_log_[r] = log_of[r];
    if (p_ == 2) {
      // Trace is linear in the coordinate bits; find the trace of each basis element.
      u64 mask = 0;
      for (unsigned i = 0; i < d; ++i) {
        modp::Poly basis(i + 1, 0);
        basis[i] = 1;
        modp::Poly acc;
        modp::Poly term = modp::rem(basis, f, 2);
        for (unsigned j = 0; j < d; ++j) {
          acc = modp::add(acc, term, 2);
          term = modp::rem(modp::mul(term, term, 2), f, 2);
        }
        if (!acc.empty() && acc[0]) mask |= u64{1} << i;
      }
      trace_.resize(n_);
      for (u64 n = 0; n < n_; ++n) trace_[n] = static_cast<std::uint8_t>(__builtin_popcountll(exp_of[n] & mask) & 1);
    }
  }

  modp::Poly primitive_modulus() const {
    const unsigned d = degree_;
    const auto primes = prime_factors(n_);
    modp::Poly f(d + 1, 0);
    f[d] = 1;
    f[0] = 1;
    const modp::Poly x = {0, 1};
    for (;;) {
      if (f[0] != 0 && modp::is_irreducible(f, p_)) {
        bool primitive = true;
        for (u64 l : primes) {
          modp::Poly r = modp::pow_mod(x, mpz_class(static_cast<unsigned long>(n_ / l)), f, p_);
          if (r == modp::Poly{1}) {
            primitive = false;
            break;
          }
        }
        if (primitive) return f;
      }
      unsigned i = 0;
      while (i < d && ++f[i] == p_) f[i++] = 0;
      if (i == d) throw std::logic_error("no primitive polynomial found");
    }
  }

  u64 p_;
  unsigned degree_;
  u64 q_;
  u64 n_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> small_log_;
  std::vector<std::uint8_t> trace_;
};

// Tables are reused across calls while the combined size stays bounded.
std::shared_ptr<const LogField> log_field(u64 p, unsigned degree) {
  static std::mutex mu;
  static std::list<std::pair<std::pair<u64, unsigned>, std::shared_ptr<const LogField>>> cache;
  constexpr u64 kCacheEntries = u64{1} << 27;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(p, degree);
  for (auto it = cache.begin(); it != cache.end(); ++it) {
    if (it->first == key) {
      cache.splice(cache.begin(), cache, it);
      return cache.front().second;
    }
  }
  auto field = std::make_shared<const LogField>(p, degree);
  cache.emplace_front(key, field);
  u64 total = 0;
  for (auto it = cache.begin(); it != cache.end();) {
    total += it->second->order();
    if (total > kCacheEntries && it != cache.begin()) {
      total -= it->second->order();
      it = cache.erase(it);
    } else {
      ++it;
    }
  }
  return field;
}

// ---------------------------------------------------------------------------
// Dense coordinate field for orders beyond the log tables.

constexpr unsigned kDenseMaxDegree = 32;

class DenseField {
 public:
  struct Elem {
    std::array<std::uint32_t, kDenseMaxDegree> d{};
  };

  DenseField(u64 p, unsigned degree) : p_(p), degree_(degree) {
    if (degree > kDenseMaxDegree) throw Error(ErrorCode::CapExceeded, "field degree above the dense cap");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, degree);
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 62)
      throw Error(ErrorCode::CapExceeded, "field order " + q.get_str() + " exceeds 2^62");
    q_ = q.get_ui();
    field::FieldLimits limits;
    limits.max_degree = kDenseMaxDegree;
    modulus_ = field::find_irreducible(p, degree, limits);
  }

  u64 p() const { return p_; }
  u64 order() const { return q_; }
  Elem zero() const { return {}; }
  Elem one() const {
    Elem e;
    e.d[0] = 1;
    return e;
  }
  Elem from_residue(std::uint32_t r) const {
    Elem e;
    e.d[0] = r;
    return e;
  }
  Elem element(u64 i) const {
    Elem e;
    for (unsigned k = 0; k < degree_; ++k, i /= p_) e.d[k] = static_cast<std::uint32_t>(i % p_);
    return e;
  }
  bool is_zero(const Elem& a) const {
    for (unsigned k = 0; k < degree_; ++k)
      if (a.d[k]) return false;
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    for (unsigned k = 0; k < degree_; ++k) r.d[k] = static_cast<std::uint32_t>(modp::add_mod(a.d[k], b.d[k], p_));
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r;
    for (unsigned k = 0; k < degree_; ++k) r.d[k] = a.d[k] ? static_cast<std::uint32_t>(p_ - a.d[k]) : 0;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    const unsigned d = degree_;
    std::array<u64, 2 * kDenseMaxDegree> t{};
    for (unsigned i = 0; i < d; ++i) {
      if (!a.d[i]) continue;
      for (unsigned j = 0; j < d; ++j) t[i + j] = (t[i + j] + u64{a.d[i]} * b.d[j]) % p_;
    }
    for (unsigned i = 2 * d - 1; i-- > d;) {
      u64 c = t[i];
      if (!c) continue;
      for (unsigned j = 0; j < d; ++j) t[i - d + j] = (t[i - d + j] + (p_ - modulus_[j]) * c) % p_;
    }
    Elem r;
    for (unsigned i = 0; i < d; ++i) r.d[i] = static_cast<std::uint32_t>(t[i]);
    return r;
  }
  Elem pow(Elem a, u64 k) const {
    Elem r = one();
    while (k) {
      if (k & 1) r = mul(r, a);
      k >>= 1;
      if (k) a = mul(a, a);
    }
    return r;
  }
  Elem inv(const Elem& a) const { return pow(a, q_ - 2); }
  bool is_power(const Elem& a, u64 g) const {
    Elem r = pow(a, (q_ - 1) / g);
    return is_zero(sub(r, one()));
  }
  unsigned trace2(const Elem& a) const {
    Elem acc = zero(), t = a;
    for (unsigned i = 0; i < degree_; ++i) {
      acc = add(acc, t);
      t = mul(t, t);
    }
    return acc.d[0];
  }

 private:
  u64 p_;
  unsigned degree_;
  u64 q_ = 0;
  modp::Poly modulus_;
};

// ---------------------------------------------------------------------------
// Root counting of a univariate polynomial with coefficients in the field.

template <class F>
using EPoly = std::vector<typename F::Elem>;

template <class F>
void trim_poly(const F& f, EPoly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
EPoly<F> poly_rem(const F& f, EPoly<F> a, const EPoly<F>& m) {
  trim_poly(f, a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    auto c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    a.pop_back();
    trim_poly(f, a);
  }
  return a;
}

template <class F>
EPoly<F> poly_mulmod(const F& f, const EPoly<F>& a, const EPoly<F>& b, const EPoly<F>& m) {
  if (a.empty() || b.empty()) return {};
  EPoly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return poly_rem(f, std::move(r), m);
}

// Number of distinct roots in F_q of g, deg g >= 1: deg gcd(g, v^q - v).
template <class F>
u64 distinct_roots(const F& f, EPoly<F> g) {
  EPoly<F> result = {f.one()};
  EPoly<F> base = poly_rem(f, EPoly<F>{f.zero(), f.one()}, g);
  for (u64 k = f.order(); k; k >>= 1) {
    if (k & 1) result = poly_mulmod(f, result, base, g);
    if (k > 1) base = poly_mulmod(f, base, base, g);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), f.zero());
  result[1] = f.sub(result[1], f.one());
  trim_poly(f, result);
  EPoly<F> a = g, b = result;
  while (!b.empty()) {
    EPoly<F> r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

template <class F>
u64 count_roots(const F& f, EPoly<F>& c) {
  trim_poly(f, c);
  if (c.empty()) return f.order();
  std::size_t s = 0;
  while (f.is_zero(c[s])) ++s;
  const u64 at_zero = s > 0 ? 1 : 0;
  const std::size_t d = c.size() - 1 - s;
  if (d == 0) return at_zero;
  if (d == 1) return at_zero + 1;
  bool binomial = true;
  for (std::size_t i = s + 1; i < s + d; ++i) binomial = binomial && f.is_zero(c[i]);
  if (binomial) {
    // v^d = t has gcd(d, q-1) roots when t is a gcd(d, q-1)-th power, else none.
    const auto t = f.neg(f.mul(c[s], f.inv(c[s + d])));
    const u64 g = std::gcd(static_cast<u64>(d), f.order() - 1);
    return at_zero + (f.is_power(t, g) ? g : 0);
  }
  if (d == 2) {
    const auto& a = c[s + 2];
    const auto& b = c[s + 1];
    const auto& k = c[s];
    if (f.p() == 2) {
      // Substituting v = (b/a) w gives w^2 + w + ak/b^2, solvable iff its trace is 0.
      const auto t = f.mul(f.mul(a, k), f.inv(f.mul(b, b)));
      return at_zero + (f.trace2(t) == 0 ? 2 : 0);
    }
    const auto four = f.from_residue(static_cast<std::uint32_t>(4 % f.p()));
    const auto disc = f.sub(f.mul(b, b), f.mul(four, f.mul(a, k)));
    if (f.is_zero(disc)) return at_zero + 1;
    return at_zero + (f.is_power(disc, 2) ? 2 : 0);
  }
  return at_zero + distinct_roots(f, EPoly<F>(c.begin() + static_cast<std::ptrdiff_t>(s), c.end()));
}

// ---------------------------------------------------------------------------
// Enumeration of one component.

template <class F>
struct RtMonomial {
  typename F::Elem coef;
  std::vector<std::pair<std::uint16_t, std::uint16_t>> powers;
};
template <class F>
using RtPoly = std::vector<RtMonomial<F>>;

// Sum of a chunk, split into a 128-bit part and an overflow part.
struct Partial {
  u128 small = 0;
  mpz_class big = 0;
  void add(u128 w) {
    if (small + w < small) {
      big += to_mpz(small);
      small = 0;
    }
    small += w;
  }
  static mpz_class to_mpz(u128 v) {
    mpz_class hi = static_cast<unsigned long>(static_cast<u64>(v >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<u64>(v));
    return (hi << 64) + lo;
  }
  mpz_class total() const { return big + to_mpz(small); }
};

template <class F>
class ComponentCounter {
 public:
  ComponentCounter(const F& f, const Component& c) : f_(f), c_(c) {
    for (const auto& chk : c.checks) checks_.push_back(compile(chk));
    for (const auto& s : c.solved) {
      std::vector<RtPoly<F>> by_power;
      for (const auto& coeff : s.by_power) by_power.push_back(compile(coeff));
      solved_.push_back(std::move(by_power));
    }
  }

  mpz_class count(unsigned jobs) const {
    const u64 q = f_.order();
    if (c_.num_enumerated == 0) {
      Partial part;
      std::vector<std::vector<typename F::Elem>> pw;
      mpz_class big;
      u128 w = weight(pw, big);
      part.add(w);
      return part.total() + big;
    }
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<u64>(q, 256))));
    std::vector<Partial> parts(jobs);
    std::vector<mpz_class> bigs(jobs);
    auto run = [&](unsigned j) {
      u64 lo = q / jobs * j + std::min<u64>(j, q % jobs);
      u64 hi = lo + q / jobs + (j < q % jobs ? 1 : 0);
      chunk(lo, hi, parts[j], bigs[j]);
    };
    if (jobs == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(run, j);
      for (auto& t : threads) t.join();
    }
    mpz_class total = 0;
    for (unsigned j = 0; j < jobs; ++j) total += parts[j].total() + bigs[j];
    return total;
  }

 private:
  RtPoly<F> compile(const Compiled& poly) const {
    RtPoly<F> out;
    for (const auto& m : poly) out.push_back({f_.from_residue(m.residue), m.powers});
    return out;
  }

  typename F::Elem eval(const RtPoly<F>& poly, const std::vector<std::vector<typename F::Elem>>& pw) const {
    auto acc = f_.zero();
    for (const auto& m : poly) {
      auto t = m.coef;
      for (const auto& [v, k] : m.powers) t = f_.mul(t, pw[v][k]);
      acc = f_.add(acc, t);
    }
    return acc;
  }

  // Number of completions of the current enumerated assignment. Products that
  // overflow 128 bits (degenerate systems) are added to big instead.
  u128 weight(const std::vector<std::vector<typename F::Elem>>& pw, mpz_class& big) const {
    for (const auto& chk : checks_)
      if (!f_.is_zero(eval(chk, pw))) return 0;
    thread_local EPoly<F> buf;
    thread_local std::vector<u64> roots;
    roots.clear();
    for (const auto& s : solved_) {
      buf.clear();
      for (const auto& coeff : s) buf.push_back(eval(coeff, pw));
      u64 r = count_roots(f_, buf);
      if (r == 0) return 0;
      roots.push_back(r);
    }
    u128 w = 1;
    for (u64 r : roots) {
      if (__builtin_mul_overflow(w, static_cast<u128>(r), &w)) {
        mpz_class acc = 1;
        for (u64 x : roots) acc *= static_cast<unsigned long>(x);
        big += acc;
        return 0;
      }
    }
    return w;
  }

  void set_value(std::vector<std::vector<typename F::Elem>>& pw, unsigned var, u64 index) const {
    auto& row = pw[var];
    const auto x = f_.element(index);
    row[0] = f_.one();
    for (std::size_t k = 1; k < row.size(); ++k) row[k] = f_.mul(row[k - 1], x);
  }

  void chunk(u64 lo, u64 hi, Partial& part, mpz_class& big) const {
    if (lo >= hi) return;
    const unsigned r = c_.num_enumerated;
    const u64 q = f_.order();
    std::vector<std::vector<typename F::Elem>> pw(r);
    for (unsigned v = 0; v < r; ++v) pw[v].assign(c_.max_degree[v] + 1, f_.one());
    std::vector<u64> idx(r, 0);
    idx[0] = lo;
    for (unsigned v = 0; v < r; ++v) set_value(pw, v, idx[v]);
    for (;;) {
      part.add(weight(pw, big));
      unsigned j = r - 1;
      for (;;) {
        if (j == 0) {
          if (++idx[0] >= hi) return;
          set_value(pw, 0, idx[0]);
          break;
        }
        if (++idx[j] < q) {
          set_value(pw, j, idx[j]);
          break;
        }
        idx[j] = 0;
        set_value(pw, j, 0);
        --j;
      }
    }
  }

  const F& f_;
  const Component& c_;
  std::vector<RtPoly<F>> checks_;
  std::vector<std::vector<RtPoly<F>>> solved_;
};

template <class F>
mpz_class run_plans(const F& f, const std::vector<AffinePlan>& plans, unsigned jobs) {
  mpz_class total = 0;
  const mpz_class q = static_cast<unsigned long>(f.order());
  for (const auto& plan : plans) {
    if (plan.empty) continue;
    mpz_class n;
    mpz_pow_ui(n.get_mpz_t(), q.get_mpz_t(), plan.free_vars);
    for (const auto& comp : plan.components) {
      if (n == 0) break;
      n *= ComponentCounter<F>(f, comp).count(jobs);
    }
    total += n;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Planning.

AffinePlan plan_affine(const std::vector<expr::MPoly>& equations, std::size_t num_vars, std::uint64_t p) {
  AffinePlan plan;
  const mpz_class P = static_cast<unsigned long>(p);
  std::vector<std::map<expr::Exponents, std::uint32_t>> eqs;
  for (const auto& poly : equations) {
    std::map<expr::Exponents, std::uint32_t> reduced;
    for (const auto& [e, c] : poly.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
      if (r != 0) reduced.emplace(e, static_cast<std::uint32_t>(r.get_ui()));
    }
    if (reduced.empty()) continue;
    bool constant = reduced.size() == 1 && expr::total_degree(reduced.begin()->first) == 0;
    if (constant) {
      plan.empty = true;
      return plan;
    }
    eqs.push_back(std::move(reduced));
  }

  // Union-find over variables through shared equations.
  std::vector<std::size_t> parent(num_vars);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<std::size_t>> vars_of(eqs.size());
  std::vector<bool> used(num_vars, false);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    std::vector<bool> in(num_vars, false);
    for (const auto& [e, c] : eqs[i])
      for (std::size_t v = 0; v < num_vars; ++v)
        if (e[v]) in[v] = true;
    for (std::size_t v = 0; v < num_vars; ++v)
      if (in[v]) vars_of[i].push_back(v);
    for (std::size_t v : vars_of[i]) {
      used[v] = true;
      parent[find(v)] = find(vars_of[i].front());
    }
  }
  for (std::size_t v = 0; v < num_vars; ++v)
    if (!used[v]) ++plan.free_vars;

  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < num_vars; ++v)
    if (used[v] && find(v) == v) roots.push_back(v);

  for (std::size_t root : roots) {
    std::vector<std::size_t> comp_eqs, comp_vars;
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (find(vars_of[i].front()) == root) comp_eqs.push_back(i);
    for (std::size_t v = 0; v < num_vars; ++v)
      if (used[v] && find(v) == root) comp_vars.push_back(v);

    std::vector<unsigned> occurrences(num_vars, 0);
    for (std::size_t i : comp_eqs)
      for (std::size_t v : vars_of[i]) ++occurrences[v];

    auto degree_of = [&](std::size_t i, std::size_t v) {
      unsigned d = 0;
      for (const auto& [e, c] : eqs[i]) d = std::max(d, e[v]);
      return d;
    };

    std::vector<long> solved_var(eqs.size(), -1);
    std::vector<bool> is_solved(num_vars, false);
    for (std::size_t i : comp_eqs) {
      long best = -1;
      for (std::size_t v : vars_of[i]) {
        if (occurrences[v] != 1) continue;
        if (best < 0 || degree_of(i, v) < degree_of(i, static_cast<std::size_t>(best))) best = static_cast<long>(v);
      }
      if (best >= 0) {
        solved_var[i] = best;
        is_solved[static_cast<std::size_t>(best)] = true;
      }
    }

    Component comp;
    std::vector<long> local(num_vars, -1);
    for (std::size_t v : comp_vars) {
      if (is_solved[v]) continue;
      local[v] = static_cast<long>(comp.num_enumerated++);
      unsigned d = 0;
      for (std::size_t i : comp_eqs) d = std::max(d, degree_of(i, v));
      comp.max_degree.push_back(d);
    }
    auto monomial = [&](const expr::Exponents& e, std::uint32_t c, long skip) {
      Monomial m{c, {}};
      for (std::size_t v = 0; v < num_vars; ++v) {
        if (!e[v] || static_cast<long>(v) == skip) continue;
        m.powers.emplace_back(static_cast<std::uint16_t>(local[v]), static_cast<std::uint16_t>(e[v]));
      }
      return m;
    };
    for (std::size_t i : comp_eqs) {
      if (solved_var[i] < 0) {
        Compiled chk;
        for (const auto& [e, c] : eqs[i]) chk.push_back(monomial(e, c, -1));
        comp.checks.push_back(std::move(chk));
      } else {
        const std::size_t v = static_cast<std::size_t>(solved_var[i]);
        SolvedEquation s;
        s.by_power.resize(degree_of(i, v) + 1);
        for (const auto& [e, c] : eqs[i]) s.by_power[e[v]].push_back(monomial(e, c, solved_var[i]));
        comp.solved.push_back(std::move(s));
      }
    }
    plan.components.push_back(std::move(comp));
  }
  return plan;
}

std::vector<expr::MPoly> chart_equations(const variety::VarietySpec& spec, std::size_t k) {
  const std::size_t nv = spec.num_variables();
  std::vector<expr::MPoly> out;
  for (const auto& eq : spec.equations) {
    expr::MPoly chart(nv - k - 1);
    for (const auto& [e, c] : eq.poly.terms()) {
      bool vanishes = false;
      for (std::size_t i = 0; i < k; ++i) vanishes = vanishes || e[i] > 0;
      if (vanishes) continue;
      chart.add_term(expr::Exponents(e.begin() + static_cast<std::ptrdiff_t>(k) + 1, e.end()), c);
    }
    out.push_back(std::move(chart));
  }
  return out;
}

std::vector<AffinePlan> plan_variety(const variety::VarietySpec& spec) {
  std::vector<AffinePlan> plans;
  if (spec.ambient == variety::Ambient::Affine) {
    std::vector<expr::MPoly> eqs;
    for (const auto& eq : spec.equations) eqs.push_back(eq.poly);
    plans.push_back(plan_affine(eqs, spec.num_variables(), spec.p));
  } else {
    for (std::size_t k = 0; k < spec.num_variables(); ++k)
      plans.push_back(plan_affine(chart_equations(spec, k), spec.num_variables() - k - 1, spec.p));
  }
  return plans;
}

Int candidates(const std::vector<AffinePlan>& plans, const Int& q) {
  Int total = 0;
  for (const auto& plan : plans) {
    if (plan.empty) continue;
    for (const auto& comp : plan.components) {
      Int c;
      mpz_pow_ui(c.get_mpz_t(), q.get_mpz_t(), comp.num_enumerated);
      total += c;
    }
  }
  return total;
}

Int execute(const std::vector<AffinePlan>& plans, std::uint64_t p, unsigned degree, unsigned jobs) {
  bool needs_field = false;
  Int closed = 0;
  for (const auto& plan : plans) needs_field = needs_field || (!plan.empty && !plan.components.empty());
  if (!needs_field) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, degree);
    for (const auto& plan : plans) {
      if (plan.empty) continue;
      mpz_class n;
      mpz_pow_ui(n.get_mpz_t(), q.get_mpz_t(), plan.free_vars);
      closed += n;
    }
    return closed;
  }
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, degree);
  // Log tables pay off only when something is enumerated.
  bool enumerates = false;
  for (const auto& plan : plans)
    for (const auto& comp : plan.components) enumerates = enumerates || (!plan.empty && comp.num_enumerated > 0);
  if (enumerates && q <= static_cast<unsigned long>(kLogFieldMax)) {
    auto field = log_field(p, degree);
    return run_plans(*field, plans, jobs);
  }
  DenseField field(p, degree);
  return run_plans(field, plans, jobs);
}

}  // namespace zetalab::counts::detail
