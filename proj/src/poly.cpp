#include "zetalab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zetalab {

namespace {
const Int& zero_int() {
  static const Int z = 0;
  return z;
}
}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t power) {
  std::vector<Int> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_factor(const Int& c) { return IntPoly(std::vector<Int>{1, -c}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& IntPoly::leading() const { return coeffs_.empty() ? zero_int() : coeffs_.back(); }

const Int& IntPoly::constant_term() const {
  return coeffs_.empty() ? zero_int() : coeffs_.front();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  if (is_zero() || k == 1) return *this;
  std::vector<Int> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_variable(const Int& c) const {
  std::vector<Int> v(coeffs_);
  Int power = 1;
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return IntPoly(std::move(v));
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Int> quot(rem.size() - db);
  Int q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Int& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    quot[k] = q;
  }
  for (std::size_t i = 0; i < db && i < rem.size(); ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Int& lb = bc[db];
  for (std::size_t top = r.size(); top-- > db;) {
    Int lead = r[top];
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[top - db + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

RatPoly rat_remainder(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  trim(r);
  RatPoly d = b;
  trim(d);
  if (d.empty()) throw std::invalid_argument("rat_remainder by zero polynomial");
  while (r.size() >= d.size()) {
    Rat factor = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= factor * d[j];
    r.pop_back();
    trim(r);
  }
  return r;
}

RatPoly rat_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

}  // namespace zetalab
