#include "zetalab/finite_field.hpp"

#include <algorithm>

#include "zetalab/error.hpp"

namespace zetalab::field {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void check_prime(std::uint64_t p, const FieldLimits& limits) {
  if (p > limits.max_prime) {
    throw Error(ErrorCode::BadFieldParams,
                "p = " + std::to_string(p) + " exceeds the prime limit " +
                    std::to_string(limits.max_prime));
  }
  if (!is_prime(p)) throw Error(ErrorCode::BadFieldParams, "p = " + std::to_string(p) + " is not prime");
}

void check_degree(unsigned e, const FieldLimits& limits) {
  if (e < 1) throw Error(ErrorCode::BadFieldParams, "extension degree must be at least 1");
  if (e > limits.max_degree) {
    throw Error(ErrorCode::CapExceeded, "extension degree " + std::to_string(e) +
                                            " exceeds the cap " + std::to_string(limits.max_degree));
  }
}

}  // namespace

modp::Poly find_irreducible(std::uint64_t p, unsigned e, const FieldLimits& limits) {
  check_degree(e, limits);
  check_prime(p, limits);
  // Odometer over (c_0, ..., c_{e-1}) with c_0 least significant, so the scan
  // visits polynomials in increasing order of sum c_i p^i.
  modp::Poly f(e + 1, 0);
  f[e] = 1;
  for (;;) {
    if (modp::is_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < e && ++f[i] == p) {
      f[i] = 0;
      ++i;
    }
    if (i == e) break;
  }
  throw Error(ErrorCode::BadFieldParams, "no irreducible polynomial found");
}

std::shared_ptr<const FieldParams> FieldParams::create(std::uint64_t p, unsigned e,
                                                       modp::Poly modulus,
                                                       const FieldLimits& limits) {
  check_degree(e, limits);
  check_prime(p, limits);
  for (auto& c : modulus) c %= p;
  modp::trim(modulus);
  if (modp::degree(modulus) != static_cast<int>(e) || modulus.back() != 1) {
    throw Error(ErrorCode::BadFieldParams, "modulus must be monic of degree e");
  }
  if (!modp::is_irreducible(modulus, p)) {
    throw Error(ErrorCode::BadFieldParams, "modulus is reducible over F_p");
  }
  return std::shared_ptr<const FieldParams>(new FieldParams(p, e, std::move(modulus)));
}

std::shared_ptr<const FieldParams> FieldParams::standard(std::uint64_t p, unsigned e,
                                                         const FieldLimits& limits) {
  return create(p, e, find_irreducible(p, e, limits), limits);
}

mpz_class FieldParams::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, e_);
  return q;
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const std::uint64_t p = field_->p();
  for (auto& c : coeffs_) c %= p;
  if (coeffs_.size() > field_->e()) {
    modp::trim(coeffs_);
    coeffs_ = modp::rem(coeffs_, field_->modulus(), p);
  }
  coeffs_.resize(field_->e(), 0);
}

FieldElement FieldElement::zero(FieldPtr field) {
  const unsigned e = field->e();
  return FieldElement(std::move(field), std::vector<std::uint64_t>(e, 0));
}

FieldElement FieldElement::one(FieldPtr field) { return from_int(std::move(field), 1); }

FieldElement FieldElement::from_int(FieldPtr field, long long value) {
  const auto p = static_cast<long long>(field->p());
  long long r = value % p;
  if (r < 0) r += p;
  return FieldElement(std::move(field), {static_cast<std::uint64_t>(r)});
}

FieldElement FieldElement::from_index(FieldPtr field, std::uint64_t index) {
  std::vector<std::uint64_t> c(field->e(), 0);
  for (auto& d : c) {
    d = index % field->p();
    index /= field->p();
  }
  return FieldElement(std::move(field), std::move(c));
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_->p() + coeffs_[i];
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i > 0) out += (coeffs_[i] != 1 ? "*x" : "x");
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

modp::Poly trimmed(const FieldElement& a) {
  modp::Poly c = a.coeffs();
  modp::trim(c);
  return c;
}

FieldElement inverse_impl(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Extended Euclid in F_p[x] against the modulus.
  const std::uint64_t p = a.field()->p();
  modp::Poly r0 = a.field()->modulus(), r1 = trimmed(a);
  modp::Poly s0{}, s1{1};
  while (modp::degree(r1) > 0) {
    modp::Poly q, r;
    modp::divmod(r0, r1, q, r, p);
    modp::Poly s = modp::sub(s0, modp::mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  return FieldElement(a.field(), modp::scale(s1, modp::inv_mod(r1[0], p), p));
}

}  // namespace

FieldElement arith(const FieldElement& a, const FieldElement& b, Op op) {
  check_same_field(a, b);
  const std::uint64_t p = a.field()->p();
  switch (op) {
    case Op::Add: return FieldElement(a.field(), modp::add(a.coeffs(), b.coeffs(), p));
    case Op::Sub: return FieldElement(a.field(), modp::sub(a.coeffs(), b.coeffs(), p));
    case Op::Mul: {
      modp::Poly prod = modp::mul(trimmed(a), trimmed(b), p);
      return FieldElement(a.field(), modp::rem(prod, a.field()->modulus(), p));
    }
    case Op::Div:
      if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero field element");
      return arith(a, inverse_impl(b), Op::Mul);
  }
  throw Error(ErrorCode::FieldMismatch, "unknown operation");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::Add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::Sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::Mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return arith(a, b, Op::Div); }
FieldElement operator-(const FieldElement& a) { return FieldElement::zero(a.field()) - a; }
FieldElement inverse(const FieldElement& a) { return inverse_impl(a); }

FieldElement pow(const FieldElement& a, const mpz_class& exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  FieldElement result = FieldElement::one(a.field());
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * a;
  }
  return result;
}

ElementRange::ElementRange(FieldPtr field) : field_(std::move(field)) {
  mpz_class q = field_->order();
  if (!q.fits_ulong_p() || q == 0) throw Error(ErrorCode::CapExceeded, "field too large to enumerate");
  size_ = q.get_ui();
}

ElementRange enumerate(const FieldPtr& field) { return ElementRange(field); }

}  // namespace zetalab::field
