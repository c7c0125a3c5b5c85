#include "zetalab/weil.hpp"

#include "zetalab/error.hpp"

namespace zetalab::weil {

namespace {

Int power(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

int sign(const Rat& x) { return sgn(x); }

// Sign of A + B*sqrt(Q).
int surd_sign(const Rat& A, const Rat& B, const Int& Q) {
  const int sa = sign(A), sb = sign(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rat lhs = A * A, rhs = B * B * Rat(Q);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// Sign of P(c * sqrt(Q)) for a rational polynomial P and integer c.
int sign_at_surd(const RatPoly& P, long c, const Int& Q) {
  Rat A = 0, B = 0;
  Int cpow = 1, qpow = 1;  // c^n, Q^floor(n/2)
  for (std::size_t n = 0; n < P.size(); ++n) {
    if (n > 0) {
      cpow *= c;
      if (n % 2 == 0) qpow *= Q;
    }
    if (P[n] == 0) continue;
    Rat term = P[n] * Rat(cpow * qpow);
    if (n % 2 == 0) A += term;
    else B += term;
  }
  return surd_sign(A, B, Q);
}

std::size_t sign_changes(const std::vector<RatPoly>& seq, long c, const Int& Q) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = sign_at_surd(s, c, Q);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

// h with every reciprocal root +-sqrt(Q) removed.
IntPoly strip_real_roots(IntPoly h, const Int& Q) {
  std::vector<IntPoly> real_factors;
  if (auto s = exact_sqrt(Q)) {
    real_factors = {IntPoly::linear_factor(*s), IntPoly::linear_factor(-*s)};
  } else {
    real_factors = {IntPoly(std::vector<Int>{1, 0, -Q})};
  }
  for (const auto& f : real_factors) {
    while (h.degree() >= f.degree()) {
      auto q = exact_divide(h, f);
      if (!q) break;
      h = *q;
    }
  }
  return h;
}

}  // namespace

std::optional<unsigned> candidate_weight(const IntPoly& h, const Int& q) {
  const int d = h.degree();
  if (d < 1 || q < 2) return std::nullopt;
  Int target = h.leading() * h.leading();
  unsigned long k = 0;
  while (target > 1 && mpz_divisible_p(target.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), q.get_mpz_t());
    ++k;
  }
  if (target != 1 || k % static_cast<unsigned long>(d) != 0) return std::nullopt;
  return static_cast<unsigned>(k / static_cast<unsigned long>(d));
}

std::optional<IntPoly> trace_polynomial(const IntPoly& h, const Int& Q) {
  const int d = h.degree();
  if (d < 0 || d % 2 != 0) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(d / 2);
  // Monic reversal m(T) = T^d h(1/T): a_i = h_{d-i}.
  auto a = [&](std::size_t i) { return h.coeff(static_cast<std::size_t>(d) - i); };
  if (a(static_cast<std::size_t>(d)) != 1) return std::nullopt;
  Int qj = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    qj *= Q;
    if (a(k - j) != qj * a(k + j)) return std::nullopt;
  }
  // w_0 = 2, w_1 = u, w_j = u w_{j-1} - Q w_{j-2}: T^j + (Q/T)^j in u = T + Q/T.
  const IntPoly u{0, 1};
  IntPoly w_prev{2}, w = u;
  IntPoly out = IntPoly::constant(a(k));
  for (std::size_t j = 1; j <= k; ++j) {
    out += w * a(k + j);
    IntPoly next = u * w - w_prev * Q;
    w_prev = std::move(w);
    w = std::move(next);
  }
  return out;
}

std::size_t roots_in_weil_interval(const IntPoly& P, const Int& Q) {
  if (P.degree() < 1) return 0;
  std::vector<RatPoly> seq;
  seq.push_back(to_rat(P));
  seq.push_back(rat_derivative(seq[0]));
  while (!seq.back().empty()) {
    RatPoly r = rat_remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  const std::size_t va = sign_changes(seq, -2, Q), vb = sign_changes(seq, 2, Q);
  // V(a) - V(b) counts roots in (a, b]; drop a root at b itself.
  std::size_t count = va - vb;
  if (sign_at_surd(seq[0], 2, Q) == 0) --count;
  return count;
}

bool is_pure_weight(const IntPoly& h, const Int& q, unsigned r) {
  auto cw = candidate_weight(h, q);
  if (!cw || *cw != r) {
    throw Error(ErrorCode::NotPrechecked, h.to_string() + " does not have candidate weight " + std::to_string(r) +
                                              " over F_" + q.get_str());
  }
  const Int Q = power(q, r);
  IntPoly rest = strip_real_roots(h, Q);
  if (rest.degree() == 0) return true;
  if (rest.degree() % 2 != 0) return false;
  auto ptr = trace_polynomial(rest, Q);
  if (!ptr) return false;
  IntPoly g = gcd(*ptr, ptr->derivative());
  IntPoly squarefree = g.degree() > 0 ? *exact_divide(ptr->primitive_part(), g) : ptr->primitive_part();
  return roots_in_weil_interval(squarefree, Q) == static_cast<std::size_t>(squarefree.degree());
}

IntPoly WeightPart::numerator() const {
  IntPoly p{1};
  for (const auto& f : num_factors) p *= pow(f.poly, f.multiplicity);
  return p;
}

IntPoly WeightPart::denominator() const {
  IntPoly p{1};
  for (const auto& f : den_factors) p *= pow(f.poly, f.multiplicity);
  return p;
}

int WeightPart::degree() const { return numerator().degree() - denominator().degree(); }

std::string WeightPart::to_string() const {
  return "(" + numerator().to_string() + ")/(" + denominator().to_string() + ")";
}

std::vector<unsigned> WeightDecomposition::weights() const {
  std::vector<unsigned> out;
  for (const auto& [r, part] : parts)
    if (!part.is_trivial()) out.push_back(r);
  return out;
}

WeightDecomposition classify(const zeta::ZetaFunction& z) {
  WeightDecomposition out;
  out.q = z.q();
  auto place = [&](const IntPoly& side, bool numerator) {
    for (const auto& f : factor::factor_integer_poly(side).factors) {
      auto cw = candidate_weight(f.poly, out.q);
      WeightPart* bucket = &out.leftover;
      if (cw && is_pure_weight(f.poly, out.q, *cw)) bucket = &out.parts[*cw];
      (numerator ? bucket->num_factors : bucket->den_factors).push_back(f);
    }
  };
  place(z.numerator(), true);
  place(z.denominator(), false);
  return out;
}

WeightPart weight_part(const WeightDecomposition& d, unsigned r) {
  auto it = d.parts.find(r);
  return it == d.parts.end() ? WeightPart{} : it->second;
}

WeightPart weight_part(const zeta::ZetaFunction& z, unsigned r) { return weight_part(classify(z), r); }

ReducedForm reduced_form(const WeightPart& part, const Int& q, unsigned r) {
  ReducedForm out;
  out.r = r;
  out.q = q;
  const Int Q = power(q, r);
  const auto s = exact_sqrt(Q);
  auto absorb = [&](const std::vector<factor::Factor>& factors, long sign, IntPoly& rest) {
    for (const auto& f : factors) {
      auto cw = candidate_weight(f.poly, q);
      if (!cw || *cw != r || !is_pure_weight(f.poly, q, r)) {
        throw Error(ErrorCode::NotPure, f.poly.to_string() + " is not pure of weight " + std::to_string(r));
      }
      const long m = sign * static_cast<long>(f.multiplicity);
      if (s && f.poly == IntPoly::linear_factor(*s)) {
        out.m0 += m;
      } else if (s && f.poly == IntPoly::linear_factor(-*s)) {
        out.m1 += m;
      } else if (!s && f.poly == IntPoly(std::vector<Int>{1, 0, -Q})) {
        out.m0 += m;
        out.m1 += m;
      } else {
        rest *= pow(f.poly, f.multiplicity);
      }
    }
  };
  absorb(part.num_factors, 1, out.f);
  absorb(part.den_factors, -1, out.g);
  return out;
}

long m_order(const zeta::ZetaFunction& z, unsigned r) { return reduced_form(weight_part(z, r), z.q(), r).m0; }

namespace {
SurdValue make_surd(Int coefficient, bool has_sqrt, const Int& q) {
  if (has_sqrt) {
    if (auto s = exact_sqrt(q)) return {coefficient * *s, false};
  }
  return {std::move(coefficient), has_sqrt};
}
}  // namespace

std::string SurdValue::to_string(const Int& q) const {
  if (!has_sqrt) return coefficient.get_str();
  std::string root = "sqrt(" + q.get_str() + ")";
  if (coefficient == 1) return root;
  if (coefficient == -1) return "-" + root;
  return coefficient.get_str() + "*" + root;
}

DetResult det_frobenius(const IntPoly& P, const Int& q, unsigned r) {
  DetResult out;
  const unsigned long b = static_cast<unsigned long>(std::max(P.degree(), 0));
  Int top = P.degree() >= 0 ? P.leading() : Int(1);
  if (b % 2 == 1) top = -top;
  out.value = make_surd(top, false, q);
  const unsigned long rb = static_cast<unsigned long>(r) * b;
  out.reference = make_surd(power(q, rb / 2), rb % 2 == 1, q);
  out.matches = out.value == out.reference;
  return out;
}

}  // namespace zetalab::weil
