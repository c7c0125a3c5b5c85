#include "zetalab/zeta.hpp"

#include <algorithm>

#include "zetalab/error.hpp"
#include "zetalab/expr.hpp"
#include "zetalab/finite_field.hpp"

namespace zetalab::zeta {

PowerSeries series_from_counts(const std::vector<Int>& counts) {
  if (counts.empty()) throw Error(ErrorCode::InsufficientTerms, "no counts supplied");
  std::vector<Int> z(counts.size() + 1);
  z[0] = 1;
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    Int acc = 0;
    for (std::size_t m = 1; m <= n; ++m) acc += counts[m - 1] * z[n - m];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n) || acc < 0) {
      throw Error(ErrorCode::NonIntegralSeries,
                  "series coefficient z_" + std::to_string(n) + " = " + acc.get_str() + "/" + std::to_string(n) +
                      " is not a nonnegative integer");
    }
    mpz_divexact_ui(z[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  PowerSeries s;
  for (auto& c : z) s.coeffs.emplace_back(c);
  return s;
}

std::vector<Rat> series_of(const IntPoly& num, const IntPoly& den, std::size_t order) {
  if (den.constant_term() == 0) throw Error(ErrorCode::DivisionByZero, "series of a function with a pole at 0");
  std::vector<Rat> z(order + 1);
  const Rat d0 = den.constant_term();
  for (std::size_t n = 0; n <= order; ++n) {
    Rat acc = num.coeff(n);
    const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(den.degree(), 0)));
    for (std::size_t j = 1; j <= top; ++j) acc -= Rat(den.coeff(j)) * z[n - j];
    z[n] = acc / d0;
  }
  return z;
}

ZetaFunction ZetaFunction::make(IntPoly num, IntPoly den, std::uint64_t p, unsigned e) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) throw Error(ErrorCode::NonIntegralSeries, "zero numerator is not a zeta function");
  IntPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = *exact_divide(num, g);
    den = *exact_divide(den, g);
  }
  Int c;
  Int cn = num.content(), cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    std::vector<Int> a = num.coeffs(), b = den.coeffs();
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : b) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num = IntPoly(std::move(a));
    den = IntPoly(std::move(b));
  }
  if (den.constant_term() < 0) {
    num = -num;
    den = -den;
  }
  if (num.constant_term() != 1 || den.constant_term() != 1) {
    throw Error(ErrorCode::NonIntegralSeries, "(" + num.to_string() + ")/(" + den.to_string() +
                                                  ") does not normalize into 1 + T*Z[T]");
  }
  return ZetaFunction(std::move(num), std::move(den), p, e);
}

ZetaFunction ZetaFunction::one(std::uint64_t p, unsigned e) {
  return ZetaFunction(IntPoly{1}, IntPoly{1}, p, e);
}

Int ZetaFunction::q() const {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, e_);
  return q;
}

std::string ZetaFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::size_t terms_needed(unsigned D, unsigned guard) { return 2 * static_cast<std::size_t>(D) + guard + 1; }

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Nonzero kernel vector of an integer matrix with more columns than rows.
// Fraction-free (Bareiss) elimination to echelon form, pivots taken column
// by column; all-zero columns are skipped, which keeps each division exact.
std::vector<Rat> kernel_vector(Matrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rat> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t k = pivot_col.size(); k-- > 0;) {
    const std::size_t c = pivot_col[k];
    Rat acc = 0;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (a[k][j] != 0) acc += Rat(a[k][j]) * x[j];
    x[c] = -acc / Rat(a[k][c]);
  }
  return x;
}

IntPoly clear_denominators(const std::vector<Rat>& c) {
  Int l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out;
  for (const auto& x : c) out.push_back(Int(x.get_num() * (l / x.get_den())));
  return IntPoly(std::move(out));
}

}  // namespace

PadeAttempt try_pade(const PowerSeries& series, unsigned D, std::uint64_t p, unsigned e) {
  if (series.coeffs.empty() || series.coeffs[0] != 1)
    throw Error(ErrorCode::NonIntegralSeries, "series must start with 1");
  if (series.order() < 2 * static_cast<std::size_t>(D))
    throw Error(ErrorCode::InsufficientTerms, "degree " + std::to_string(D) + " needs z_0..z_" + std::to_string(2 * D));
  // Unknowns a_0..a_D, b_0..b_D; rows are the coefficients of T^n in a - z*b
  // for n <= 2D, scaled to integers.
  const std::size_t cols = 2 * static_cast<std::size_t>(D) + 2;
  Matrix m;
  for (std::size_t n = 0; n <= 2 * static_cast<std::size_t>(D); ++n) {
    std::vector<Rat> row(cols, 0);
    if (n <= D) row[n] = 1;
    for (std::size_t j = 0; j <= std::min<std::size_t>(n, D); ++j) row[D + 1 + j] = -series.coeffs[n - j];
    Int l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> irow;
    for (const auto& x : row) irow.push_back(Int(x.get_num() * (l / x.get_den())));
    m.push_back(std::move(irow));
  }
  std::vector<Rat> x = kernel_vector(std::move(m), cols);
  // One common scale for both halves.
  IntPoly joint = clear_denominators(x);
  std::vector<Int> ja, jb;
  for (std::size_t i = 0; i <= D; ++i) ja.push_back(joint.coeff(i));
  for (std::size_t i = D + 1; i < cols; ++i) jb.push_back(joint.coeff(i));
  IntPoly a(std::move(ja)), b(std::move(jb));
  PadeAttempt out;
  if (b.is_zero() || a.is_zero()) return out;
  IntPoly g = gcd(a, b);
  if (g.degree() > 0) {
    a = *exact_divide(a, g);
    b = *exact_divide(b, g);
  }
  if (b.constant_term() == 0) return out;
  const auto regenerated = series_of(a, b, series.order());
  std::size_t pos = 0;
  while (pos <= series.order() && regenerated[pos] == series.coeffs[pos]) ++pos;
  out.residual_position = pos;
  if (pos <= series.order()) return out;
  out.fit = ZetaFunction::make(a, b, p, e);
  return out;
}

ZetaFunction reconstruct_rational(const PowerSeries& series, std::uint64_t p, unsigned e,
                                  const ReconstructOptions& options) {
  if (series.order() + 1 < terms_needed(1, options.guard)) {
    throw Error(ErrorCode::InsufficientTerms, "reconstruction needs at least " +
                                                  std::to_string(terms_needed(1, options.guard) - 1) +
                                                  " series terms beyond z_0, got " + std::to_string(series.order()));
  }
  std::size_t best = 0;
  unsigned D = 1;
  for (; D <= options.max_degree && terms_needed(D, options.guard) <= series.order() + 1; ++D) {
    PadeAttempt attempt = try_pade(series, D, p, e);
    if (attempt.fit) return *attempt.fit;
    best = std::max(best, attempt.residual_position);
  }
  throw NoStableFit(best, "no rational function of total degree <= " + std::to_string(D - 1) +
                              " reproduces the " + std::to_string(series.order()) + "-term series");
}

namespace {
void require_same_field(const ZetaFunction& a, const ZetaFunction& b) {
  if (a.p() != b.p() || a.e() != b.e())
    throw Error(ErrorCode::FieldMismatch, "zeta functions over F_" + std::to_string(a.p()) + "^" +
                                              std::to_string(a.e()) + " and F_" + std::to_string(b.p()) + "^" +
                                              std::to_string(b.e()));
}
}  // namespace

ZetaFunction multiply(const ZetaFunction& a, const ZetaFunction& b) {
  require_same_field(a, b);
  return ZetaFunction::make(a.numerator() * b.numerator(), a.denominator() * b.denominator(), a.p(), a.e());
}

ZetaFunction divide(const ZetaFunction& total, const ZetaFunction& closed) {
  require_same_field(total, closed);
  return ZetaFunction::make(total.numerator() * closed.denominator(), total.denominator() * closed.numerator(),
                            total.p(), total.e());
}

ZetaFunction base_change_down(const ZetaFunction& z, unsigned k) {
  if (k < 1) throw Error(ErrorCode::BadFieldParams, "base change degree must be at least 1");
  if (z.e() % k != 0)
    throw Error(ErrorCode::BadFieldParams, "F_" + std::to_string(z.p()) + "^" + std::to_string(z.e()) +
                                               " has no subfield of index " + std::to_string(k));
  return ZetaFunction::make(z.numerator().substitute_power(k), z.denominator().substitute_power(k), z.p(),
                            z.e() / k);
}

std::vector<Int> power_sums(const IntPoly& P, std::size_t M) {
  std::vector<Int> s(M + 1, 0);
  for (std::size_t m = 1; m <= M; ++m) {
    Int acc = -P.coeff(m) * static_cast<unsigned long>(m);
    for (std::size_t i = 1; i < m; ++i) acc -= P.coeff(i) * s[m - i];
    s[m] = acc;
  }
  s.erase(s.begin());
  return s;
}

IntPoly from_power_sums(const std::vector<Int>& sums, std::size_t d) {
  std::vector<Int> c(d + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= d; ++m) {
    Int acc = -sums.at(m - 1);
    for (std::size_t i = 1; i < m; ++i) acc -= c[i] * sums[m - i - 1];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), m)) throw Error(ErrorCode::NonIntegralSeries, "power sums are not integral");
    mpz_divexact_ui(c[m].get_mpz_t(), acc.get_mpz_t(), m);
  }
  return IntPoly(std::move(c));
}

namespace {
IntPoly raise_roots(const IntPoly& P, unsigned k) {
  const std::size_t d = static_cast<std::size_t>(std::max(P.degree(), 0));
  if (d == 0) return P;
  auto s = power_sums(P, d * k);
  std::vector<Int> sk;
  for (std::size_t j = 1; j <= d; ++j) sk.push_back(s[j * k - 1]);
  return from_power_sums(sk, d);
}
}  // namespace

ZetaFunction base_change_up(const ZetaFunction& z, unsigned k) {
  if (k < 1) throw Error(ErrorCode::BadFieldParams, "base change degree must be at least 1");
  return ZetaFunction::make(raise_roots(z.numerator(), k), raise_roots(z.denominator(), k), z.p(), z.e() * k);
}

ExpandedCounts expand(const ZetaFunction& z, std::size_t M) {
  ExpandedCounts out;
  auto sn = power_sums(z.numerator(), M);
  auto sd = power_sums(z.denominator(), M);
  for (std::size_t m = 0; m < M; ++m) {
    out.counts.push_back(sd[m] - sn[m]);
    if (out.counts.back() < 0) out.has_negative = true;
  }
  return out;
}

ZetaFunction parse_zeta_literal(std::string_view text, std::uint64_t p, unsigned e) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw SyntaxError(1, i + 1, "end of input", "second top-level '/'");
      slash = i;
    }
  }
  const std::vector<std::string> vars = {"T"};
  auto side = [&](std::string_view part, std::size_t offset) {
    return expr::to_univariate(expr::parse_polynomial(part, vars, {1, offset + 1}));
  };
  IntPoly num, den;
  if (slash == std::string_view::npos) {
    num = side(text, 0);
    den = IntPoly{1};
  } else {
    num = side(text.substr(0, slash), 0);
    den = side(text.substr(slash + 1), slash + 1);
  }
  if (num.constant_term() != 1) throw SyntaxError(1, 1, "numerator with constant term 1", "constant term is " + num.constant_term().get_str());
  if (den.constant_term() != 1)
    throw SyntaxError(1, slash == std::string_view::npos ? 1 : slash + 2, "denominator with constant term 1",
                      "constant term is " + den.constant_term().get_str());
  if (!field::is_prime(p) || e < 1)
    throw Error(ErrorCode::BadFieldParams, "p=" + std::to_string(p) + " e=" + std::to_string(e) + " is not a field");
  return ZetaFunction::make(num, den, p, e);
}

}  // namespace zetalab::zeta
