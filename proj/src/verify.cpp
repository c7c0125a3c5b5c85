#include "zetalab/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetalab/newton.hpp"

namespace zetalab::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == Status::Fail;
  return n;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& h : other.header)
    if (std::find(header.begin(), header.end(), h) == header.end()) header.push_back(h);
  for (const auto& c : other.checks)
    if (!find(c.name)) checks.push_back(c);
}

std::string VerificationReport::machine() const {
  std::string out;
  for (const auto& c : checks) out += c.name + "\t" + to_string(c.status) + "\t" + c.witness + "\n";
  return out;
}

std::string VerificationReport::human() const {
  std::string out = "input: " + input + "\n";
  for (const auto& h : header) out += h + "\n";
  for (const auto& c : checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "N/A ";
    out += "[" + tag + "] " + c.name + ": " + c.witness + "\n";
    out += "       " + c.anchor + "\n";
  }
  out += std::to_string(checks.size()) + " checks, " + std::to_string(failures()) + " failed\n";
  return out;
}

namespace {

std::string tag(const std::string& name, unsigned r) { return name + "[r=" + std::to_string(r) + "]"; }

CheckRecord record(std::string name, std::string anchor, bool ok, std::string witness) {
  return {std::move(name), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(witness)};
}

newton::SlopeMultiset slopes_of(const std::vector<factor::Factor>& factors, const zeta::ZetaFunction& z) {
  newton::SlopeMultiset s;
  for (const auto& f : factors) {
    auto n = newton::newton_polygon(f.poly, z.p(), z.e()).slopes;
    for (unsigned i = 0; i < f.multiplicity; ++i) s = s + n;
  }
  return s;
}

std::string factor_list(const std::vector<factor::Factor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ", ";
    out += f.poly.to_string();
    if (f.multiplicity > 1) out += " (x" + std::to_string(f.multiplicity) + ")";
  }
  return out.empty() ? "none" : out;
}

void add_header(VerificationReport& rep, const zeta::ZetaFunction& z) {
  rep.input = z.to_string();
  rep.header.push_back("zeta: " + z.to_string());
  rep.header.push_back("field: q = " + z.q().get_str() + " (p = " + std::to_string(z.p()) +
                       ", e = " + std::to_string(z.e()) + ")");
}

CheckRecord leftover_check(const weil::WeightDecomposition& d) {
  const auto& lo = d.leftover;
  std::string w = lo.is_trivial() ? "no factor outside the Weil buckets"
                                  : "numerator: " + factor_list(lo.num_factors) +
                                        "; denominator: " + factor_list(lo.den_factors);
  return record("LEFTOVER", "every factor is pure of some integer weight", lo.is_trivial(), w);
}

}  // namespace

VerificationReport verify_proper_smooth(const zeta::ZetaFunction& z, const ProperSmoothOptions& options) {
  return verify_proper_smooth(z, weil::classify(z), options);
}

VerificationReport verify_proper_smooth(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d,
                                        const ProperSmoothOptions& options) {
  VerificationReport rep;
  add_header(rep, z);
  rep.header.push_back("assertion: proper smooth (supplied by the caller, not certified)");
  const Int q = z.q();
  for (unsigned r : d.weights()) {
    const auto& part = d.parts.at(r);
    const bool odd = r % 2 == 1;
    const auto& away = odd ? part.den_factors : part.num_factors;
    rep.checks.push_back(record(tag("SIDE", r), "weight-r part is a polynomial on the cohomological side",
                                away.empty(),
                                away.empty() ? std::string(odd ? "numerator" : "denominator") + " only"
                                             : "found on the wrong side: " + factor_list(away)));
    // P_r: every weight-r factor, whichever side it sits on.
    std::vector<factor::Factor> all = part.num_factors;
    all.insert(all.end(), part.den_factors.begin(), part.den_factors.end());
    const auto slopes = slopes_of(all, z);
    const Rat rr = static_cast<long>(r);
    rep.checks.push_back(record(tag("SYMMETRY", r), "slopes of P_r are r-autodual", newton::is_autodual(slopes, rr),
                                "slopes " + newton::to_string(slopes)));
    auto dm = newton::dieudonne_manin_check(slopes);
    rep.checks.push_back(record(tag("DM", r), "slope multiplicities are multiples of their denominators", dm.ok,
                                dm.ok ? "slopes " + newton::to_string(slopes)
                                      : "slope " + dm.witness->get_str() + " has multiplicity " +
                                            std::to_string(slopes.multiplicity(*dm.witness))));
    IntPoly P{1};
    for (const auto& f : all) P *= pow(f.poly, f.multiplicity);
    const int b = P.degree();
    if (odd) {
      rep.checks.push_back(record(tag("PARITY", r), "odd-weight Betti number is even", b % 2 == 0,
                                  "b_" + std::to_string(r) + " = " + std::to_string(b)));
      auto det = weil::det_frobenius(P, q, r);
      rep.checks.push_back(record(tag("DET", r), "determinant of Frobenius equals q^(r b_r / 2)", det.matches,
                                  "det = " + det.value.to_string(q) + ", q^(r b_r/2) = " +
                                      det.reference.to_string(q)));
    }
  }
  rep.checks.push_back(leftover_check(d));
  if (options.dim) {
    const unsigned top = 2 * *options.dim;
    rep.header.push_back("dimension: " + std::to_string(*options.dim));
    auto p0 = weil::weight_part(d, 0);
    const bool ok0 = p0.num_factors.empty() && p0.den_factors.size() == 1 &&
                     p0.den_factors[0].multiplicity == 1 && p0.den_factors[0].poly == IntPoly({1, -1});
    rep.checks.push_back(record(tag("EXTREMES", 0), "geometrically connected: P_0 = 1 - T", ok0,
                                "weight-0 part " + p0.to_string()));
    auto ptop = weil::weight_part(d, top);
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), *options.dim);
    const bool okt = ptop.num_factors.empty() && ptop.den_factors.size() == 1 &&
                     ptop.den_factors[0].multiplicity == 1 && ptop.den_factors[0].poly == IntPoly::linear_factor(qd);
    rep.checks.push_back(record(tag("EXTREMES", top), "geometrically connected: P_2d = 1 - q^d T", okt,
                                "weight-" + std::to_string(top) + " part " + ptop.to_string()));
  }
  return rep;
}

VerificationReport verify_sign(const zeta::ZetaFunction& z, unsigned r) {
  return verify_sign(z, weil::classify(z), r);
}

VerificationReport verify_sign(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d, unsigned r) {
  if (r % 2 == 0) throw std::invalid_argument("verify_sign requires an odd weight");
  VerificationReport rep;
  add_header(rep, z);
  const auto red = weil::reduced_form(weil::weight_part(d, r), z.q(), r);
  const std::string m = "m0 = " + std::to_string(red.m0) + ", m1 = " + std::to_string(red.m1) +
                        ", m(X/F_q, " + std::to_string(r) + ") = " + std::to_string(red.m0);
  rep.checks.push_back(record(tag("SIGN+", r), "multiplicity of +sqrt(q^r) is even", red.m0 % 2 == 0, m));
  rep.checks.push_back(record(tag("SIGN-", r), "multiplicity of -sqrt(q^r) is even", red.m1 % 2 == 0, m));
  return rep;
}

VerificationReport verify_general(const zeta::ZetaFunction& z) { return verify_general(z, weil::classify(z)); }

VerificationReport verify_general(const zeta::ZetaFunction& z, const weil::WeightDecomposition& d) {
  VerificationReport rep;
  add_header(rep, z);
  for (unsigned r : d.weights()) {
    const auto& part = d.parts.at(r);
    if (r % 2 == 1) {
      const int deg = part.degree();
      rep.checks.push_back(record(tag("DEGREE-PARITY", r), "odd-weight part has even degree", deg % 2 == 0,
                                  "degree " + std::to_string(deg) + " of " + part.to_string()));
    }
    const auto num = slopes_of(part.num_factors, z);
    const auto den = slopes_of(part.den_factors, z);
    rep.checks.push_back(record(tag("MOD2-AUTODUAL", r), "slopes are r-autodual modulo 2",
                                newton::is_autodual_mod2(num, den, Rat(static_cast<long>(r))),
                                "numerator slopes " + newton::to_string(num) + ", denominator slopes " +
                                    newton::to_string(den)));
    if (r % 2 == 1) rep.append(verify_sign(z, d, r));
  }
  rep.checks.push_back(leftover_check(d));
  return rep;
}

}  // namespace zetalab::verify
