// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "weil_corpus.hpp"
#include "zetalab/error.hpp"
#include "zetalab/factor.hpp"
#include "zetalab/newton.hpp"
#include "zetalab/pipeline.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/weil.hpp"

using namespace zetalab;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kClassicalSeconds = 10.0;
constexpr double kEllipticSweepSeconds = 300.0;
constexpr double kFactorSeconds = 60.0;
constexpr long double kRootModulusTol = 1e-9L;
constexpr unsigned kGuard = 4;
constexpr int kFactorProducts = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << s << "s";
  return o.str();
}

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

zeta::ZetaFunction literal(const std::string& s, std::uint64_t p, unsigned e) {
  return zeta::parse_zeta_literal(s, p, e);
}

pipeline::PipelineOptions options() {
  pipeline::PipelineOptions o;
  o.reconstruct.guard = kGuard;
  return o;
}

// Fixture zetas are shared between criteria.
std::map<std::string, pipeline::ZetaResult>& memo() {
  static std::map<std::string, pipeline::ZetaResult> m;
  return m;
}

const pipeline::ZetaResult& fixture_zeta(const std::string& name) {
  auto it = memo().find(name);
  if (it != memo().end()) return it->second;
  auto r = pipeline::zeta_of_variety(variety::load_variety(oracle::fixture(name)), options());
  return memo().emplace(name, std::move(r)).first->second;
}

std::vector<unsigned> odd_weights(const std::vector<zeta::ZetaFunction>& zs) {
  std::set<unsigned> s = {1};
  for (const auto& z : zs)
    for (unsigned r : weil::classify(z).weights())
      if (r % 2 == 1) s.insert(r);
  return {s.begin(), s.end()};
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  int cases = 0;
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto start = Clock::now();
      auto spec = variety::parse_variety("p=" + std::to_string(p) + " e=" + std::to_string(e) + " projective n=" +
                                         std::to_string(n) + "\n");
      auto z = pipeline::zeta_of_variety(spec, options()).zeta;
      const double t = seconds_since(start);
      worst = std::max(worst, t);
      IntPoly den{1};
      const Int q = ipow(Int(static_cast<unsigned long>(p)), e);
      for (unsigned i = 0; i <= n; ++i) den *= IntPoly::linear_factor(ipow(q, i));
      auto expect = zeta::ZetaFunction::make(IntPoly{1}, den, p, e);
      ++cases;
      if (!(z == expect)) o.fail("P^" + std::to_string(n) + "/F_" + q.get_str() + " gave " + z.to_string());
      if (t > kClassicalSeconds) o.fail("P^" + std::to_string(n) + "/F_" + q.get_str() + " took " + fmt(t));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " projective spaces exact, slowest " + fmt(worst);
  return o;
}

// Everything criterion 2 demands of one curve, or the reason it fails.
std::optional<std::string> check_curve(std::uint64_t p, long a, long b) {
  const std::string text = "p=" + std::to_string(p) + " e=1 projective n=2\nE: x0*x2^2 - x1^3 - " + std::to_string(a) +
                           "*x1*x0^2 - " + std::to_string(b) + "*x0^3\n";
  auto spec = variety::parse_variety(text, "a" + std::to_string(a) + "b" + std::to_string(b));
  const Int n1 = oracle::brute_count(spec, 1);
  const Int trace = Int(static_cast<unsigned long>(p + 1)) - n1;
  const Int P = static_cast<unsigned long>(p);
  auto expect = zeta::ZetaFunction::make(IntPoly(std::vector<Int>{1, -trace, P}),
                                         IntPoly::linear_factor(1) * IntPoly::linear_factor(P), p, 1);
  std::string tag = "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
  zeta::ZetaFunction z = zeta::ZetaFunction::one(p, 1);
  try {
    z = pipeline::zeta_of_variety(spec, options()).zeta;
  } catch (const Error& e) {
    return tag + ": " + e.what();
  }
  if (!(z == expect)) return tag + ": reconstructed " + z.to_string() + ", expected " + expect.to_string();
  auto rep = verify::verify_proper_smooth(z);
  if (!rep.all_passed()) return tag + ": proper smooth suite failed " + std::to_string(rep.failures()) + " checks";
  const auto* sym = rep.find("SYMMETRY[r=1]");
  if (!sym || (sym->witness != "slopes {0, 1}" && sym->witness != "slopes {1/2, 1/2}"))
    return tag + ": unexpected weight-1 slopes";
  if (!rep.find("PARITY[r=1]") || rep.find("PARITY[r=1]")->witness != "b_1 = 2") return tag + ": b_1 != 2";
  const std::string det = "det = " + std::to_string(p) + ", q^(r b_r/2) = " + std::to_string(p);
  if (!rep.find("DET[r=1]") || rep.find("DET[r=1]")->witness != det) return tag + ": det != p";
  return std::nullopt;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  std::string summary;
  bool out_of_time = false;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    int total = 0, passed = 0;
    std::string first_failure;
    bool refused = false;
    for (long a = 0; a < static_cast<long>(p); ++a)
      for (long b = 0; b < static_cast<long>(p); ++b) {
        if ((4 * a * a * a + 27 * b * b) % static_cast<long>(p) == 0) continue;
        ++total;
        if (refused) continue;
        if (out_of_time || seconds_since(start) > kEllipticSweepSeconds) {
          out_of_time = true;
          continue;
        }
        auto err = check_curve(p, a, b);
        if (!err) {
          ++passed;
        } else {
          if (first_failure.empty()) first_failure = *err;
          // A budget refusal applies to every curve over this prime.
          refused = err->find("BudgetExceeded") != std::string::npos;
        }
      }
    summary += (summary.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + " " + std::to_string(passed) +
               "/" + std::to_string(total);
    if (passed != total) o.fail("p=" + std::to_string(p) + ": " + std::to_string(passed) + "/" +
                                std::to_string(total) + " curves verified" +
                                (first_failure.empty() ? "" : "; first failure " + first_failure));
  }
  const double t = seconds_since(start);
  if (out_of_time) o.fail("sweep deadline of " + fmt(kEllipticSweepSeconds) + " reached");
  if (t > kEllipticSweepSeconds) o.fail("sweep took " + fmt(t));
  o.detail = summary + " in " + fmt(t) + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome criterion3() {
  Outcome o;
  // Scan y^2 = x^3 + a x + b over F_3 for a smooth curve with trace 0.
  const std::uint64_t p = 3;
  std::optional<std::pair<long, long>> found;
  for (long a = 1; a < 3 && !found; ++a)
    for (long b = 0; b < 3 && !found; ++b) {
      auto s = variety::parse_variety("p=3 e=1 projective n=2\nE: x0*x2^2 - x1^3 - " + std::to_string(a) +
                                      "*x1*x0^2 - " + std::to_string(b) + "*x0^3\n");
      if (oracle::brute_count(s, 1) == 4) found = {a, b};
    }
  if (!found) {
    o.fail("no supersingular curve in the scan");
    return o;
  }
  auto spec = variety::parse_variety("p=3 e=2 projective n=2\nE: x0*x2^2 - x1^3 - " + std::to_string(found->first) +
                                     "*x1*x0^2 - " + std::to_string(found->second) + "*x0^3\n");
  auto res = pipeline::zeta_of_variety(spec, options());
  for (unsigned m = 1; m <= 2; ++m)
    if (oracle::brute_count(spec, m) != res.counts[m - 1]) o.fail("engine count differs from brute force at m=" + std::to_string(m));
  const Int q = res.zeta.q();
  auto part = weil::weight_part(res.zeta, 1);
  auto red = weil::reduced_form(part, q, 1);
  const long root_mult = std::abs(red.m0) + std::abs(red.m1);
  if (root_mult != 2 || part.degree() != 2) o.fail("weight-1 part " + part.to_string() + " does not have +-sqrt(q) twice");
  auto rep = verify::verify_sign(res.zeta, 1);
  if (!rep.all_passed()) o.fail("sign suite failed");
  if (!(red.m0 == 0 || red.m0 == 2 || red.m0 == -2) || red.m0 % 2 != 0) o.fail("m0 = " + std::to_string(red.m0));
  if (o.pass)
    o.detail = "y^2 = x^3 + " + std::to_string(found->first) + "x + " + std::to_string(found->second) +
               " over F_9: weight-1 part " + part.numerator().to_string() + ", m0 = " + std::to_string(red.m0) +
               ", m1 = " + std::to_string(red.m1);
  return o;
}

Outcome criterion4() {
  Outcome o;
  pipeline::Input in;
  in.zeta_literal = "(1-2*T)/((1-T)*(1-4*T))";
  in.p = 2;
  in.e = 2;
  pipeline::Suites suites;
  suites.proper_smooth = true;
  auto a = pipeline::run_pipeline(in, suites, options());
  auto b = pipeline::run_pipeline(in, suites, options());
  auto st = [&](const char* n) {
    const auto* c = a.report.find(n);
    return c ? c->status : verify::Status::NotApplicable;
  };
  if (st("SYMMETRY[r=1]") != verify::Status::Pass) o.fail("SYMMETRY[r=1] did not pass");
  if (st("PARITY[r=1]") != verify::Status::Fail) o.fail("PARITY[r=1] did not fail");
  if (st("DM[r=1]") != verify::Status::Fail) o.fail("DM[r=1] did not fail");
  if (a.report.machine() != b.report.machine()) o.fail("report differs between runs");
  std::ifstream golden(oracle::fixture("remark_report.tsv"), std::ios::binary);
  std::stringstream g;
  g << golden.rdbuf();
  if (g.str() != a.report.machine()) o.fail("report differs from the frozen copy");
  if (o.pass) o.detail = "SYMMETRY pass, PARITY fail, DM fail; report matches the frozen bytes";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int strata = 0, base_changes = 0;
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {"elliptic5.var", 0},  {"supersingular2.var", 0}, {"conic3.var", 0},         {"two_lines3.var", 0},
      {"p2_over_f3.var", 0}, {"elliptic7.var", 0},      {"supersingular4.var", 0}, {"gm2_3.var", 0},
  };

  for (const auto& [name, k] : cases) {
    auto X = variety::load_variety(oracle::fixture(name));
    auto zx = fixture_zeta(name).zeta;
    auto zf = pipeline::zeta_of_variety(variety::hyperplane_section(X, k), options()).zeta;
    auto zu = pipeline::zeta_of_variety(variety::open_complement(X, k), options()).zeta;
    const std::string tag = std::string(name) + " at x" + std::to_string(k);
    if (!(zeta::multiply(zu, zf) == zx)) o.fail(tag + ": Z(U) Z(F) != Z(X)");
    for (unsigned r : odd_weights({zx, zu, zf}))
      if (weil::m_order(zx, r) != weil::m_order(zu, r) + weil::m_order(zf, r))
        o.fail(tag + ": m not additive at r=" + std::to_string(r));
    ++strata;
  }
  for (const char* name : {"p1_over_f4.var", "gm4.var", "supersingular4.var", "supersingular9.var"}) {
    const auto& res = fixture_zeta(name);
    const unsigned e = res.zeta.e();
    auto down = zeta::base_change_down(res.zeta, e);
    // Points of X viewed over the prime field: e N_{m/e} when e | m, else 0.
    const auto n0 = zeta::expand(down, res.counts.size()).counts;
    for (std::size_t m = 1; m <= n0.size(); ++m) {
      Int expect = m % e == 0 ? Int(static_cast<unsigned long>(e)) * res.counts[m / e - 1] : Int(0);
      if (n0[m - 1] != expect) o.fail(std::string(name) + ": descended count N_" + std::to_string(m) + " mismatch");
    }
    for (unsigned r : odd_weights({res.zeta, down}))
      if (weil::m_order(res.zeta, r) != weil::m_order(down, r))
        o.fail(std::string(name) + ": m changes under descent at r=" + std::to_string(r));
    ++base_changes;
  }
  if (o.pass)
    o.detail = std::to_string(strata) + " stratifications multiply exactly with additive m; " +
               std::to_string(base_changes) + " descents keep m";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int n = 0;
  std::vector<std::pair<std::string, zeta::ZetaFunction>> inputs;
  for (const char* name : {"gm5.var", "gm4.var", "gm2_3.var", "gm_a1_2.var", "affine_elliptic5.var",
                           "affine_supersingular2.var", "affine_conic7.var", "affine_fermat2.var",
                           "affine_genus2_3.var", "quadric_cone3.var", "cusp5.var"})
    inputs.emplace_back(name, fixture_zeta(name).zeta);
  auto e = fixture_zeta("elliptic5.var").zeta;
  inputs.emplace_back("elliptic5 minus a point", zeta::divide(e, literal("1/(1-T)", 5, 1)));
  inputs.emplace_back("elliptic5 minus two points", zeta::divide(e, literal("1/(1-T)^2", 5, 1)));
  for (const auto& [name, z] : inputs) {
    auto d = weil::classify(z);
    auto rep = verify::verify_general(z, d);
    if (!rep.all_passed()) o.fail(name + ": " + std::to_string(rep.failures()) + " failed checks");
    for (unsigned r : d.weights()) {
      const std::string tag = "[r=" + std::to_string(r) + "]";
      if (!rep.find("MOD2-AUTODUAL" + tag)) o.fail(name + ": no MOD2-AUTODUAL" + tag);
      if (r % 2 == 1 && !rep.find("DEGREE-PARITY" + tag)) o.fail(name + ": no DEGREE-PARITY" + tag);
    }
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " non-proper inputs, zero failures";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  const auto pool = corpus::weil_factor_pool();
  std::map<Int, std::vector<const corpus::KnownFactor*>> by_q;
  for (const auto& f : pool)
    if (f.poly.degree() <= 8) by_q[f.q].push_back(&f);
  std::mt19937_64 rng(77);
  int correct = 0;
  std::set<unsigned> weights_seen;
  for (int t = 0; t < kFactorProducts; ++t) {
    auto it = by_q.begin();
    std::advance(it, static_cast<long>(rng() % by_q.size()));
    const auto& choices = it->second;
    std::map<IntPoly, unsigned> expect;
    IntPoly P{1};
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const auto* f = choices[rng() % choices.size()];
      expect[f->poly] += 1;
      weights_seen.insert(f->r);
      P *= f->poly;
    }
    std::map<IntPoly, unsigned> got;
    for (const auto& f : factor::factor_integer_poly(P).factors) got[f.poly] += f.multiplicity;
    if (got == expect) ++correct;
    else if (o.pass) o.fail("product " + P.to_string() + " refactored wrongly");
  }
  const double s = seconds_since(start);
  if (correct != kFactorProducts) o.fail(std::to_string(correct) + "/" + std::to_string(kFactorProducts) + " correct");
  if (s > kFactorSeconds) o.fail("took " + fmt(s));
  if (weights_seen.size() < 3) o.fail("weights were not mixed");
  if (o.pass)
    o.detail = std::to_string(correct) + "/" + std::to_string(kFactorProducts) + " products from a pool of " +
               std::to_string(pool.size()) + " factors in " + fmt(s);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<corpus::KnownFactor> all = corpus::weil_factor_pool();
  auto imp = corpus::impostor_pool();
  all.insert(all.end(), imp.begin(), imp.end());
  std::size_t fixture_factors = 0;
  for (const auto& name : oracle::fixture_names()) {
    const auto& z = fixture_zeta(name).zeta;
    for (const IntPoly* side : {&z.numerator(), &z.denominator()})
      for (const auto& f : factor::factor_integer_poly(*side).factors) {
        auto cw = weil::candidate_weight(f.poly, z.q());
        if (!cw) continue;
        all.push_back({f.poly, z.q(), *cw, true});
        ++fixture_factors;
      }
  }
  int agree = 0;
  for (const auto& f : all) {
    const bool exact = weil::is_pure_weight(f.poly, f.q, f.r);
    const bool flt = oracle::float_pure(f.poly, f.q, f.r, kRootModulusTol);
    if (exact == flt) ++agree;
    else o.fail(f.poly.to_string() + " over q=" + f.q.get_str() + ": exact " + (exact ? "pure" : "impure") +
                ", float " + (flt ? "pure" : "impure"));
  }
  const IntPoly impostor{1, -5, 5};
  if (!weil::trace_polynomial(impostor, 5)) o.fail("1 - 5T + 5T^2 fails the functional equation");
  if (weil::is_pure_weight(impostor, 5, 1)) o.fail("1 - 5T + 5T^2 accepted as pure");
  if (o.pass)
    o.detail = std::to_string(agree) + " factors agree (" + std::to_string(fixture_factors) +
               " from fixtures); 1 - 5T + 5T^2 rejected";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int n = 0;
  for (const auto& name : oracle::fixture_names()) {
    const auto& res = fixture_zeta(name);
    zeta::ReconstructOptions ro;
    ro.guard = kGuard;
    auto again = zeta::reconstruct_rational(zeta::series_from_counts(res.counts), res.zeta.p(), res.zeta.e(), ro);
    if (!(again == res.zeta)) o.fail(name + ": reconstruction from all counts differs");
    if (zeta::expand(res.zeta, res.counts.size()).counts != res.counts) o.fail(name + ": round trip differs");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " fixtures validate with guard 4 and round-trip exactly";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "CRITERION " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " (" << fmt(seconds_since(start))
              << ") " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
