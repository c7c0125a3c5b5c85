// zetalab command-line front end.
// Exit codes: 0 success (every check passed), 1 some check failed, 2 input or stage error.

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "zetalab/factor.hpp"
#include "zetalab/newton.hpp"
#include "zetalab/pipeline.hpp"
#include "zetalab/weil.hpp"

using namespace zetalab;

namespace {

struct Common {
  std::string cache;
  unsigned jobs = 1;
  std::string budget = "100000000";

  pipeline::PipelineOptions options() const {
    pipeline::PipelineOptions o;
    o.counts.cache_path = cache;
    o.counts.jobs = jobs;
    if (o.counts.budget.set_str(budget, 10) != 0 || o.counts.budget < 0)
      throw Error(ErrorCode::CapExceeded, "budget must be a nonnegative integer, got " + budget);
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cache", c.cache, "Append-only count cache file");
  cmd->add_option("--jobs", c.jobs, "Worker threads for counting")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Enumeration budget in candidate tuples");
}

struct ZetaSource {
  std::string variety;
  std::string literal;
  std::uint64_t p = 0;
  unsigned e = 1;
  std::optional<std::size_t> terms;

  pipeline::Input input() const {
    pipeline::Input in;
    if (!variety.empty()) in.variety_path = variety;
    if (!literal.empty()) in.zeta_literal = literal;
    in.p = p;
    in.e = e;
    in.terms = terms;
    return in;
  }
};

void add_source(CLI::App* cmd, ZetaSource& s) {
  auto* v = cmd->add_option("--variety", s.variety, "Variety description file");
  auto* z = cmd->add_option("--zeta", s.literal, "Zeta literal (num)/(den) in T");
  v->excludes(z);
  cmd->add_option("--p", s.p, "Characteristic (with --zeta)")->needs(z);
  cmd->add_option("--e", s.e, "Base field degree (with --zeta)")->needs(z);
  cmd->add_option("--terms", s.terms, "Count exactly this many terms")->needs(v);
}

void require_source(const ZetaSource& s) {
  if (s.variety.empty() == s.literal.empty()) throw CLI::ValidationError("exactly one of --variety and --zeta is required");
  if (!s.literal.empty() && s.p == 0) throw CLI::ValidationError("--zeta needs --p");
}

std::string factor_line(const factor::Factor& f) {
  return f.poly.to_string() + (f.multiplicity > 1 ? "  (multiplicity " + std::to_string(f.multiplicity) + ")" : "");
}

void print_factors(const char* label, const IntPoly& side) {
  std::cout << label << ":\n";
  auto fac = factor::factor_integer_poly(side);
  if (fac.factors.empty()) std::cout << "  1\n";
  for (const auto& f : fac.factors) std::cout << "  " << factor_line(f) << "\n";
}

void print_weights(const weil::WeightDecomposition& d) {
  std::cout << "weights:\n";
  for (unsigned r : d.weights()) std::cout << "  r=" << r << ": " << d.parts.at(r).to_string() << "\n";
  std::cout << "  leftover: " << (d.leftover.is_trivial() ? "none" : d.leftover.to_string()) << "\n";
}

void print_newton(const zeta::ZetaFunction& z) {
  std::cout << "newton:\n";
  for (const IntPoly* side : {&z.numerator(), &z.denominator()}) {
    for (const auto& f : factor::factor_integer_poly(*side).factors) {
      auto n = newton::newton_polygon(f.poly, z.p(), z.e());
      std::cout << "  " << f.poly.to_string() << ": slopes " << newton::to_string(n.slopes) << "\n";
    }
  }
}

void print_base_change(const zeta::ZetaFunction& z, unsigned k) {
  auto down = zeta::base_change_down(z, k);
  std::cout << "base change T -> T^" << k << " (F_" << z.q().get_str() << " to F_" << down.q().get_str() << "):\n";
  std::cout << "  zeta: " << down.to_string() << "\n";
  std::set<unsigned> odd = {1};
  for (unsigned r : weil::classify(z).weights())
    if (r % 2 == 1) odd.insert(r);
  for (unsigned r : weil::classify(down).weights())
    if (r % 2 == 1) odd.insert(r);
  for (unsigned r : odd) {
    long before = weil::m_order(z, r), after = weil::m_order(down, r);
    std::cout << "  m(r=" << r << "): " << before << " -> " << after << (before == after ? " invariant" : " CHANGED")
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions of varieties over finite fields and the parity theorems"};
  app.require_subcommand(1);

  Common common;

  std::string count_variety;
  std::size_t count_terms = 0;
  auto* count = app.add_subcommand("count", "Print N_1..N_M, one `m N_m` per line");
  count->add_option("--variety", count_variety, "Variety description file")->required();
  count->add_option("--terms", count_terms, "Number of terms M")->required()->check(CLI::PositiveNumber);
  add_common(count, common);

  std::string zeta_variety, zeta_counts;
  std::optional<std::size_t> zeta_terms;
  std::uint64_t zeta_p = 0;
  unsigned zeta_e = 1;
  auto* zcmd = app.add_subcommand("zeta", "Print the zeta function as a literal");
  auto* zv = zcmd->add_option("--variety", zeta_variety, "Variety description file");
  auto* zc = zcmd->add_option("--counts", zeta_counts, "Counts file of `m N_m` lines");
  zv->excludes(zc);
  zcmd->add_option("--terms", zeta_terms, "Count exactly this many terms")->needs(zv);
  zcmd->add_option("--p", zeta_p, "Characteristic (with --counts)")->needs(zc);
  zcmd->add_option("--e", zeta_e, "Base field degree (with --counts)")->needs(zc);
  add_common(zcmd, common);

  ZetaSource analyze_src;
  unsigned base_change = 0;
  bool show_weights = false, show_newton = false;
  auto* analyze = app.add_subcommand("analyze", "Factor, classify by weight and compute slopes");
  add_source(analyze, analyze_src);
  analyze->add_option("--base-change", base_change, "Descend by T -> T^k; k must divide e")
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--weights", show_weights, "Print the weight decomposition");
  analyze->add_flag("--newton", show_newton, "Print slopes of every factor");
  add_common(analyze, common);

  ZetaSource verify_src;
  pipeline::Suites suites;
  std::optional<unsigned> dim;
  std::vector<unsigned> sign;
  std::string report_path;
  auto* vcmd = app.add_subcommand("verify", "Run the theorem suites and print a report");
  add_source(vcmd, verify_src);
  auto* ps = vcmd->add_flag("--proper-smooth", suites.proper_smooth, "Assert proper smooth and run its suite");
  vcmd->add_option("--dim", dim, "Dimension, enables the weight-0 and weight-2d checks")->needs(ps);
  vcmd->add_option("--sign", sign, "Run the sign suite for odd weight r (repeatable)");
  vcmd->add_flag("--general", suites.general, "Run the general-scheme suite as well");
  vcmd->add_option("--report", report_path, "Write the machine-readable report here");
  add_common(vcmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto options = common.options();
    if (*count) {
      auto spec = variety::load_variety(count_variety);
      auto series = counts::count_series(spec, count_terms, options.counts);
      std::cout << pipeline::render_counts(series.counts);
      return 0;
    }
    if (*zcmd) {
      if (zeta_variety.empty() == zeta_counts.empty())
        throw CLI::ValidationError("exactly one of --variety and --counts is required");
      if (!zeta_variety.empty()) {
        auto spec = variety::load_variety(zeta_variety);
        std::cout << pipeline::zeta_of_variety(spec, options, zeta_terms).zeta.to_string() << "\n";
      } else {
        if (zeta_p == 0) throw CLI::ValidationError("--counts needs --p (and --e unless it is 1)");
        auto n = pipeline::load_counts(zeta_counts);
        std::cout << pipeline::zeta_of_counts(n, zeta_p, zeta_e, options).zeta.to_string() << "\n";
      }
      return 0;
    }
    if (*analyze) {
      require_source(analyze_src);
      auto z = pipeline::load_zeta(analyze_src.input(), options);
      std::cout << "zeta: " << z.to_string() << "\n";
      std::cout << "field: q = " << z.q().get_str() << " (p = " << z.p() << ", e = " << z.e() << ")\n";
      print_factors("numerator factors", z.numerator());
      print_factors("denominator factors", z.denominator());
      if (show_weights) print_weights(weil::classify(z));
      if (show_newton) print_newton(z);
      if (base_change) print_base_change(z, base_change);
      return 0;
    }
    require_source(verify_src);
    for (unsigned r : sign)
      if (r % 2 == 0) throw CLI::ValidationError("--sign takes odd weights, got " + std::to_string(r));
    suites.dim = dim;
    suites.sign = sign;
    auto result = pipeline::run_pipeline(verify_src.input(), suites, options);
    std::cout << result.report.human();
    if (!report_path.empty()) pipeline::write_report(report_path, result.report);
    return result.report.all_passed() ? 0 : 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
