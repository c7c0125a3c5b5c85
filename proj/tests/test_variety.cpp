#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "zetalab/count_cache.hpp"
#include "zetalab/error.hpp"
#include "zetalab/point_count.hpp"
#include "zetalab/variety.hpp"

using namespace zetalab;
using namespace zetalab::variety;

namespace {

Int ipow(unsigned long b, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

std::string temp_path(const char* stem) {
  std::string p = std::string("/tmp/zetalab_test_") + stem + "_" + std::to_string(::getpid());
  std::remove(p.c_str());
  return p;
}

}  // namespace

TEST_CASE("parse the elliptic fixture text") {
  auto s = parse_variety("p=5 e=1 projective n=2\nf: x0*x2^2 - x1^3 - x1*x0^2 - x0^3");
  CHECK(s.p == 5);
  CHECK(s.e == 1);
  CHECK(s.ambient == Ambient::Projective);
  CHECK(s.num_variables() == 3);
  REQUIRE(s.equations.size() == 1);
  CHECK(s.equations[0].name == "f");
  CHECK(s.equations[0].poly.terms().size() == 4);
}

TEST_CASE("empty system is the whole ambient space") {
  auto s = parse_variety("p=2 e=2 affine n=1\n");
  CHECK(s.equations.empty());
  CHECK(counts::count_points(s, 2) == 16);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_variety("p=5 e=1 projective n=2\nf: x0 + x1^2"); }) == ErrorCode::NonHomogeneous);
  CHECK(code_of([] { parse_variety("p=6 e=1 affine n=1\n"); }) == ErrorCode::BadFieldParams);
  CHECK(code_of([] { parse_variety("p=5 e=1 affine n=2\nf: x0 + x5"); }) == ErrorCode::UnknownVariable);
  CHECK(code_of([] { parse_variety("p=5 e=1 affine n=2\nf: x0 + * x1"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_variety("p=5 e=1 affine n=9\n"); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { parse_variety("p=5 e=1 sideways n=2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { load_variety("/nonexistent/file.var"); }) == ErrorCode::Io);
  try {
    parse_variety("p=5 e=1 affine n=2\nf: x0 + (x1");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  try {
    parse_variety("p=5 e=1 projective n=2\ng: x0*x1 + x2^3");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("g") != std::string::npos);
  }
}

TEST_CASE("render round trip and digest") {
  auto s = load_variety(oracle::fixture("elliptic5.var"));
  auto t = parse_variety(render(s), s.name);
  CHECK(canonical_form(s) == canonical_form(t));
  CHECK(digest(s) == digest(t));
  CHECK(digest(s).size() == 16);
  CHECK(digest(s) != digest(with_base_degree(s, 2)));
}

TEST_CASE("closed-form counts") {
  auto p1 = parse_variety("p=5 e=1 projective n=1\n");
  CHECK(counts::count_points(p1, 1) == 6);
  auto s = counts::count_series(parse_variety("p=2 e=1 projective n=1\n"), 4);
  CHECK(s.counts == std::vector<Int>{3, 5, 9, 17});
  auto s2 = counts::count_series(parse_variety("p=2 e=1 projective n=2\n"), 3);
  CHECK(s2.counts == std::vector<Int>{7, 21, 73});
}

TEST_CASE("elliptic fixture N_1 from the brute-force oracle") {
  auto s = load_variety(oracle::fixture("elliptic5.var"));
  // Frozen from the oracle: the 31 points of P^2(F_5) tested against the cubic.
  CHECK(oracle::brute_count(s, 1) == 9);
  CHECK(counts::count_points(s, 1) == 9);
}

TEST_CASE("engine agrees with the brute-force oracle on every fixture") {
  for (const auto& name : oracle::fixture_names()) {
    auto s = load_variety(oracle::fixture(name));
    for (unsigned m = 1; m <= 3; ++m) {
      // Keep the oracle to about 10^5 evaluations.
      const std::size_t free =
          s.ambient == Ambient::Projective ? s.num_variables() - 1 : s.num_variables();
      if (ipow(s.p, static_cast<unsigned long>(s.e) * m * free) > 200000) break;
      INFO(name << " m=" << m);
      CHECK(counts::count_points(s, m) == oracle::brute_count(s, m));
    }
  }
}

TEST_CASE("projective counts are the sum of chart counts") {
  for (const char* name : {"elliptic5.var", "conic3.var", "two_lines3.var", "fermat_cubic7.var", "p2_over_f3.var"}) {
    auto s = load_variety(oracle::fixture(name));
    for (unsigned m = 1; m <= 3; ++m) {
      Int sum = 0;
      for (std::size_t k = 0; k < s.num_variables(); ++k) sum += counts::count_chart(s, k, m);
      CHECK(sum == counts::count_points(s, m));
      // Bounded by #P^n(F_{q^m}).
      const Int qm = counts::field_order(s, m);
      Int pn = 0;
      for (std::size_t i = 0; i < s.num_variables(); ++i) pn += ipow(qm.get_ui(), i);
      CHECK(sum <= pn);
    }
  }
}

TEST_CASE("stratification consistency at the count level") {
  for (const char* name : {"elliptic5.var", "conic3.var", "two_lines3.var", "supersingular2.var",
                           "affine_elliptic5.var", "affine_conic7.var"}) {
    auto X = load_variety(oracle::fixture(name));
    auto F = hyperplane_section(X, 0);
    auto U = open_complement(X, 0);
    for (unsigned m = 1; m <= 4; ++m) {
      INFO(name << " m=" << m);
      CHECK(counts::count_points(X, m) == counts::count_points(F, m) + counts::count_points(U, m));
    }
  }
}

TEST_CASE("base-change coherence") {
  auto X = load_variety(oracle::fixture("elliptic5.var"));
  auto X2 = with_base_degree(X, 2);
  for (unsigned m = 1; m <= 3; ++m) CHECK(counts::count_points(X2, m) == counts::count_points(X, 2 * m));
  auto Y = load_variety(oracle::fixture("supersingular2.var"));
  auto Y3 = with_base_degree(Y, 3);
  for (unsigned m = 1; m <= 3; ++m) CHECK(counts::count_points(Y3, m) == counts::count_points(Y, 3 * m));
}

TEST_CASE("parallel and serial counts agree") {
  auto X = load_variety(oracle::fixture("elliptic7.var"));
  counts::CountOptions serial, parallel;
  parallel.jobs = 4;
  for (unsigned m = 1; m <= 5; ++m) CHECK(counts::count_points(X, m, serial) == counts::count_points(X, m, parallel));
  auto G = load_variety(oracle::fixture("gm2_3.var"));
  for (unsigned m = 1; m <= 4; ++m) CHECK(counts::count_points(G, m, serial) == counts::count_points(G, m, parallel));
}

TEST_CASE("budget errors report the largest feasible M") {
  auto X = load_variety(oracle::fixture("elliptic5.var"));
  counts::CountOptions o;
  o.budget = 10000;  // 5^5 = 3125 fits, 5^6 does not
  try {
    counts::count_series(X, 8, o);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.largest_feasible_terms() == counts::largest_feasible_terms(X, o.budget));
    CHECK(e.required() > o.budget);
  }
  CHECK_THROWS_AS(counts::count_points(X, 7, o), BudgetExceeded);
  CHECK_NOTHROW(counts::count_points(X, counts::largest_feasible_terms(X, o.budget), o));
}

TEST_CASE("count cache is reused and byte-stable") {
  const std::string path = temp_path("cache");
  auto X = load_variety(oracle::fixture("elliptic5.var"));
  counts::CountOptions o;
  o.cache_path = path;
  auto first = counts::count_series(X, 6, o);
  std::ifstream in1(path);
  std::stringstream b1;
  b1 << in1.rdbuf();
  auto second = counts::count_series(X, 6, o);
  std::ifstream in2(path);
  std::stringstream b2;
  b2 << in2.rdbuf();
  CHECK(first.counts == second.counts);
  CHECK(b1.str() == b2.str());
  const std::string text = b1.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  // A budget too small to count anything still succeeds from the cache.
  o.budget = 1;
  CHECK(counts::count_series(X, 6, o).counts == first.counts);
  counts::CountCache cache(path);
  CHECK(cache.lookup(digest(X), 3) == first.counts[2]);
  CHECK(!cache.lookup("0000000000000000", 3));
  std::remove(path.c_str());
}

TEST_CASE("cache ignores torn and malformed lines") {
  const std::string path = temp_path("torn");
  {
    std::ofstream out(path);
    out << "abc 1 9\nnot a line\nabc x 3\nabc 2 27\nabc 2 28\nabc 3 10";
  }
  counts::CountCache cache(path);
  auto m = cache.load("abc");
  CHECK(m.size() == 2);
  CHECK(m[1] == 9);
  CHECK(m[2] == 27);
  std::remove(path.c_str());
}
