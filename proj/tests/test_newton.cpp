#include <doctest.h>

#include <random>

#include "weil_corpus.hpp"
#include "zetalab/newton.hpp"
#include "zetalab/weil.hpp"

using namespace zetalab;
using namespace zetalab::newton;

namespace {

SlopeMultiset S(std::initializer_list<const char*> xs) {
  SlopeMultiset s;
  for (const char* x : xs) s.add(Rat(x));
  return s;
}

}  // namespace

TEST_CASE("slopes of small polynomials") {
  CHECK(newton_polygon(IntPoly{1, -3, 5}, 5, 1).slopes == S({"0", "1"}));
  CHECK(newton_polygon(IntPoly{1, 0, 5}, 5, 1).slopes == S({"1/2", "1/2"}));
  CHECK(newton_polygon(IntPoly{1, -2}, 2, 2).slopes == S({"1/2"}));
  CHECK(to_string(S({"1/2", "0", "1/2"})) == "{0, 1/2, 1/2}");
  auto poly = newton_polygon(IntPoly{1, 5, 0, 125}, 5, 1).polygon;
  CHECK(poly.points.size() == 3);
  CHECK(poly.vertices.front().index == 0);
  CHECK(poly.vertices.front().valuation == 0);
  CHECK(ord(Int(250), 5) == 3);
}

TEST_CASE("reflection and autoduality") {
  CHECK(reflect(S({"0", "1"}), 1) == S({"0", "1"}));
  CHECK(reflect(S({"1/2"}), 1) == S({"1/2"}));
  CHECK(reflect(S({"0", "0", "1"}), 1) == S({"0", "1", "1"}));
  CHECK(is_autodual(S({"0", "1"}), 1));
  CHECK(is_autodual(S({"1/2"}), 1));
  CHECK_FALSE(is_autodual(S({"0", "0", "1"}), 1));
  CHECK(is_autodual_mod2(S({"1/2", "1/2"}), S({}), 1));
  CHECK_FALSE(is_autodual_mod2(S({"0"}), S({}), 1));
  CHECK(is_autodual_mod2(S({"0", "0", "1"}), S({"1"}), 1));
}

TEST_CASE("Dieudonne-Manin divisibility") {
  CHECK(dieudonne_manin_check(S({"1/2", "1/2"})).ok);
  auto bad = dieudonne_manin_check(S({"1/2"}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == Rat(1, 2));
  CHECK(dieudonne_manin_check(S({"0", "1/3", "1/3", "1/3", "1"})).ok);
}

TEST_CASE("polygon properties on random polynomials") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const unsigned e = 1 + static_cast<unsigned>(rng() % 3);
    auto rnd = [&] {
      std::vector<Int> c{1};
      const int d = 1 + static_cast<int>(rng() % 6);
      for (int i = 1; i <= d; ++i) {
        Int x = static_cast<long>(rng() % 7) - 3;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, rng() % 5);
        c.push_back(x * pw);
      }
      if (c.back() == 0) c.back() = 1;
      return IntPoly(c);
    };
    IntPoly a = rnd(), b = rnd();
    auto na = newton_polygon(a, p, e), nb = newton_polygon(b, p, e);
    CHECK(na.slopes.size() == static_cast<std::size_t>(a.degree()));
    CHECK(newton_polygon(a * b, p, e).slopes == na.slopes + nb.slopes);
    const auto& v = na.polygon.vertices;
    for (std::size_t i = 2; i < v.size(); ++i) {
      Rat s1 = (v[i - 1].valuation - v[i - 2].valuation) / Rat(static_cast<long>(v[i - 1].index - v[i - 2].index));
      Rat s2 = (v[i].valuation - v[i - 1].valuation) / Rat(static_cast<long>(v[i].index - v[i - 1].index));
      CHECK(s1 < s2);
    }
    const Rat r = static_cast<long>(rng() % 5);
    CHECK(reflect(reflect(na.slopes, r), r) == na.slopes);
  }
}

TEST_CASE("pure factors have autodual slopes") {
  for (const auto& f : corpus::weil_factor_pool()) {
    INFO(f.poly.to_string() << " q=" << f.q.get_str());
    std::uint64_t p = f.q == 4 ? 2 : f.q.get_ui();
    unsigned e = f.q == 4 ? 2 : 1;
    REQUIRE(weil::is_pure_weight(f.poly, f.q, f.r));
    CHECK(is_autodual(newton_polygon(f.poly, p, e).slopes, static_cast<long>(f.r)));
  }
}
