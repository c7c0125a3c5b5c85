#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "zetalab/error.hpp"
#include "zetalab/finite_field.hpp"

using namespace zetalab;
using namespace zetalab::field;

TEST_CASE("smallest irreducible moduli") {
  CHECK(find_irreducible(2, 1) == modp::Poly{0, 1});
  CHECK(find_irreducible(2, 2) == modp::Poly{1, 1, 1});
  CHECK(find_irreducible(5, 2) == modp::Poly{2, 0, 1});
  CHECK(find_irreducible(3, 5) == find_irreducible(3, 5));
}

TEST_CASE("moduli are irreducible by Rabin's test") {
  for (std::uint64_t p : {2, 3, 5, 7, 11})
    for (unsigned e = 1; e <= 8; ++e) {
      auto f = find_irreducible(p, e);
      CHECK(modp::degree(f) == static_cast<int>(e));
      CHECK(f.back() == 1);
      CHECK(oracle::rabin_irreducible(f, p));
    }
}

TEST_CASE("x^2 + 2 over F_5 is the minimum of an exhaustive scan") {
  // Order monic quadratics x^2 + b x + c by (b, c), top coefficient first.
  modp::Poly best;
  for (std::uint64_t b = 0; b < 5 && best.empty(); ++b)
    for (std::uint64_t c = 0; c < 5 && best.empty(); ++c) {
      bool root = false;
      for (std::uint64_t x = 0; x < 5; ++x) root = root || (x * x + b * x + c) % 5 == 0;
      if (!root) best = {c, b, 1};
    }
  CHECK(best == find_irreducible(5, 2));
}

TEST_CASE("field parameter errors") {
  CHECK_THROWS_AS(FieldParams::standard(4, 1), Error);
  try {
    FieldParams::standard(6, 1);
    FAIL("expected BadFieldParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadFieldParams);
  }
  try {
    find_irreducible(2, 25);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  try {
    FieldParams::create(2, 2, {1, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadFieldParams);
  }
}

TEST_CASE("arithmetic examples") {
  auto F5 = FieldParams::standard(5, 1);
  CHECK((FieldElement::from_int(F5, 1) / FieldElement::from_int(F5, 2)) == FieldElement::from_int(F5, 3));
  auto F4 = FieldParams::standard(2, 2);
  FieldElement x(F4, {0, 1});
  CHECK(x * x == FieldElement(F4, {1, 1}));
  auto F9 = FieldParams::standard(3, 2);
  for (auto a : enumerate(F9)) CHECK(pow(a, 9) == a);
}

TEST_CASE("arithmetic errors") {
  auto F5 = FieldParams::standard(5, 1);
  auto F7 = FieldParams::standard(7, 1);
  try {
    (void)(FieldElement::one(F5) / FieldElement::zero(F5));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    (void)(FieldElement::one(F5) + FieldElement::one(F7));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("enumeration order and cardinality") {
  auto F2 = FieldParams::standard(2, 1);
  std::vector<std::uint64_t> idx;
  for (auto a : enumerate(F2)) idx.push_back(a.index());
  CHECK(idx == std::vector<std::uint64_t>{0, 1});
  auto F4 = FieldParams::standard(2, 2);
  std::vector<std::string> names;
  for (auto a : enumerate(F4)) names.push_back(a.to_string());
  CHECK(names.size() == 4);
  CHECK(FieldElement::from_index(F4, 2) == FieldElement(F4, {0, 1}));
  CHECK(FieldElement::from_index(F4, 3) == FieldElement(F4, {1, 1}));
  auto F25 = FieldParams::standard(5, 2);
  std::set<std::vector<std::uint64_t>> seen;
  for (auto a : enumerate(F25)) seen.insert(a.coeffs());
  CHECK(seen.size() == 25);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(12345);
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 5}, {3, 4}, {7, 3}, {101, 2}, {65537, 1}}) {
    auto F = FieldParams::standard(p, e);
    const std::uint64_t q = F->order().get_ui();
    auto rnd = [&] { return FieldElement::from_index(F, rng() % q); };
    for (int t = 0; t < 200; ++t) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == FieldElement::zero(F));
      if (!a.is_zero()) CHECK(a * inverse(a) == FieldElement::one(F));
    }
  }
}

TEST_CASE("Frobenius is a bijection fixing the field") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    auto F = FieldParams::standard(p, e);
    std::set<std::uint64_t> image;
    for (auto a : enumerate(F)) {
      image.insert(pow(a, p).index());
      CHECK(pow(a, F->order()) == a);
    }
    CHECK(image.size() == F->order().get_ui());
  }
}

TEST_CASE("big exponents") {
  auto F = FieldParams::standard(3, 2);
  FieldElement g(F, {1, 1});
  Int huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 3, 200);
  // a^(3^200) = a^(3^(200 mod 2)) = a.
  CHECK(pow(g, huge) == g);
  CHECK(pow(g, 0) == FieldElement::one(F));
}
