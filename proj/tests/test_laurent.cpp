#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcol/errors.hpp"
#include "qcol/laurent.hpp"
#include "testutil.hpp"

using namespace qcol;

namespace {
Laurent L(const std::string& s) { return Laurent::parse(s); }
}

TEST_CASE("construction is canonical") {
  Laurent p = Laurent::from_terms({{0, Int(1)}, {1, Int(-1)}, {2, Int(1)}});
  CHECK(p == L("t^2 - t + 1"));
  CHECK(Laurent::from_terms({}).is_zero());
  CHECK(Laurent::from_terms({{1, Int(2)}, {1, Int(-2)}}).is_zero());
  CHECK(Laurent(0).is_zero());
  CHECK(Laurent(1).is_one());
}

TEST_CASE("ring operations on known values") {
  CHECK(L("3*t^2 - 5*t + 3") * L("t^2 - t + 1") ==
        L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3"));
  Laurent x = L("2*t^3 - t + 5");
  CHECK(x * Laurent(1) == x);
  CHECK((L("t^-1") + (-L("t^-1"))).is_zero());
}

TEST_CASE("unit detection") {
  CHECK(L("-t^3").is_unit());
  CHECK(Laurent::t(-2).is_unit());
  CHECK_FALSE(L("1 - t").is_unit());
  CHECK_FALSE(Laurent(2).is_unit());
  CHECK_FALSE(Laurent().is_unit());
}

TEST_CASE("exact division") {
  auto q = Laurent::divide_exact(L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3"),
                                 L("t^2 - t + 1"));
  REQUIRE(q);
  CHECK(*q == L("3*t^2 - 5*t + 3"));
  CHECK(Laurent::divide_exact(Laurent(), L("t - 1"))->is_zero());
  CHECK_FALSE(Laurent::divide_exact(L("t + 1"), L("t - 1")));
  CHECK_THROWS_AS((void)Laurent::divide_exact(L("t"), Laurent()), ZeroDivisor);

  // Laurent shifts divide out as units.
  auto q2 = Laurent::divide_exact(L("t^-1 + 1"), L("t + 1"));
  REQUIRE(q2);
  CHECK(*q2 == L("t^-1"));
}

TEST_CASE("gcd on known values") {
  Laurent delta = L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3");
  CHECK(Laurent::gcd(L("3*t^2 - 5*t + 3"), delta) == L("3*t^2 - 5*t + 3"));
  CHECK(Laurent::gcd(L("-2*t^3 + 2*t^2"), Laurent()) == L("2*t - 2"));
  CHECK(Laurent::gcd(L("t - 1"), L("t - 1") * L("t^2 + 1")) == L("t - 1"));
  CHECK_THROWS_AS((void)Laurent::gcd(Laurent(), Laurent()), BothZero);
}

TEST_CASE("coprimality") {
  CHECK_FALSE(Laurent::coprime(L("t - 1"), L("t - 1") * L("t^2 + 1")));
  CHECK(Laurent::coprime(L("t"), L("t^3 + 7*t - 5")));
  CHECK(Laurent::coprime(L("1 - t + t^2"), L("3*t^2 - 5*t + 3")));
}

TEST_CASE("evaluation mod m") {
  CHECK(L("1 - t + t^2").eval_mod(2, 3) == 0);
  CHECK(Laurent(1).eval_mod(11, 7) == 1);
  CHECK(L("t^-1").eval_mod(2, 5) == 3);
  CHECK_THROWS_AS((void)L("t^-1").eval_mod(2, 4), NonInvertibleT);
}

TEST_CASE("unit normalization") {
  CHECK(L("-3*t^3 + 5*t^2").unit_normalized() == L("3*t - 5"));
  CHECK(Laurent().unit_normalized().is_zero());
  CHECK(Laurent::equal_up_to_unit(L("-t^2 + t - 1"), L("1 - t + t^2")));
}

TEST_CASE("printing and parsing round-trip") {
  CHECK(L("t^2 - t + 1").str() == "t^2 - t + 1");
  CHECK(L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3").str() ==
        "3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3");
  CHECK(L("t^-1 + 1").str() == "1 + t^-1");  // printed with descending exponents
  CHECK(Laurent().str() == "0");
  CHECK(L("t^{-2}") == Laurent::t(-2));
  CHECK(L("  - 2 * t ^ 3  + t") == L("-2*t^3 + t"));
  CHECK(L("3 t") == L("3*t"));  // '*' is optional
  CHECK_THROWS_AS((void)Laurent::parse(""), SyntaxError);
  CHECK_THROWS_AS((void)Laurent::parse("t^"), SyntaxError);
  CHECK_THROWS_AS((void)Laurent::parse("2 3"), SyntaxError);
  CHECK_THROWS_AS((void)Laurent::parse("q + 1"), SyntaxError);

  test::Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    Laurent p = rng.laurent(-3, 4, 9);
    CHECK(Laurent::parse(p.str()) == p);
  }
}

TEST_CASE("ring axioms on random inputs") {
  test::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Laurent a = rng.laurent(-2, 2, 5), b = rng.laurent(-2, 2, 5),
            c = rng.laurent(-2, 2, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("division inverts multiplication") {
  test::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Laurent a = rng.laurent(-2, 3, 6);
    Laurent b = rng.nonzero_laurent(-2, 3, 6);
    auto q = Laurent::divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
  }
}

TEST_CASE("gcd properties on random inputs") {
  test::Rng rng(13);
  for (int i = 0; i < 80; ++i) {
    Laurent a = rng.nonzero_laurent(-2, 3, 5);
    Laurent b = rng.nonzero_laurent(-2, 3, 5);
    Laurent g = Laurent::gcd(a, b);
    CHECK(Laurent::divide_exact(a, g));
    CHECK(Laurent::divide_exact(b, g));
    CHECK(Laurent::gcd(b, a) == g);
    // invariance under unit multiples of either argument
    CHECK(Laurent::gcd(a.shifted(rng.pick(-2, 2)).scaled(Int(rng.pick(0, 1) ? 1 : -1)), b) == g);
    // any common divisor divides the gcd
    Laurent d = rng.nonzero_laurent(0, 1, 3);
    Laurent g2 = Laurent::gcd(a * d, b * d);
    CHECK(Laurent::divide_exact(g2, d));
  }
}

TEST_CASE("units are exactly the divisors of one") {
  test::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    Laurent a = rng.nonzero_laurent(-2, 2, 4);
    CHECK(a.is_unit() == Laurent::divide_exact(Laurent(1), a).has_value());
  }
}
