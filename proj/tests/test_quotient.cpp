#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcol/errors.hpp"
#include "qcol/quotient.hpp"
#include "testutil.hpp"

using namespace qcol;

namespace {
Laurent L(const std::string& s) { return Laurent::parse(s); }
}

TEST_CASE("context validation and normalization") {
  QuotientCtx ctx(L("-3*t^3 + 5*t^2 - 3*t"));
  CHECK(ctx.modulus() == L("3*t^2 - 5*t + 3"));
  CHECK_THROWS_AS(QuotientCtx(Laurent(0)), ZeroModulus);
  CHECK_THROWS_AS(QuotientCtx(L("-t^2")), InternalError);
}

TEST_CASE("congruence by divisibility") {
  QuotientCtx ctx(L("1 - t + t^2"));
  CHECK(ctx.equal(L("t^2"), L("t - 1")));
  CHECK(ctx.equal(L("5*t - 7"), L("5*t - 7")));
  CHECK_FALSE(ctx.equal(Laurent(1), Laurent()));

  QuotientCtx big(L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3"));
  CHECK(big.equal(L("3*t^4"), L("8*t^3 - 11*t^2 + 8*t - 3")));
}

TEST_CASE("representative reduction") {
  QuotientCtx ctx(L("1 - t + t^2"));
  CHECK(ctx.reduce(L("t^3")) == Laurent(-1));
  CHECK(ctx.reduce(Laurent()).is_zero());
  QuotientCtx three(L("3*t^2 - 5*t + 3"));
  CHECK(three.reduce(L("3*t^2")) == L("5*t - 3"));
  // non-monic modulus: reduction stalls when the leading coefficient does
  // not divide, but the result stays congruent
  CHECK(three.equal(three.reduce(L("t^3")), L("t^3")));
}

TEST_CASE("reduction is congruent and span-bounded for monic moduli") {
  QuotientCtx ctx(L("t^4 - 2*t^3 + 3*t^2 - 2*t + 1"));
  test::Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    Laurent g = rng.laurent(-3, 6, 9);
    Laurent r = ctx.reduce(g);
    CHECK(ctx.equal(g, r));
    if (!r.is_zero()) CHECK(r.span() < ctx.modulus().span());
  }
}

TEST_CASE("trivial vector detection") {
  QuotientCtx ctx(L("1 - t + t^2"));
  std::vector<Laurent> constant{L("t + 2"), L("t + 2"), L("t + 2")};
  CHECK(ctx.is_trivial_vector(constant));
  std::vector<Laurent> trefoil{Laurent(1), Laurent()};
  CHECK_FALSE(ctx.is_trivial_vector(trefoil));
  std::vector<Laurent> congruent{L("t^2"), L("t - 1")};
  CHECK(ctx.is_trivial_vector(congruent));
}

TEST_CASE("congruence respects ring operations") {
  QuotientCtx ctx(L("2*t^2 - 3*t + 2"));
  test::Rng rng(71);
  for (int i = 0; i < 80; ++i) {
    Laurent a = rng.laurent(-2, 3, 5);
    Laurent b = a + ctx.modulus() * rng.laurent(-1, 2, 3);
    Laurent c = rng.laurent(-2, 2, 4);
    CHECK(ctx.equal(a, b));
    CHECK(ctx.equal(a + c, b + c));
    CHECK(ctx.equal(a * c, b * c));
    CHECK(ctx.equal(a, ctx.reduce(a)));
  }
}

TEST_CASE("coprime scaling preserves non-triviality") {
  QuotientCtx ctx(L("1 - t + t^2"));
  test::Rng rng(73);
  std::vector<Laurent> v{Laurent(1), Laurent()};
  int tested = 0;
  while (tested < 40) {
    Laurent alpha = rng.nonzero_laurent(-1, 2, 4);
    if (!Laurent::coprime(alpha, ctx.modulus())) continue;
    ++tested;
    std::vector<Laurent> scaled{alpha * v[0], alpha * v[1]};
    CHECK_FALSE(ctx.is_trivial_vector(scaled));
  }
}
