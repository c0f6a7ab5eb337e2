#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcol/braid.hpp"
#include "qcol/burau.hpp"
#include "qcol/errors.hpp"
#include "qcol/linalg.hpp"
#include "testutil.hpp"

using namespace qcol;

namespace {
Laurent L(const std::string& s) { return Laurent::parse(s); }
BraidWord B(const std::string& s) { return parse_braid(s); }
}

TEST_CASE("generator matrices") {
  Matrix g = burau_generator(1, 2);
  CHECK(g == Matrix{{Laurent(), Laurent(1)}, {L("t"), L("1 - t")}});
  Matrix gi = burau_generator(-1, 2);
  CHECK(gi == Matrix{{L("1 - t^-1"), L("t^-1")}, {Laurent(1), Laurent()}});
  CHECK(g * gi == Matrix::identity(2));

  Matrix g3 = burau_generator(1, 3);
  CHECK(g3.at(2, 2) == Laurent(1));
  CHECK(g3.at(0, 0).is_zero());
  CHECK(g3.at(2, 0).is_zero());

  CHECK_THROWS_AS((void)burau_generator(0, 3), IndexOutOfRange);
  CHECK_THROWS_AS((void)burau_generator(3, 3), IndexOutOfRange);
}

TEST_CASE("unreduced word matrices") {
  CHECK(burau_unreduced(parse_braid("", 3)) == Matrix::identity(3));
  Matrix g = burau_generator(1, 2);
  CHECK(burau_unreduced(B("{1,1,1}")) == g * g * g);
}

TEST_CASE("representation relations hold for B2..B5") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(burau_generator(i, n) * burau_generator(-i, n) == Matrix::identity(n));
      CHECK(burau_reduced_generator(i, n) * burau_reduced_generator(-i, n) ==
            Matrix::identity(n - 1));
    }
    for (int i = 1; i + 1 < n; ++i) {
      auto a = burau_generator(i, n), b = burau_generator(i + 1, n);
      CHECK(a * b * a == b * a * b);
      auto ar = burau_reduced_generator(i, n), br = burau_reduced_generator(i + 1, n);
      CHECK(ar * br * ar == br * ar * br);
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        CHECK(burau_generator(i, n) * burau_generator(j, n) ==
              burau_generator(j, n) * burau_generator(i, n));
        CHECK(burau_reduced_generator(i, n) * burau_reduced_generator(j, n) ==
              burau_reduced_generator(j, n) * burau_reduced_generator(i, n));
      }
  }
}

TEST_CASE("all-ones vector is fixed and row sums of phi(w)-id vanish") {
  test::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    BraidWord w = rng.braid(5, 10);
    Matrix m = burau_unreduced(w) - Matrix::identity(w.strands);
    for (int r = 0; r < w.strands; ++r) {
      Laurent sum;
      for (int c = 0; c < w.strands; ++c) sum += m.at(r, c);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("determinants of generators and words") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(det_bareiss(burau_generator(i, n)) == -L("t"));
  test::Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    BraidWord w = rng.braid(4, 8);
    Laurent d = det_bareiss(burau_unreduced(w));
    Laurent expect(1);
    Laurent mt = -L("t");
    int wr = writhe(w);
    for (int k = 0; k < std::abs(wr); ++k) expect *= mt;
    if (wr < 0) {
      auto q = Laurent::divide_exact(Laurent(1), expect);
      REQUIRE(q);
      expect = *q;
    }
    CHECK(d == expect);
  }
}

TEST_CASE("reduced matrices of small words") {
  CHECK(burau_reduced(B("{1,1,1}")) == Matrix{{L("-t^3")}});
  CHECK(burau_reduced(parse_braid("", 4)) == Matrix::identity(3));
}

TEST_CASE("reduced Alexander polynomials from the examples") {
  CHECK(reduced_alexander(B("{1,1,1}")) == L("t^2 - t + 1"));
  CHECK(reduced_alexander(B("{1,1,-2,1,3,2,2,2,3}")) ==
        L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3"));
  CHECK(reduced_alexander(B("{-3,-2,1,1,-2,3,2,-1,2,-1,2}")).is_zero());
  CHECK(reduced_alexander(parse_braid("{1,1,1,-2,-1,-1,-1,-2}", 3)) ==
        L("t^2 - t + 1") * L("t^2 - t + 1"));
  CHECK(reduced_alexander(parse_braid("{1}", 2)).is_one());
  CHECK(reduced_alexander(B("{1,-2,1,-2}")) == L("t^2 - 3*t + 1"));
}

TEST_CASE("cyclotomic factor divides det(reduced(w) - id)") {
  test::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    BraidWord w = rng.braid(4, 9);
    Matrix d = burau_reduced(w) - Matrix::identity(w.strands - 1);
    Laurent det = det_bareiss(d);
    std::vector<Laurent::Term> ones;
    for (int k = 0; k < w.strands; ++k) ones.emplace_back(k, 1);
    CHECK((det.is_zero() ||
           Laurent::divide_exact(det, Laurent::from_terms(ones)).has_value()));
  }
}

TEST_CASE("det identity ties reduced form to the Alexander polynomial") {
  BraidWord w = B("{1,1,-2,1,3,2,2,2,3}");
  Laurent det = det_bareiss(burau_reduced(w) - Matrix::identity(3));
  Laurent expect = L("1 + t + t^2 + t^3") * L("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3");
  CHECK(Laurent::equal_up_to_unit(det, expect));
}

TEST_CASE("stabilization does not change the polynomial") {
  Laurent a = reduced_alexander(B("{1,1,1}"));
  Laurent b = reduced_alexander(B("{1,1,1,2}"));
  CHECK(Laurent::equal_up_to_unit(a, b));
}
