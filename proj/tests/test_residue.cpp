#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chatelet/errors.hpp"
#include "chatelet/residue.hpp"

using namespace chatelet;

namespace {

std::set<long> indices(const OmegaSet& om) {
  std::set<long> out;
  for (const FqElem& e : om.members) out.insert(e.index());
  return out;
}

}  // namespace

TEST_CASE("omega sets on the known examples") {
  FqField f5 = FqField::make(5);
  FqField f3 = FqField::make(3);

  OmegaSet a = omega_set(f5, f5.from_int(1), f5.from_int(2));
  CHECK(indices(a) == std::set<long>{0, 1, 2, 3, 4});

  OmegaSet b = omega_set(f3, f3.from_int(1), f3.from_int(1));
  CHECK(indices(b) == std::set<long>{0, 1});

  OmegaSet c = omega_set(f5, f5.from_int(2), f5.from_int(2));
  CHECK(indices(c) == std::set<long>{0, 1, 2, 4});

  CHECK(c.contains(f5.from_int(2)));
  CHECK_FALSE(c.contains(f5.from_int(3)));
}

TEST_CASE("omega set always contains 0, eps1, eps2") {
  for (long p : {3, 5, 7, 13}) {
    FqField k = FqField::make(p);
    for (long i = 1; i < p; ++i)
      for (long j = 1; j < p; ++j) {
        OmegaSet om = omega_set(k, k.element(i), k.element(j));
        CHECK(om.contains(k.zero()));
        CHECK(om.contains(k.element(i)));
        CHECK(om.contains(k.element(j)));
      }
  }
}

TEST_CASE("theta_bar on the worked example") {
  FqField f5 = FqField::make(5);
  ThetaBarParams params = ThetaBarParams::make(f5, f5.from_int(1), f5.from_int(2));
  CHECK(params.eps12 == f5.from_int(4));  // forced to eps1 - eps2 = -1
  CHECK(theta_bar(params, f5.from_int(0)) == KleinElem(1, 0));
  CHECK(theta_bar(params, f5.from_int(1)) == KleinElem(0, 0));
  CHECK(theta_bar(params, f5.from_int(3)) == KleinElem(1, 1));
}

TEST_CASE("theta_bar params validation") {
  FqField f5 = FqField::make(5);
  // distinct eps: an inconsistent explicit eps12 is rejected
  CHECK_THROWS_AS(
      ThetaBarParams::make(f5, f5.from_int(1), f5.from_int(2), f5.from_int(1)), Error);
  // equal eps: eps12 is a free nonzero choice, default 1
  ThetaBarParams p2 = ThetaBarParams::make(f5, f5.from_int(2), f5.from_int(2));
  CHECK(p2.eps12 == f5.one());
  CHECK_THROWS_AS(ThetaBarParams::make(f5, f5.from_int(2), f5.from_int(2), f5.zero()), Error);
  CHECK_THROWS_AS(ThetaBarParams::make(f5, f5.zero(), f5.from_int(2)), Error);
}

TEST_CASE("predicted subgroups") {
  FqField f5 = FqField::make(5);
  FqField f7 = FqField::make(7);
  CHECK(predicted_subgroup(f5, f5.from_int(4), f5.from_int(4)) == KleinSubgroup::zero_cross_z2());
  CHECK(predicted_subgroup(f5, f5.from_int(2), f5.from_int(2)) == KleinSubgroup::full());
  CHECK(predicted_subgroup(f7, f7.from_int(3), f7.from_int(5)) == KleinSubgroup::full());
}

TEST_CASE("generated image equals the prediction on spot checks") {
  FqField f5 = FqField::make(5);
  for (long i1 = 1; i1 < 5; ++i1)
    for (long i2 = 1; i2 < 5; ++i2) {
      FqElem e1 = f5.element(i1), e2 = f5.element(i2);
      ThetaBarParams params = ThetaBarParams::make(f5, e1, e2);
      CHECK(theta_bar_image(params) == predicted_subgroup(f5, e1, e2));
    }
}

TEST_CASE("lemma witnesses on the known examples") {
  FqField f5 = FqField::make(5);
  auto l6 = lemma_witness(LemmaId::L6, f5, {f5.from_int(1)});
  REQUIRE(l6.has_value());
  CHECK(l6->values[0] == f5.from_int(2));

  auto l7 = lemma_witness(LemmaId::L7, f5, {f5.from_int(1), f5.from_int(4)});
  REQUIRE(l7.has_value());
  CHECK(l7->values[0] == f5.from_int(1));
  CHECK(l7->values[1] == f5.from_int(1));
  CHECK(l7->values[2] == f5.from_int(2));

  FqField f3 = FqField::make(3);
  CHECK_FALSE(lemma_witness(LemmaId::L6, f3, {f3.from_int(1)}).has_value());
  CHECK(lemma_witness(LemmaId::L6, f3, {f3.from_int(2)}).has_value());
}

TEST_CASE("lemma parameter validation") {
  FqField f5 = FqField::make(5);
  // L7 needs distinct nonzero squares
  CHECK_THROWS_AS(lemma_witness(LemmaId::L7, f5, {f5.from_int(1), f5.from_int(2)}), Error);
  CHECK_THROWS_AS(lemma_witness(LemmaId::L7, f5, {f5.from_int(1), f5.from_int(1)}), Error);
  // L9 requires -1 a non-square; over F_5 it is a square
  CHECK_THROWS_AS(lemma_witness(LemmaId::L9, f5, {f5.from_int(2), f5.from_int(3)}), Error);
  CHECK_THROWS_AS(lemma_witness(LemmaId::L6, f5, {f5.zero()}), Error);
}

TEST_CASE("conic point counts") {
  FqField f5 = FqField::make(5);
  FqField f3 = FqField::make(3);
  FqField f7 = FqField::make(7);
  CHECK(conic_count(f5, f5.from_int(2), f5.from_int(2)) == 6);
  CHECK(conic_count(f3, f3.from_int(2), f3.from_int(2)) == 4);
  CHECK(conic_count(f7, f7.from_int(1), f7.from_int(3)) == 8);
  // alpha must be a non-square
  CHECK_THROWS_AS(conic_count(f5, f5.from_int(1), f5.from_int(4)), Error);
}
