#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/chow.hpp"
#include "chatelet/errors.hpp"

using namespace chatelet;

namespace {

ChateletInstance make(const LocalField& K, long d, long e1, long e2) {
  return normalize_instance(K, K.from_int(d), K.from_int(e1), K.from_int(e2));
}

}  // namespace

TEST_CASE("normalization applies swap and shift") {
  LocalField q5 = LocalField::qp(5);
  ChateletInstance inst = make(q5, 2, 5, 50);
  CHECK(inst.e1 == q5.from_int(-5));
  CHECK(inst.e2 == q5.from_int(45));
  CHECK(inst.r == 1);
  CHECK(inst.shifted);
  CHECK_FALSE(inst.swapped);
  CHECK(!inst.normalization_log.empty());

  ChateletInstance inst2 = make(q5, 5, 1, 6);
  CHECK(inst2.e1 == q5.from_int(1));
  CHECK(inst2.e2 == q5.from_int(6));
  CHECK(inst2.r == 0);
  CHECK(inst2.pi == q5.from_int(5));
  CHECK_FALSE(inst2.shifted);

  ChateletInstance inst3 = make(q5, 2, 50, 5);  // swap, then shift
  CHECK(inst3.swapped);
  CHECK(inst3.e1 == q5.from_int(-5));
  CHECK(inst3.e2 == q5.from_int(45));
}

TEST_CASE("normalization rejects degenerate inputs") {
  LocalField q5 = LocalField::qp(5);
  CHECK_THROWS_AS(make(q5, 2, 1, 1), Error);
  CHECK_THROWS_AS(make(q5, 2, 0, 1), Error);
  CHECK_THROWS_AS(make(q5, 0, 1, 2), Error);
  CHECK_THROWS_AS(normalize_instance(q5, q5.from_int(2), LocalField::qp(3).one(),
                                     q5.from_int(2)),
                  Error);
}

TEST_CASE("classification of the six reference instances") {
  LocalField q5 = LocalField::qp(5);
  struct Row {
    long d, e1, e2;
    ChowGroup group;
    CaseTag tag;
  };
  for (const Row& row : {Row{2, 1, 2, ChowGroup::Trivial, CaseTag::P1i},
                         Row{2, 1, 6, ChowGroup::Z2, CaseTag::P1ii},
                         Row{2, 5, 10, ChowGroup::Z2xZ2, CaseTag::P1iii},
                         Row{5, 1, 6, ChowGroup::Z2, CaseTag::P2i},
                         Row{5, 2, 7, ChowGroup::Z2xZ2, CaseTag::P2ii},
                         Row{5, 1, 2, ChowGroup::Z2xZ2, CaseTag::P2iii}}) {
    ChowResult r = classify(make(q5, row.d, row.e1, row.e2));
    CHECK(r.group == row.group);
    CHECK(r.case_tag == row.tag);
    REQUIRE(r.predicted_image.has_value());
    CHECK(r.predicted_image->size() == chow_group_order(r.group));
  }

  ChowResult split = classify(make(q5, 4, 1, 2));
  CHECK(split.group == ChowGroup::Trivial);
  CHECK(split.case_tag == CaseTag::Split);
  CHECK_FALSE(split.reduction.has_value());
}

TEST_CASE("case names round-trip") {
  for (CaseTag t : {CaseTag::Split, CaseTag::P1i, CaseTag::P1ii, CaseTag::P1iii, CaseTag::P2i,
                    CaseTag::P2ii, CaseTag::P2iii})
    CHECK(case_tag_from_name(case_tag_name(t)) == t);
  CHECK(std::string(case_tag_name(CaseTag::P2i)) == "P2.i");
  CHECK(std::string(chow_group_name(ChowGroup::Z2xZ2)) == "Z2xZ2");
  CHECK_THROWS_AS(case_tag_from_name("P3.i"), Error);
  CHECK_THROWS_AS(chow_group_from_name("Z3"), Error);
}

TEST_CASE("reduction types") {
  LocalField q5 = LocalField::qp(5);
  CHECK(reduction_type(make(q5, 2, 1, 2)) == ReductionType::SmoothCubic);
  CHECK(reduction_type(make(q5, 2, 1, 6)) == ReductionType::NodeSplit);
  CHECK(reduction_type(make(q5, 2, 5, 10)) == ReductionType::Cusp);
  CHECK(reduction_type(make(q5, 5, 1, 6)) == ReductionType::NodeSplit);
  CHECK(reduction_type(make(q5, 5, 2, 7)) == ReductionType::NodeNonSplit);
  CHECK(reduction_type(make(q5, 5, 1, 2)) == ReductionType::SmoothCubic);
  CHECK_THROWS_AS(reduction_type(make(q5, 4, 1, 2)), Error);  // split surface

  // unramified node with non-square residue
  LocalField q7 = LocalField::qp(7);
  CHECK(reduction_type(make(q7, 3, 3, 10)) == ReductionType::NodeNonSplit);
}

TEST_CASE("swap invariance of the classification") {
  LocalField q5 = LocalField::qp(5);
  for (auto [d, e1, e2] : {std::tuple<long, long, long>{2, 1, 2},
                           {2, 1, 6},
                           {2, 5, 10},
                           {5, 1, 6},
                           {5, 2, 7},
                           {5, 1, 2},
                           {5, 3, 8}}) {
    ChowResult a = classify(make(q5, d, e1, e2));
    ChowResult b = classify(make(q5, d, e2, e1));
    CHECK(a.group == b.group);
    CHECK(a.case_tag == b.case_tag);
  }
}

TEST_CASE("scaling invariance") {
  LocalField q5 = LocalField::qp(5);
  for (auto [d, e1, e2] : {std::tuple<long, long, long>{2, 1, 6}, {5, 1, 6}, {5, 2, 7}}) {
    ChowResult base = classify(make(q5, d, e1, e2));
    ChowResult scaled = classify(make(q5, d, 25 * e1, 25 * e2));
    CHECK(base.group == scaled.group);
    CHECK(base.case_tag == scaled.case_tag);
  }
}

TEST_CASE("theta values") {
  LocalField q5 = LocalField::qp(5);
  ChateletInstance inst = make(q5, 5, 1, 6);
  CHECK(theta_point(inst, XCoord::inf()) == KleinElem(0, 0));
  CHECK(theta_point(inst, XCoord::at(q5.zero())) == KleinElem(0, 0));
  CHECK(theta_point(inst, XCoord::at(q5.from_int(4))) == KleinElem(0, 1));
  CHECK_THROWS_AS(theta_point(inst, XCoord::at(q5.from_int(2))), Error);

  CHECK(fiber_image_contains(inst.d, inst.e1, inst.e2, XCoord::at(q5.from_int(4))));
  CHECK_FALSE(fiber_image_contains(inst.d, inst.e1, inst.e2, XCoord::at(q5.from_int(2))));
  CHECK(fiber_image_contains(inst.d, inst.e1, inst.e2, XCoord::at(q5.from_int(6))));  // e2

  // component relation h(x) + h(x-e1) + h(x-e2) = 0 on generic members
  for (long x : {4, 9, 14, -1}) {
    LocalElem xe = q5.from_int(x);
    if (!fiber_image_contains(inst.d, inst.e1, inst.e2, XCoord::at(xe))) continue;
    int sum = h_map(inst.d, xe) + h_map(inst.d, xe - inst.e1) + h_map(inst.d, xe - inst.e2);
    CHECK(sum % 2 == 0);
  }
}

TEST_CASE("theta on a raw presentation needs no normalization") {
  LocalField q5 = LocalField::qp(5);
  LocalElem d = q5.from_int(5);
  // raw (e1, e2) = (-1, 5): valuations differ, theta still evaluates
  KleinElem th = theta_raw(d, q5.from_int(-1), q5.from_int(5), XCoord::at(q5.from_int(3)));
  CHECK(th == KleinElem(1, 0));
  CHECK_THROWS_AS(theta_raw(q5.from_int(4), q5.one(), q5.from_int(2), XCoord::inf()), Error);
}

TEST_CASE("del Pezzo parameter bridge") {
  LocalField q5 = LocalField::qp(5);
  auto [e1, e2] = delpezzo_to_chatelet(q5.from_int(2), q5.from_int(3));
  CHECK(e1 == q5.from_int(6));
  CHECK(e2 == q5.from_int(4));

  auto [f1, f2] = delpezzo_to_chatelet(q5.from_int(2), q5.from_int(2));
  CHECK(f1 == q5.from_int(4));
  CHECK(f2 == q5.from_int(3));

  CHECK_THROWS_AS(delpezzo_to_chatelet(q5.from_int(1), q5.from_int(3)), Error);
  CHECK_THROWS_AS(delpezzo_to_chatelet(q5.from_int(3), q5.zero()), Error);
  CHECK_THROWS_AS(delpezzo_to_chatelet(q5.from_int(3), q5.from_int(-2)), Error);  // a + c = 1
}

TEST_CASE("norm equation witnesses") {
  LocalField q5 = LocalField::qp(5);
  auto [a, b] = solve_norm_equation(q5.from_int(5), q5.from_int(4));
  CHECK(a == q5.from_int(2));
  CHECK(b == q5.zero());
  CHECK(a * a - q5.from_int(5) * b * b == q5.from_int(4));

  auto [a2, b2] = solve_norm_equation(q5.from_int(2), q5.from_int(-1));
  CHECK(a2 * a2 - q5.from_int(2) * b2 * b2 == q5.from_int(-1));

  CHECK_THROWS_AS(solve_norm_equation(q5.from_int(5), q5.from_int(2)), Error);
}

TEST_CASE("restriction behavior on the reference examples") {
  LocalField q5 = LocalField::qp(5);

  ChateletInstance inst = make(q5, 2, 5, 10);
  ExtensionDescriptor ram2 = make_extension(q5, LocalField::parse("Eis:5:[-5,0,1]"));
  RestrictionResult r1 = restriction_behavior(inst, ram2);
  CHECK(r1.map == RestrictionMap::Trivial);
  CHECK(r1.base_result.group == ChowGroup::Z2xZ2);
  CHECK(r1.ext_result.group == ChowGroup::Trivial);

  ExtensionDescriptor unram3 = make_extension(q5, LocalField::parse("Unram:5^3"));
  RestrictionResult r2 = restriction_behavior(inst, unram3);
  CHECK(r2.map == RestrictionMap::Isomorphism);
  CHECK(r2.ext_result.group == r2.base_result.group);
  CHECK(r2.ext_result.case_tag == r2.base_result.case_tag);

  ChateletInstance inst2 = make(q5, 2, 1, 6);
  ExtensionDescriptor unram2 = make_extension(q5, LocalField::parse("Unram:5^2"));
  RestrictionResult r3 = restriction_behavior(inst2, unram2);
  CHECK(r3.map == RestrictionMap::Trivial);
  CHECK(r3.ext_result.case_tag == CaseTag::Split);
  CHECK(r3.ext_result.group == ChowGroup::Trivial);

  CHECK_THROWS_AS(make_extension(LocalField::parse("Unram:5^2"), LocalField::parse("Qp:5")),
                  Error);
  CHECK_THROWS_AS(make_extension(q5, LocalField::parse("Qp:7")), Error);
}
