#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chatelet/errors.hpp"
#include "chatelet/oracle.hpp"

using namespace chatelet;

namespace {

ChateletInstance make(const LocalField& K, long d, long e1, long e2) {
  return normalize_instance(K, K.from_int(d), K.from_int(e1), K.from_int(e2));
}

bool stream_contains(const std::vector<EnumeratedPoint>& pts, const LocalElem& x) {
  return std::any_of(pts.begin(), pts.end(), [&](const EnumeratedPoint& p) {
    return !p.x.infinity && *p.x.x == x;
  });
}

}  // namespace

TEST_CASE("default depth") {
  LocalField q5 = LocalField::qp(5);
  CHECK(default_depth(make(q5, 5, 1, 6)) == 3);   // v(e1-e2) = 1, r = 0
  CHECK(default_depth(make(q5, 2, 1, 2)) == 2);   // v(e1-e2) = 0
  CHECK(default_depth(make(q5, 2, 1, 26)) == 4);  // v(-25) = 2
  CHECK(EnumerationPlan::defaults(make(q5, 5, 1, 6)).depth == 3);
}

TEST_CASE("enumerated members for a ramified instance") {
  LocalField q5 = LocalField::qp(5);
  EnumerationPlan plan = EnumerationPlan::defaults(make(q5, 5, 1, 6));
  plan.depth = 2;

  std::vector<EnumeratedPoint> pts = enumerate_N(plan);
  CHECK(stream_contains(pts, q5.zero()));
  CHECK(stream_contains(pts, q5.from_int(4)));
  CHECK_FALSE(stream_contains(pts, q5.from_int(2)));

  int specials = 0;
  bool saw_inf = false;
  for (const EnumeratedPoint& p : pts) {
    if (p.special) ++specials;
    if (p.x.infinity) {
      saw_inf = true;
      CHECK(p.special);
      CHECK(p.theta == KleinElem(0, 0));
    }
  }
  CHECK(specials == 4);  // inf, 0, e1, e2
  CHECK(saw_inf);

  // every streamed point re-passes the membership predicate, and every
  // non-special finite x sits in the layer v(x) = r
  const ChateletInstance& inst = plan.instance;
  for (const EnumeratedPoint& p : pts) {
    CHECK(fiber_image_contains(inst.d, inst.e1, inst.e2, p.x));
    CHECK(theta_point(inst, p.x) == p.theta);
    if (!p.special) {
      REQUIRE(!p.x.infinity);
      CHECK(valuation(*p.x.x).value() == inst.r);
    }
  }
}

TEST_CASE("brute-force images of the reference instances") {
  LocalField q5 = LocalField::qp(5);

  EnumerationPlan a = EnumerationPlan::defaults(make(q5, 2, 1, 2));
  a.depth = 3;
  CHECK(theta_image_bruteforce(a) == KleinSubgroup::trivial());

  EnumerationPlan b = EnumerationPlan::defaults(make(q5, 5, 1, 6));
  b.depth = 3;
  CHECK(theta_image_bruteforce(b) == KleinSubgroup::zero_cross_z2());

  EnumerationPlan c = EnumerationPlan::defaults(make(q5, 2, 5, 10));
  c.depth = 3;
  CHECK(theta_image_bruteforce(c) == KleinSubgroup::full());
}

TEST_CASE("image agrees with the closed-form prediction") {
  LocalField q5 = LocalField::qp(5);
  LocalField q3 = LocalField::qp(3);
  struct Row {
    LocalField K;
    long d, e1, e2;
  };
  for (const Row& row : {Row{q5, 2, 1, 2}, Row{q5, 2, 1, 6}, Row{q5, 2, 5, 10},
                         Row{q5, 5, 1, 6}, Row{q5, 5, 2, 7}, Row{q5, 5, 1, 2},
                         Row{q3, 2, 1, 4}, Row{q3, 3, 1, 4}, Row{q3, 3, 2, 5},
                         Row{q3, 3, 1, 2}}) {
    ChateletInstance inst = make(row.K, row.d, row.e1, row.e2);
    ChowResult res = classify(inst);
    KleinSubgroup image = theta_image_bruteforce(inst);
    REQUIRE(res.predicted_image.has_value());
    CHECK(image == *res.predicted_image);
    CHECK(image.size() == chow_group_order(res.group));
  }
}

TEST_CASE("image is stable under depth increase") {
  LocalField q5 = LocalField::qp(5);
  for (auto [d, e1, e2] :
       {std::tuple<long, long, long>{2, 1, 6}, {5, 1, 6}, {5, 2, 7}, {2, 5, 10}}) {
    ChateletInstance inst = make(q5, d, e1, e2);
    EnumerationPlan base = EnumerationPlan::defaults(inst);
    EnumerationPlan deeper = base;
    deeper.depth = base.depth + 1;
    KleinSubgroup small = theta_image_bruteforce(base);
    KleinSubgroup large = theta_image_bruteforce(deeper);
    CHECK(small == large);
  }
}

TEST_CASE("split surfaces short-circuit") {
  LocalField q5 = LocalField::qp(5);
  ChateletInstance inst = make(q5, 4, 1, 2);
  CHECK(theta_image_bruteforce(inst) == KleinSubgroup::trivial());
  EnumerationPlan plan = EnumerationPlan::defaults(inst);
  CHECK_THROWS_AS(enumerate_N(plan), Error);
}

TEST_CASE("raw-presentation image vs normalized image") {
  // e1 = -1, e2 = pi: valuations differ, so the raw theta image lands in the
  // other coordinate of (Z/2)^2 than the normalized one.
  LocalField q5 = LocalField::qp(5);
  KleinSubgroup raw5 = theta_image_raw(q5.from_int(5), q5.from_int(-1), q5.from_int(5), 3);
  CHECK(raw5 == KleinSubgroup::z2_cross_zero());
  ChateletInstance norm5 = make(q5, 5, -1, 5);
  KleinSubgroup img5 = theta_image_bruteforce(norm5);
  CHECK(img5 == KleinSubgroup::zero_cross_z2());
  CHECK(raw5.size() == img5.size());

  LocalField q3 = LocalField::qp(3);
  KleinSubgroup raw3 = theta_image_raw(q3.from_int(3), q3.from_int(-1), q3.from_int(3), 3);
  CHECK(raw3 == KleinSubgroup::z2_cross_zero());
  ChateletInstance norm3 = make(q3, 3, -1, 3);
  KleinSubgroup img3 = theta_image_bruteforce(norm3);
  CHECK(img3 == KleinSubgroup::zero_cross_z2());
  CHECK(raw3.size() == img3.size());
}

TEST_CASE("probe layers only add points that theta already covers") {
  LocalField q5 = LocalField::qp(5);
  ChateletInstance inst = make(q5, 5, 1, 6);
  KleinSubgroup plain = theta_image_bruteforce(inst);

  EnumerationPlan probed = EnumerationPlan::defaults(inst);
  probed.probe_layers = {inst.r - 2, inst.r - 1, inst.r + 1, inst.r + 2};
  KleinSubgroup widened = theta_image_bruteforce(probed);
  CHECK(widened == plain);
}
