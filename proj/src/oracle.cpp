#include "chatelet/oracle.hpp"

#include <algorithm>

#include "chatelet/errors.hpp"

namespace chatelet {

long default_depth(const ChateletInstance& inst) {
  long s = valuation(inst.e1 - inst.e2).value();
  long gap = s - inst.r;
  if (gap < 0) gap = 0;
  return gap + 2;
}

EnumerationPlan EnumerationPlan::defaults(const ChateletInstance& inst) {
  return EnumerationPlan{inst, default_depth(inst), true, {}};
}

namespace {

// visitor returns false to stop the walk early
using Visitor = std::function<bool(const EnumeratedPoint&)>;

bool emit_specials(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                   const Visitor& visit) {
  const LocalField& K = d.field();
  XCoord specials[4] = {XCoord::inf(), XCoord::at(K.zero()), XCoord::at(e1), XCoord::at(e2)};
  for (const XCoord& x : specials) {
    EnumeratedPoint pt{x, theta_raw(d, e1, e2, x), true};
    if (!visit(pt)) return false;
  }
  return true;
}

// x = pi^layer (u0 + u1 pi + ... + uD pi^D), u0 != 0, digits = residue lifts
bool walk_layer(const LocalElem& d, const LocalElem& e1, const LocalElem& e2, const LocalElem& pi,
                long layer, long depth, const Visitor& visit) {
  const LocalField& K = d.field();
  const FqField& res = K.residue_field();
  std::vector<LocalElem> lifts;
  lifts.reserve(size_t(res.q()));
  for (long i = 0; i < res.q(); ++i) lifts.push_back(K.lift(res.element(i)));
  std::vector<LocalElem> pipow;
  pipow.reserve(size_t(depth) + 1);
  LocalElem cur = pi.pow(layer);
  for (long i = 0; i <= depth; ++i) {
    pipow.push_back(cur);
    cur = cur * pi;
  }

  std::function<bool(long, const LocalElem&)> rec = [&](long i, const LocalElem& acc) -> bool {
    if (i > depth) {
      if (acc == e1 || acc == e2) return true;  // already streamed as specials
      if (h_map(d, acc * (acc - e1) * (acc - e2)) != 0) return true;
      KleinElem th(h_map(d, acc), h_map(d, acc - e1));
      EnumeratedPoint pt{XCoord::at(acc), th, false};
      return visit(pt);
    }
    long start = (i == 0) ? 1 : 0;
    for (long j = start; j < res.q(); ++j)
      if (!rec(i + 1, acc + lifts[size_t(j)] * pipow[size_t(i)])) return false;
    return true;
  };
  return rec(0, K.zero());
}

bool walk_plan(const EnumerationPlan& plan, const Visitor& visit) {
  const ChateletInstance& inst = plan.instance;
  if (inst.ext_kind == QuadExtKind::Split)
    fail(Errc::SplitSurface, "no theta enumeration for split instances");
  if (plan.include_special)
    if (!emit_specials(inst.d, inst.e1, inst.e2, visit)) return false;
  if (!walk_layer(inst.d, inst.e1, inst.e2, inst.pi, inst.r, plan.depth, visit)) return false;
  for (long layer : plan.probe_layers)
    if (!walk_layer(inst.d, inst.e1, inst.e2, inst.pi, layer, plan.depth, visit)) return false;
  return true;
}

}  // namespace

void enumerate_N(const EnumerationPlan& plan,
                 const std::function<void(const EnumeratedPoint&)>& sink) {
  walk_plan(plan, [&](const EnumeratedPoint& pt) {
    sink(pt);
    return true;
  });
}

std::vector<EnumeratedPoint> enumerate_N(const EnumerationPlan& plan) {
  std::vector<EnumeratedPoint> out;
  enumerate_N(plan, [&](const EnumeratedPoint& pt) { out.push_back(pt); });
  return out;
}

KleinSubgroup theta_image_bruteforce(const EnumerationPlan& plan) {
  // h vanishes identically on a split quadratic algebra: the image is trivial
  // and the enumeration machinery has nothing to add
  if (plan.instance.ext_kind == QuadExtKind::Split) return KleinSubgroup::trivial();
  KleinSubgroup img = KleinSubgroup::trivial();
  walk_plan(plan, [&](const EnumeratedPoint& pt) {
    img.add(pt.theta);
    return img != KleinSubgroup::full();
  });
  return img;
}

KleinSubgroup theta_image_bruteforce(const ChateletInstance& inst) {
  return theta_image_bruteforce(EnumerationPlan::defaults(inst));
}

KleinSubgroup theta_image_raw(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                              long depth) {
  KleinSubgroup img = KleinSubgroup::trivial();
  Visitor visit = [&](const EnumeratedPoint& pt) {
    img.add(pt.theta);
    return img != KleinSubgroup::full();
  };
  // specials first: also validates the presentation (split d is an error)
  if (!emit_specials(d, e1, e2, visit)) return img;

  const LocalField& K = d.field();
  LocalElem pi =
      (quad_ext_kind(d) == QuadExtKind::Ramified) ? adapted_uniformizer(d) : K.uniformizer();
  long v1 = valuation(e1).value();
  long v2 = valuation(e2).value();
  for (long layer = std::min(v1, v2); layer <= std::max(v1, v2); ++layer)
    if (!walk_layer(d, e1, e2, pi, layer, depth, visit)) break;
  return img;
}

}  // namespace chatelet
