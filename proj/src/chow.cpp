#include "chatelet/chow.hpp"

#include "chatelet/errors.hpp"

namespace chatelet {

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Split: return "Split";
    case CaseTag::P1i: return "P1.i";
    case CaseTag::P1ii: return "P1.ii";
    case CaseTag::P1iii: return "P1.iii";
    case CaseTag::P2i: return "P2.i";
    case CaseTag::P2ii: return "P2.ii";
    case CaseTag::P2iii: return "P2.iii";
  }
  return "?";
}

const char* chow_group_name(ChowGroup g) {
  switch (g) {
    case ChowGroup::Trivial: return "Trivial";
    case ChowGroup::Z2: return "Z2";
    case ChowGroup::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

const char* reduction_type_name(ReductionType r) {
  switch (r) {
    case ReductionType::SmoothCubic: return "SmoothCubic";
    case ReductionType::NodeSplit: return "NodeSplit";
    case ReductionType::NodeNonSplit: return "NodeNonSplit";
    case ReductionType::Cusp: return "Cusp";
  }
  return "?";
}

int chow_group_order(ChowGroup g) {
  switch (g) {
    case ChowGroup::Trivial: return 1;
    case ChowGroup::Z2: return 2;
    case ChowGroup::Z2xZ2: return 4;
  }
  return 0;
}

CaseTag case_tag_from_name(const std::string& name) {
  for (CaseTag t : {CaseTag::Split, CaseTag::P1i, CaseTag::P1ii, CaseTag::P1iii, CaseTag::P2i,
                    CaseTag::P2ii, CaseTag::P2iii})
    if (name == case_tag_name(t)) return t;
  fail(Errc::ParseError, "unknown case tag: " + name);
}

ChowGroup chow_group_from_name(const std::string& name) {
  for (ChowGroup g : {ChowGroup::Trivial, ChowGroup::Z2, ChowGroup::Z2xZ2})
    if (name == chow_group_name(g)) return g;
  fail(Errc::ParseError, "unknown group: " + name);
}

ChateletInstance normalize_instance(const LocalField& K, const LocalElem& d, const LocalElem& e1,
                                    const LocalElem& e2) {
  if (d.field() != K || e1.field() != K || e2.field() != K)
    fail(Errc::FieldMismatch, "d, e1, e2 must live in the given field");
  if (d.is_zero() || e1.is_zero() || e2.is_zero())
    fail(Errc::DegenerateInput, "d, e1, e2 must be nonzero");
  if (e1 == e2) fail(Errc::DegenerateInput, "e1 and e2 must be distinct");

  QuadExtKind ext = quad_ext_kind(d);
  LocalElem a = e1, b = e2;
  bool swapped = false, shifted = false;
  std::vector<std::string> log;

  long va = valuation(a).value();
  long vb = valuation(b).value();
  if (va > vb) {
    std::swap(a, b);
    std::swap(va, vb);
    swapped = true;
    log.push_back("swap e1 <-> e2 so that v(e1) <= v(e2)");
  }
  LocalElem offset = K.zero();
  if (va < vb) {
    // roots {0, e1, e2} -> {-e1, 0, e2 - e1}; both new labels get valuation va
    offset = a;
    LocalElem na = -a;
    LocalElem nb = b - a;
    a = na;
    b = nb;
    shifted = true;
    log.push_back("shift x -> x - e1: (e1, e2) := (-e1, e2 - e1)");
  }
  long r = valuation(a).value();

  LocalElem pi = (ext == QuadExtKind::Ramified) ? adapted_uniformizer(d) : K.uniformizer();
  if (ext == QuadExtKind::Ramified) log.push_back("adapted uniformizer pi = " + pi.str());

  return ChateletInstance{K, d, a, b, r, ext, pi, swapped, shifted, offset, log};
}

namespace {

void check_normalized(const ChateletInstance& inst) {
  Valuation v1 = valuation(inst.e1);
  Valuation v2 = valuation(inst.e2);
  if (v1 != Valuation::of(inst.r) || v2 != Valuation::of(inst.r))
    fail(Errc::PreconditionViolated, "instance is not normalized: v(e1) = v(e2) = r required");
}

}  // namespace

ReductionType reduction_type(const ChateletInstance& inst) {
  if (inst.ext_kind == QuadExtKind::Split)
    fail(Errc::SplitSurface, "no reduction trichotomy for split d");
  check_normalized(inst);

  if (inst.ext_kind == QuadExtKind::Unramified) {
    // residues of e_i / pi^{2m} with r = 2m or 2m+1: both vanish when r is odd
    if (inst.r % 2 != 0) return ReductionType::Cusp;
    FqElem w1 = omega(inst.pi, inst.e1);
    FqElem w2 = omega(inst.pi, inst.e2);
    if (w1 != w2) return ReductionType::SmoothCubic;
    return is_square(w1) ? ReductionType::NodeSplit : ReductionType::NodeNonSplit;
  }

  FqElem w1 = omega(inst.pi, inst.e1);
  FqElem w2 = omega(inst.pi, inst.e2);
  if (w1 != w2) return ReductionType::SmoothCubic;
  return is_square(w1) ? ReductionType::NodeSplit : ReductionType::NodeNonSplit;
}

ChowResult classify(const ChateletInstance& inst) {
  if (inst.ext_kind == QuadExtKind::Split)
    return ChowResult{ChowGroup::Trivial, CaseTag::Split, std::nullopt,
                      KleinSubgroup::trivial()};
  check_normalized(inst);

  std::optional<ReductionType> red = reduction_type(inst);

  if (inst.ext_kind == QuadExtKind::Unramified) {
    if (inst.r % 2 == 0) {
      long s = valuation(inst.e1 - inst.e2).value();
      if (s == inst.r)
        return ChowResult{ChowGroup::Trivial, CaseTag::P1i, red, KleinSubgroup::trivial()};
      return ChowResult{ChowGroup::Z2, CaseTag::P1ii, red, KleinSubgroup::zero_cross_z2()};
    }
    return ChowResult{ChowGroup::Z2xZ2, CaseTag::P1iii, red, KleinSubgroup::full()};
  }

  FqElem w1 = omega(inst.pi, inst.e1);
  FqElem w2 = omega(inst.pi, inst.e2);
  if (w1 == w2) {
    if (h_map(inst.d, inst.e1) == 0)
      return ChowResult{ChowGroup::Z2, CaseTag::P2i, red, KleinSubgroup::zero_cross_z2()};
    return ChowResult{ChowGroup::Z2xZ2, CaseTag::P2ii, red, KleinSubgroup::full()};
  }
  return ChowResult{ChowGroup::Z2xZ2, CaseTag::P2iii, red, KleinSubgroup::full()};
}

namespace {

void check_presentation(const LocalElem& d, const LocalElem& e1, const LocalElem& e2) {
  if (e1.field() != d.field() || e2.field() != d.field())
    fail(Errc::FieldMismatch, "d, e1, e2 must live in one field");
  if (d.is_zero() || e1.is_zero() || e2.is_zero())
    fail(Errc::DegenerateInput, "d, e1, e2 must be nonzero");
  if (e1 == e2) fail(Errc::DegenerateInput, "e1 and e2 must be distinct");
  if (quad_ext_kind(d) == QuadExtKind::Split)
    fail(Errc::SplitExtension, "theta is undefined for split d");
}

}  // namespace

bool fiber_image_contains(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                          const XCoord& x) {
  check_presentation(d, e1, e2);
  if (x.infinity) return true;
  const LocalElem& v = *x.x;
  if (v.field() != d.field()) fail(Errc::FieldMismatch, "x must live in the instance field");
  if (v.is_zero() || v == e1 || v == e2) return true;
  return h_map(d, v * (v - e1) * (v - e2)) == 0;
}

KleinElem theta_raw(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                    const XCoord& x) {
  if (!fiber_image_contains(d, e1, e2, x))
    fail(Errc::NotInFiberImage, "x is not in the image of the fibration");
  if (x.infinity) return KleinElem(0, 0);
  const LocalElem& v = *x.x;
  if (v.is_zero()) return KleinElem(h_map(d, e1 * e2), h_map(d, -e1));
  if (v == e1) return KleinElem(h_map(d, e1), h_map(d, e1 * (e1 - e2)));
  return KleinElem(h_map(d, v), h_map(d, v - e1));
}

KleinElem theta_point(const ChateletInstance& inst, const XCoord& x) {
  return theta_raw(inst.d, inst.e1, inst.e2, x);
}

std::pair<LocalElem, LocalElem> delpezzo_to_chatelet(const LocalElem& a, const LocalElem& c) {
  if (a.field() != c.field()) fail(Errc::FieldMismatch, "a and c must live in one field");
  const LocalField& K = a.field();
  LocalElem one = K.one();
  if (a.is_zero() || c.is_zero() || a == one || c == one)
    fail(Errc::DegenerateParameters, "a and c must avoid 0 and 1");
  LocalElem e1 = a * c;
  LocalElem e2 = a + c - one;
  if (e2.is_zero()) fail(Errc::DegenerateParameters, "a + c - 1 must be nonzero");
  return {e1, e2};
}

namespace {

long floor_div2(long v) { return (v >= 0) ? v / 2 : -((-v + 1) / 2); }

// deterministic witness candidates for the reduced norm equation
std::vector<LocalElem> norm_candidates(const LocalField& K) {
  std::vector<LocalElem> out;
  for (long k = 0; k <= 40; ++k) out.push_back(K.from_int(k));
  if (K.degree() > 1) {
    const FqField& res = K.residue_field();
    for (long i = 1; i < res.q(); ++i) out.push_back(K.lift(res.element(i)));
    LocalElem pi = K.uniformizer();
    for (long k = 1; k <= 12; ++k) out.push_back(pi * K.from_int(k));
    for (long i = 1; i < res.q(); ++i) out.push_back(pi * K.lift(res.element(i)));
  } else {
    LocalElem pi = K.uniformizer();
    for (long k = 1; k <= 12; ++k) out.push_back(pi * K.from_int(k));
  }
  return out;
}

}  // namespace

std::pair<LocalElem, LocalElem> solve_norm_equation(const LocalElem& d, const LocalElem& c) {
  if (d.field() != c.field()) fail(Errc::FieldMismatch, "d and c must live in one field");
  if (d.is_zero() || c.is_zero()) fail(Errc::ZeroArgument, "d and c must be nonzero");
  if (quad_ext_kind(d) == QuadExtKind::Split)
    fail(Errc::SplitExtension, "every element is a norm for split d");
  if (h_map(d, c) != 0) fail(Errc::NotANorm, "c is not a norm from K(sqrt(d))");

  const LocalField& K = d.field();
  LocalElem pi = K.uniformizer();
  long s = floor_div2(valuation(c).value());
  long t = floor_div2(valuation(d).value());
  LocalElem c2 = c * pi.pow(-2 * s);  // valuation 0 or 1
  LocalElem d2 = d * pi.pow(-2 * t);

  for (const LocalElem& b : norm_candidates(K)) {
    LocalElem target = c2 + d2 * b * b;
    if (auto a = try_exact_sqrt(target)) {
      LocalElem A = *a * pi.pow(s);
      LocalElem B = b * pi.pow(s - t);
      if (A * A - d * B * B == c) return {A, B};
    }
  }
  fail(Errc::NoExactWitness, "no small exact witness found");
}

ExtensionDescriptor make_extension(const LocalField& base, const LocalField& ext) {
  if (base.degree() != 1) fail(Errc::UnsupportedTower, "base field must be Q_p");
  if (ext.p() != base.p()) fail(Errc::UnsupportedTower, "extension must sit over the same Q_p");
  ExtStepKind kind = (ext.kind() == LocalFieldKind::Eisenstein) ? ExtStepKind::RamifiedStep
                                                                : ExtStepKind::UnramifiedStep;
  return ExtensionDescriptor{ext.degree(), kind, ext};
}

RestrictionResult restriction_behavior(const ChateletInstance& inst,
                                       const ExtensionDescriptor& ext) {
  if (inst.field.degree() != 1)
    fail(Errc::UnsupportedTower, "restriction base must be Q_p");
  if (ext.model.p() != inst.field.p())
    fail(Errc::UnsupportedTower, "extension must sit over the same Q_p");

  ChowResult base_result = classify(inst);
  LocalElem dd = embed(ext.model, inst.d);
  LocalElem f1 = embed(ext.model, inst.e1);
  LocalElem f2 = embed(ext.model, inst.e2);
  ChateletInstance ext_inst = normalize_instance(ext.model, dd, f1, f2);
  ChowResult ext_result = classify(ext_inst);

  bool trivial = (ext.n % 2 == 0) || ext_inst.ext_kind == QuadExtKind::Split;
  RestrictionMap map = trivial ? RestrictionMap::Trivial : RestrictionMap::Isomorphism;
  return RestrictionResult{map, base_result, ext_result, ext_inst};
}

}  // namespace chatelet
