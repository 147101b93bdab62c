#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chatelet/klein.hpp"
#include "chatelet/local_field.hpp"

namespace chatelet {

enum class CaseTag { Split, P1i, P1ii, P1iii, P2i, P2ii, P2iii };
enum class ChowGroup { Trivial, Z2, Z2xZ2 };
enum class ReductionType { SmoothCubic, NodeSplit, NodeNonSplit, Cusp };

const char* case_tag_name(CaseTag t);
const char* chow_group_name(ChowGroup g);
const char* reduction_type_name(ReductionType r);
int chow_group_order(ChowGroup g);
CaseTag case_tag_from_name(const std::string& name);
ChowGroup chow_group_from_name(const std::string& name);

// Surface y^2 - d z^2 = x (x - e1)(x - e2) over K, brought to the normalized
// presentation v(e1) = v(e2) = r.  pi is the adapted uniformizer when
// K(sqrt(d)) is ramified, the canonical one otherwise.
struct ChateletInstance {
  LocalField field;
  LocalElem d, e1, e2;
  long r = 0;
  QuadExtKind ext_kind = QuadExtKind::Split;
  LocalElem pi;
  bool swapped = false;
  bool shifted = false;
  LocalElem shift_offset;  // original e1 when shifted (new x = old x - e1)
  std::vector<std::string> normalization_log;
};

// Validates (nonzero d, e1, e2; e1 != e2), swaps so v(e2) >= v(e1), applies
// the shift x -> x - e1 when v(e2) > v(e1), computes r and the uniformizer.
ChateletInstance normalize_instance(const LocalField& K, const LocalElem& d,
                                    const LocalElem& e1, const LocalElem& e2);

struct ChowResult {
  ChowGroup group;
  CaseTag case_tag;
  std::optional<ReductionType> reduction;        // absent for Split
  std::optional<KleinSubgroup> predicted_image;  // relative to the normalized presentation
};

ChowResult classify(const ChateletInstance& inst);

// Reduction type of the associated residue cubic; SplitSurface for split d.
ReductionType reduction_type(const ChateletInstance& inst);

// Point of P^1(K): finite coordinate x or the point at infinity.
struct XCoord {
  bool infinity = false;
  std::optional<LocalElem> x;

  static XCoord inf() { return XCoord{true, std::nullopt}; }
  static XCoord at(const LocalElem& v) { return XCoord{false, v}; }
  std::string str() const { return infinity ? "inf" : x->str(); }
};

// Membership of x in the image of X(K) on the base P^1: x in {0, e1, e2, inf}
// or h(x(x-e1)(x-e2)) = 0.  Works on any presentation (no normalization).
bool fiber_image_contains(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                          const XCoord& x);

// Theta on an arbitrary presentation: inf -> (0,0); 0 -> (h(e1 e2), h(-e1));
// e1 -> (h(e1), h(e1(e1-e2))); otherwise (h(x), h(x-e1)).  NotInFiberImage
// when the membership predicate fails; SplitExtension for split d.
KleinElem theta_raw(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                    const XCoord& x);

KleinElem theta_point(const ChateletInstance& inst, const XCoord& x);

// (a, c) -> (e1, e2) = (ac, a + c - 1) with the degeneracy checks
// (a, c, e1, e2 nonzero and a, c != 1).
std::pair<LocalElem, LocalElem> delpezzo_to_chatelet(const LocalElem& a, const LocalElem& c);

// Exact witness (a, b) with a^2 - d b^2 = c.  NotANorm when h(c) = 1;
// NoExactWitness when no small exact witness is found.
std::pair<LocalElem, LocalElem> solve_norm_equation(const LocalElem& d, const LocalElem& c);

enum class ExtStepKind { UnramifiedStep, RamifiedStep };
enum class RestrictionMap { Trivial, Isomorphism };

struct ExtensionDescriptor {
  long n = 1;  // [K' : K]
  ExtStepKind kind = ExtStepKind::UnramifiedStep;
  LocalField model;  // K'
};

// K must be Q_p and K' a simple extension of the same Q_p (UnsupportedTower
// otherwise).
ExtensionDescriptor make_extension(const LocalField& base, const LocalField& ext);

struct RestrictionResult {
  RestrictionMap map;        // Trivial iff n even or d becomes a square in K'
  ChowResult base_result;    // A_0(X)_0 over K
  ChowResult ext_result;     // A_0(X')_0 over K'
  ChateletInstance ext_instance;
};

RestrictionResult restriction_behavior(const ChateletInstance& inst,
                                       const ExtensionDescriptor& ext);

}  // namespace chatelet
