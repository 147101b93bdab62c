#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chatelet/fq.hpp"
#include "chatelet/klein.hpp"

namespace chatelet {

// Omega = { t in k : t(t - eps1)(t - eps2) is a square }, with 0 counted as a
// square.  Members are listed in the canonical enumeration order.
struct OmegaSet {
  FqField field;
  FqElem eps1, eps2;
  std::vector<FqElem> members;

  bool contains(const FqElem& t) const;
};

OmegaSet omega_set(const FqField& k, const FqElem& eps1, const FqElem& eps2);

// Parameters of the residue-level theta map.  eps12 stands in for the residue
// of e1 - e2; when eps1 != eps2 it is forced to eps1 - eps2, and when
// eps1 == eps2 it is a free nonzero choice (default 1).
struct ThetaBarParams {
  FqField field;
  FqElem eps1, eps2, eps12;

  static ThetaBarParams make(const FqField& k, const FqElem& eps1, const FqElem& eps2,
                             const std::optional<FqElem>& eps12 = std::nullopt);
};

KleinElem theta_bar(const ThetaBarParams& params, const FqElem& t);

// Subgroup of (Z/2)^2 generated by theta_bar over the omega set of
// (eps1, eps2).
KleinSubgroup theta_bar_image(const ThetaBarParams& params);

// Closed-form prediction: {0} x Z/2 when eps1 == eps2 is a square, the full
// group otherwise.
KleinSubgroup predicted_subgroup(const FqField& k, const FqElem& eps1, const FqElem& eps2);

enum class LemmaId { L6, L7, L8, L9 };

// Witness values: {xi} for L6, {xi, eta, zeta} for L7-L9.  First witness in
// the canonical enumeration order (lexicographic over the tuple), or nullopt
// when none exists (possible only for L6 over F_3 with eps = 1).
struct LemmaWitness {
  std::vector<FqElem> values;
};

// params: L6 {eps};  L7 {s1, s2} distinct nonzero squares;
// L8 {s1, n2} with s1 a nonzero square, n2 a non-square, s1 - n2 a square;
// L9 {n1, n2} distinct non-squares, requires -1 a non-square in k.
// The non-square scale alpha is the field's canonical non-square.
std::optional<LemmaWitness> lemma_witness(LemmaId which, const FqField& k,
                                          const std::vector<FqElem>& params);

// Number of projective points of xi^2 - eps*zeta^2 = alpha*eta^2 in P^2(k);
// equals q + 1.  Requires eps nonzero and alpha a non-square.
long conic_count(const FqField& k, const FqElem& eps, const FqElem& alpha);

const char* lemma_name(LemmaId id);

}  // namespace chatelet
