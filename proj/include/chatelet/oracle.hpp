#pragma once

#include <functional>
#include <vector>

#include "chatelet/chow.hpp"

namespace chatelet {

// Brute-force enumeration of the fiber-image subset N: the special points
// 0, e1, e2, inf plus every x = pi^r (u0 + u1 pi + ... + uD pi^D) with digits
// from the canonical residue lifts, u0 != 0, that passes the membership test.
struct EnumerationPlan {
  ChateletInstance instance;
  long depth = 2;               // D: digits beyond the leading one
  bool include_special = true;
  std::vector<long> probe_layers;  // extra valuations besides r (e.g. r-1, r+1)

  static EnumerationPlan defaults(const ChateletInstance& inst);
};

// max(v(e1 - e2) - r, 0) + 2.
long default_depth(const ChateletInstance& inst);

struct EnumeratedPoint {
  XCoord x;
  KleinElem theta;
  bool special = false;
};

// Streams every member (specials first, then layer by layer in plan order).
// SplitSurface for split instances.
void enumerate_N(const EnumerationPlan& plan,
                 const std::function<void(const EnumeratedPoint&)>& sink);

std::vector<EnumeratedPoint> enumerate_N(const EnumerationPlan& plan);

// Subgroup of (Z/2)^2 generated by theta over the enumerated stream.  For
// split instances this is the trivial subgroup (h vanishes identically on a
// split quadratic algebra; no enumeration runs).
KleinSubgroup theta_image_bruteforce(const EnumerationPlan& plan);
KleinSubgroup theta_image_bruteforce(const ChateletInstance& inst);

// Theta image of a presentation exactly as given (no normalization): streams
// specials plus the digit enumeration over every valuation layer in
// [min(v(e1), v(e2)), max(v(e1), v(e2))], which carries the whole image
// (layers below contribute only (0,0), layers above only theta(0)).
KleinSubgroup theta_image_raw(const LocalElem& d, const LocalElem& e1, const LocalElem& e2,
                              long depth);

}  // namespace chatelet
