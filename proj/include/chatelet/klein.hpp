#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chatelet {

// Element of (Z/2Z)^2, written additively.
struct KleinElem {
  uint8_t b1 = 0;
  uint8_t b2 = 0;

  constexpr KleinElem() = default;
  constexpr KleinElem(int x, int y) : b1(uint8_t(x & 1)), b2(uint8_t(y & 1)) {}

  constexpr int index() const { return b1 | (b2 << 1); }
  static constexpr KleinElem from_index(int i) { return KleinElem(i & 1, (i >> 1) & 1); }

  friend constexpr KleinElem operator+(KleinElem a, KleinElem b) {
    return KleinElem(a.b1 ^ b.b1, a.b2 ^ b.b2);
  }
  friend constexpr bool operator==(KleinElem a, KleinElem b) {
    return a.b1 == b.b1 && a.b2 == b.b2;
  }
  friend constexpr bool operator!=(KleinElem a, KleinElem b) { return !(a == b); }

  bool is_zero() const { return b1 == 0 && b2 == 0; }
  std::string str() const {
    return "(" + std::to_string(int(b1)) + "," + std::to_string(int(b2)) + ")";
  }
};

// Subgroup of (Z/2Z)^2 as a 4-bit membership mask; always contains the identity.
class KleinSubgroup {
 public:
  KleinSubgroup() : mask_(1) {}

  static KleinSubgroup trivial() { return KleinSubgroup(); }
  static KleinSubgroup full() { return KleinSubgroup(0xF); }
  // {0} x Z/2: second coordinate free.
  static KleinSubgroup zero_cross_z2() {
    return KleinSubgroup(uint8_t((1 << KleinElem(0, 0).index()) | (1 << KleinElem(0, 1).index())));
  }
  // Z/2 x {0}: first coordinate free.
  static KleinSubgroup z2_cross_zero() {
    return KleinSubgroup(uint8_t((1 << KleinElem(0, 0).index()) | (1 << KleinElem(1, 0).index())));
  }

  bool contains(KleinElem g) const { return (mask_ >> g.index()) & 1; }
  int size() const;
  std::vector<KleinElem> members() const;  // sorted by index

  // Smallest subgroup containing this one and g.
  void add(KleinElem g);

  friend bool operator==(KleinSubgroup a, KleinSubgroup b) { return a.mask_ == b.mask_; }
  friend bool operator!=(KleinSubgroup a, KleinSubgroup b) { return a.mask_ != b.mask_; }

  bool subgroup_of(KleinSubgroup other) const { return (mask_ & ~other.mask_) == 0; }

  std::string str() const;

 private:
  explicit KleinSubgroup(uint8_t mask) : mask_(mask) {}
  uint8_t mask_;
};

KleinSubgroup generated_subgroup(const std::vector<KleinElem>& gens);

}  // namespace chatelet
