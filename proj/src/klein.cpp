#include "chatelet/klein.hpp"

namespace chatelet {

int KleinSubgroup::size() const {
  int n = 0;
  for (int i = 0; i < 4; ++i) n += (mask_ >> i) & 1;
  return n;
}

std::vector<KleinElem> KleinSubgroup::members() const {
  std::vector<KleinElem> out;
  for (int i = 0; i < 4; ++i)
    if ((mask_ >> i) & 1) out.push_back(KleinElem::from_index(i));
  return out;
}

void KleinSubgroup::add(KleinElem g) {
  mask_ |= uint8_t(1 << g.index());
  // close under addition (at most two rounds suffice in a group of order 4)
  for (int round = 0; round < 2; ++round) {
    uint8_t next = mask_;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (((mask_ >> i) & 1) && ((mask_ >> j) & 1))
          next |= uint8_t(1 << (KleinElem::from_index(i) + KleinElem::from_index(j)).index());
    if (next == mask_) break;
    mask_ = next;
  }
}

std::string KleinSubgroup::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& g : members()) {
    if (!first) s += ",";
    s += g.str();
    first = false;
  }
  return s + "}";
}

KleinSubgroup generated_subgroup(const std::vector<KleinElem>& gens) {
  KleinSubgroup s = KleinSubgroup::trivial();
  for (const auto& g : gens) s.add(g);
  return s;
}

}  // namespace chatelet
