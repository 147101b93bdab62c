#include "chatelet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "chatelet/errors.hpp"
#include "chatelet/oracle.hpp"
#include "chatelet/residue.hpp"

namespace chatelet {

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr long kMaxRecordedFailures = 25;

void record_pass(CheckResult& res) { res.passed += 1; }

void record_fail(CheckResult& res, const std::string& line) {
  res.failed += 1;
  if (long(res.failures.size()) < kMaxRecordedFailures)
    res.failures.push_back(line);
  else if (long(res.failures.size()) == kMaxRecordedFailures)
    res.failures.push_back("... more failures suppressed");
}

struct GridRow {
  long p;
  const char* d;
  const char* e1;
  const char* e2;
  const char* case_tag;
  const char* group;
};

// least non-square residues: 2, 2, 3, 2 for p = 3, 5, 7, 13
const GridRow kGrid[] = {
    {3, "4", "1", "2", "Split", "Trivial"},
    {3, "2", "1", "2", "P1.i", "Trivial"},
    {3, "2", "1", "4", "P1.ii", "Z2"},
    {3, "2", "3", "6", "P1.iii", "Z2xZ2"},
    {3, "3", "1", "4", "P2.i", "Z2"},
    {3, "3", "2", "5", "P2.ii", "Z2xZ2"},
    {3, "3", "1", "2", "P2.iii", "Z2xZ2"},

    {5, "4", "1", "2", "Split", "Trivial"},
    {5, "2", "1", "2", "P1.i", "Trivial"},
    {5, "2", "1", "6", "P1.ii", "Z2"},
    {5, "2", "5", "10", "P1.iii", "Z2xZ2"},
    {5, "5", "1", "6", "P2.i", "Z2"},
    {5, "5", "2", "7", "P2.ii", "Z2xZ2"},
    {5, "5", "1", "2", "P2.iii", "Z2xZ2"},

    {7, "4", "1", "2", "Split", "Trivial"},
    {7, "3", "1", "2", "P1.i", "Trivial"},
    {7, "3", "1", "8", "P1.ii", "Z2"},
    {7, "3", "7", "14", "P1.iii", "Z2xZ2"},
    {7, "7", "1", "8", "P2.i", "Z2"},
    {7, "7", "3", "10", "P2.ii", "Z2xZ2"},
    {7, "7", "1", "2", "P2.iii", "Z2xZ2"},

    {13, "4", "1", "2", "Split", "Trivial"},
    {13, "2", "1", "2", "P1.i", "Trivial"},
    {13, "2", "1", "14", "P1.ii", "Z2"},
    {13, "2", "13", "26", "P1.iii", "Z2xZ2"},
    {13, "13", "1", "14", "P2.i", "Z2"},
    {13, "13", "2", "15", "P2.ii", "Z2xZ2"},
    {13, "13", "1", "2", "P2.iii", "Z2xZ2"},
};

MatrixEntry grid_entry(const GridRow& row) {
  return MatrixEntry{"Qp:" + std::to_string(row.p), row.d, row.e1, row.e2,
                     std::string(row.case_tag), std::string(row.group)};
}

}  // namespace

std::vector<MatrixEntry> classification_grid() {
  std::vector<MatrixEntry> out;
  for (const GridRow& row : kGrid) out.push_back(grid_entry(row));
  return out;
}

std::vector<MatrixEntry> default_matrix() {
  std::vector<MatrixEntry> out = classification_grid();
  // extension-field extras (kept out of the depth-stability grid: their
  // residue fields make deep enumerations disproportionately expensive)
  out.push_back(MatrixEntry{"Unram:3^2", "3", "1", "4", "P2.i", "Z2"});
  out.push_back(MatrixEntry{"Unram:5^2", "[0,1]", "1", "2", "P1.i", "Trivial"});
  out.push_back(MatrixEntry{"Eis:3:[-3,0,1]", "2", "[0,1]", "[0,2]", "P1.iii", "Z2xZ2"});
  out.push_back(MatrixEntry{"Eis:5:[-5,0,1]", "[0,1]", "2", "7", "P2.ii", "Z2xZ2"});
  return out;
}

namespace {

ChateletInstance instance_from_entry(const MatrixEntry& entry) {
  LocalField K = LocalField::parse(entry.field);
  return normalize_instance(K, K.parse_element(entry.d), K.parse_element(entry.e1),
                            K.parse_element(entry.e2));
}

std::string entry_label(const MatrixEntry& entry) {
  return entry.field + " d=" + entry.d + " e1=" + entry.e1 + " e2=" + entry.e2;
}

bool reduction_matches_tag(CaseTag tag, const std::optional<ReductionType>& red) {
  if (tag == CaseTag::Split) return !red.has_value();
  if (!red.has_value()) return false;
  switch (tag) {
    case CaseTag::P1i: return *red == ReductionType::SmoothCubic;
    case CaseTag::P1ii:
      return *red == ReductionType::NodeSplit || *red == ReductionType::NodeNonSplit;
    case CaseTag::P1iii: return *red == ReductionType::Cusp;
    case CaseTag::P2i: return *red == ReductionType::NodeSplit;
    case CaseTag::P2ii: return *red == ReductionType::NodeNonSplit;
    case CaseTag::P2iii: return *red == ReductionType::SmoothCubic;
    default: return false;
  }
}

}  // namespace

CheckResult check_classification_matrix(const std::vector<MatrixEntry>& matrix,
                                        std::optional<long> depth_override) {
  CheckResult res{"classification-matrix"};
  auto t0 = std::chrono::steady_clock::now();
  for (const MatrixEntry& entry : matrix) {
    std::string label = entry_label(entry);
    try {
      ChateletInstance inst = instance_from_entry(entry);
      ChowResult cr = classify(inst);
      std::vector<std::string> problems;

      if (entry.expected_case && case_tag_name(cr.case_tag) != *entry.expected_case)
        problems.push_back("case " + std::string(case_tag_name(cr.case_tag)) + " != expected " +
                           *entry.expected_case);
      if (entry.expected_group && chow_group_name(cr.group) != *entry.expected_group)
        problems.push_back("group " + std::string(chow_group_name(cr.group)) + " != expected " +
                           *entry.expected_group);
      if (!reduction_matches_tag(cr.case_tag, cr.reduction))
        problems.push_back("reduction type inconsistent with case tag");

      EnumerationPlan plan = EnumerationPlan::defaults(inst);
      if (depth_override) plan.depth = *depth_override;
      KleinSubgroup img = theta_image_bruteforce(plan);
      if (img.size() != chow_group_order(cr.group))
        problems.push_back("brute-force image size " + std::to_string(img.size()) +
                           " != group order " + std::to_string(chow_group_order(cr.group)));
      if (cr.predicted_image && img != *cr.predicted_image)
        problems.push_back("brute-force image " + img.str() + " != predicted " +
                           cr.predicted_image->str());

      if (problems.empty()) {
        record_pass(res);
      } else {
        std::string line = label + ": ";
        for (size_t i = 0; i < problems.size(); ++i)
          line += (i ? "; " : "") + problems[i];
        record_fail(res, line);
      }
    } catch (const std::exception& ex) {
      record_fail(res, label + ": exception: " + ex.what());
    }
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

CheckResult check_theta_invariants(const std::vector<MatrixEntry>& matrix) {
  CheckResult res{"theta-invariants"};
  auto t0 = std::chrono::steady_clock::now();
  for (const MatrixEntry& entry : matrix) {
    std::string label = entry_label(entry);
    try {
      ChateletInstance inst = instance_from_entry(entry);
      if (inst.ext_kind == QuadExtKind::Split) continue;  // nothing to enumerate
      ChowResult cr = classify(inst);

      EnumerationPlan plan = EnumerationPlan::defaults(inst);
      plan.probe_layers = {inst.r - 2, inst.r - 1, inst.r + 1, inst.r + 2};

      KleinElem theta0 = theta_point(inst, XCoord::at(inst.field.zero()));
      bool ramified = inst.ext_kind == QuadExtKind::Ramified;
      std::optional<ThetaBarParams> bar;
      if (ramified) {
        const FqField& k = inst.field.residue_field();
        bar = ThetaBarParams::make(k, omega(inst.pi, inst.e1), omega(inst.pi, inst.e2),
                                   omega(inst.pi, inst.e1 - inst.e2));
      }
      FqElem eps1 = omega(inst.pi, inst.e1);

      std::vector<std::string> problems;
      KleinSubgroup streamed = KleinSubgroup::trivial();
      enumerate_N(plan, [&](const EnumeratedPoint& pt) {
        streamed.add(pt.theta);
        if (pt.x.infinity) return;
        const LocalElem& x = *pt.x.x;
        bool is_zero = x.is_zero();
        bool is_e1 = (x == inst.e1);
        bool is_e2 = (x == inst.e2);

        // h(x) + h(x - e1) + h(x - e2) = 0 away from the degenerate fibers
        if (!is_zero && !is_e1 && !is_e2) {
          int sum = h_map(inst.d, x) + h_map(inst.d, x - inst.e1) + h_map(inst.d, x - inst.e2);
          if (sum % 2 != 0 && long(problems.size()) < 5)
            problems.push_back("component sum odd at x=" + x.str());
        }

        // theta collapses away from the critical layer
        if (!is_zero) {
          long v = valuation(x).value();
          if (v < inst.r && pt.theta != KleinElem(0, 0) && long(problems.size()) < 5)
            problems.push_back("theta below layer r not (0,0) at x=" + x.str());
          if (v > inst.r && pt.theta != theta0 && long(problems.size()) < 5)
            problems.push_back("theta above layer r != theta(0) at x=" + x.str());
        }

        // residue shadow on M: theta = theta_bar(omega(x))
        if (ramified) {
          bool in_layer = is_zero || valuation(x) == Valuation::of(inst.r);
          if (in_layer && (is_e1 || omega(inst.pi, x) != eps1)) {
            KleinElem shadow = theta_bar(*bar, omega(inst.pi, x));
            if (shadow != pt.theta && long(problems.size()) < 5)
              problems.push_back("theta_bar mismatch at x=" + x.str() + ": theta=" +
                                 pt.theta.str() + " shadow=" + shadow.str());
          }
        }
      });

      if (cr.predicted_image && !streamed.subgroup_of(*cr.predicted_image))
        problems.push_back("probe layers enlarged the image: " + streamed.str() + " vs " +
                           cr.predicted_image->str());

      if (problems.empty()) {
        record_pass(res);
      } else {
        std::string line = label + ": ";
        for (size_t i = 0; i < problems.size(); ++i)
          line += (i ? "; " : "") + problems[i];
        record_fail(res, line);
      }
    } catch (const std::exception& ex) {
      record_fail(res, label + ": exception: " + ex.what());
    }
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

namespace {

std::vector<std::pair<long, long>> prime_powers_upto(long qmax) {
  std::vector<std::pair<long, long>> out;  // (p, f)
  for (long p = 3; p <= qmax; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    long q = p;
    long f = 1;
    while (q <= qmax) {
      out.push_back({p, f});
      if (q > qmax / p) break;
      q *= p;
      f += 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto qa = 1L, qb = 1L;
    for (long i = 0; i < a.second; ++i) qa *= a.first;
    for (long i = 0; i < b.second; ++i) qb *= b.first;
    return qa < qb;
  });
  return out;
}

}  // namespace

CheckResult check_residue_sweeps(long qmax) {
  CheckResult res{"residue-sweeps"};
  auto t0 = std::chrono::steady_clock::now();

  for (auto [p, f] : prime_powers_upto(qmax)) {
    FqField k = FqField::make(p, f);
    long q = k.q();
    std::string kq = "q=" + std::to_string(q);

    // attained squares, by enumerating y -> y^2 (independent of the square table)
    std::vector<char> attained(size_t(q), 0);
    for (long y = 0; y < q; ++y) {
      FqElem e = k.element(y);
      attained[size_t((e * e).index())] = 1;
    }

    FqElem alpha = nonsquare_rep(k);

    // omega sets, swap symmetry, Lemma 5 containments, theta_bar images
    for (long i1 = 1; i1 < q; ++i1) {
      FqElem eps1 = k.element(i1);
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem eps2 = k.element(i2);
        OmegaSet om = omega_set(k, eps1, eps2);

        bool ok = true;
        std::string why;

        // projection of the affine curve y^2 = t(t - eps1)(t - eps2)
        for (long it = 0; it < q && ok; ++it) {
          FqElem t = k.element(it);
          FqElem val = t * (t - eps1) * (t - eps2);
          bool proj = attained[size_t(val.index())];
          if (proj != om.contains(t)) {
            ok = false;
            why = "omega vs curve projection differ at t=" + t.str();
          }
        }

        // swap symmetry of the omega set
        if (ok) {
          OmegaSet om_swapped = omega_set(k, eps2, eps1);
          if (om.members != om_swapped.members) {
            ok = false;
            why = "omega set changed under swapping eps1, eps2";
          }
        }

        // squares stay inside, non-squares stay out (except eps1) when equal
        if (ok && i1 == i2) {
          for (long it = 1; it < q && ok; ++it) {
            FqElem t = k.element(it);
            if (is_square(t) && !om.contains(t)) {
              ok = false;
              why = "square " + t.str() + " missing from omega";
            }
            if (!is_square(t) && t != eps1 && om.contains(t)) {
              ok = false;
              why = "non-square " + t.str() + " inside omega";
            }
          }
        }

        // generated subgroup matches the closed-form prediction
        KleinSubgroup pred = predicted_subgroup(k, eps1, eps2);
        if (ok) {
          if (i1 == i2) {
            for (long i12 = 1; i12 < q && ok; ++i12) {
              ThetaBarParams params = ThetaBarParams::make(k, eps1, eps2, k.element(i12));
              if (theta_bar_image(params) != pred) {
                ok = false;
                why = "theta_bar image != prediction at eps12=" + k.element(i12).str();
              }
            }
          } else {
            ThetaBarParams params = ThetaBarParams::make(k, eps1, eps2);
            if (theta_bar_image(params) != pred) {
              ok = false;
              why = "theta_bar image != prediction";
            }
          }
        }

        if (ok)
          record_pass(res);
        else
          record_fail(res, kq + " eps=(" + eps1.str() + "," + eps2.str() + "): " + why);
      }
    }

    // Lemma 6 witnesses: missing exactly for (F_3, eps = 1)
    for (long i = 1; i < q; ++i) {
      FqElem eps = k.element(i);
      auto w = lemma_witness(LemmaId::L6, k, {eps});
      bool expect_missing = (q == 3 && i == 1);
      bool ok = w.has_value() != expect_missing;
      if (ok && w) {
        FqElem xi = w->values[0];
        FqElem val = xi * xi - eps;
        if (xi.is_zero() || val.is_zero() || is_square(val)) ok = false;
      }
      if (ok)
        record_pass(res);
      else
        record_fail(res, kq + " L6 eps=" + eps.str() +
                             (w ? ": bad witness" : ": witness missing unexpectedly"));
    }

    // Lemma 7: distinct nonzero squares s1, s2
    for (long i1 = 1; i1 < q; ++i1) {
      FqElem s1 = k.element(i1);
      if (!is_square(s1)) continue;
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem s2 = k.element(i2);
        if (!is_square(s2) || s1 == s2) continue;
        auto w = lemma_witness(LemmaId::L7, k, {s1, s2});
        bool ok = w.has_value();
        if (ok) {
          FqElem xi = w->values[0], eta = w->values[1], zeta = w->values[2];
          ok = !xi.is_zero() && !eta.is_zero() && !zeta.is_zero() &&
               alpha * xi * xi - s1 == eta * eta && alpha * xi * xi - s2 == alpha * zeta * zeta;
        }
        if (ok)
          record_pass(res);
        else
          record_fail(res, kq + " L7 (" + s1.str() + "," + s2.str() + ")");
      }
    }

    // Lemma 8: s1 a nonzero square, n2 a non-square with s1 - n2 a square
    for (long i1 = 1; i1 < q; ++i1) {
      FqElem s1 = k.element(i1);
      if (!is_square(s1)) continue;
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem n2 = k.element(i2);
        if (is_square(n2)) continue;
        if (!is_square(s1 - n2)) continue;
        auto w = lemma_witness(LemmaId::L8, k, {s1, n2});
        bool ok = w.has_value();
        if (ok) {
          FqElem xi = w->values[0], eta = w->values[1], zeta = w->values[2];
          ok = !xi.is_zero() && !eta.is_zero() && !zeta.is_zero() &&
               xi * xi - s1 == alpha * eta * eta && xi * xi - n2 == alpha * zeta * zeta;
        }
        if (ok)
          record_pass(res);
        else
          record_fail(res, kq + " L8 (" + s1.str() + "," + n2.str() + ")");
      }
    }

    // Lemma 9: distinct non-squares, only when -1 is a non-square
    if (!is_square(-k.one())) {
      for (long i1 = 1; i1 < q; ++i1) {
        FqElem n1 = k.element(i1);
        if (is_square(n1)) continue;
        for (long i2 = 1; i2 < q; ++i2) {
          FqElem n2 = k.element(i2);
          if (is_square(n2) || n1 == n2) continue;
          auto w = lemma_witness(LemmaId::L9, k, {n1, n2});
          bool ok = w.has_value();
          if (ok) {
            FqElem xi = w->values[0], eta = w->values[1], zeta = w->values[2];
            ok = !xi.is_zero() && !eta.is_zero() && !zeta.is_zero() &&
                 xi * xi - n1 == alpha * eta * eta && xi * xi - n2 == alpha * zeta * zeta;
          }
          if (ok)
            record_pass(res);
          else
            record_fail(res, kq + " L9 (" + n1.str() + "," + n2.str() + ")");
        }
      }
    }

    // conics have exactly q + 1 projective points
    for (long ie = 1; ie < q; ++ie) {
      FqElem eps = k.element(ie);
      for (long ia = 1; ia < q; ++ia) {
        FqElem a = k.element(ia);
        if (is_square(a)) continue;
        long n = conic_count(k, eps, a);
        if (n == q + 1)
          record_pass(res);
        else
          record_fail(res, kq + " conic eps=" + eps.str() + " alpha=" + a.str() + ": " +
                               std::to_string(n) + " points");
      }
    }
  }

  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

namespace {

struct RestrictionRow {
  const char* ext;
  const char* map;
  const char* ext_case;
  const char* ext_group;
};

struct RestrictionBlock {
  long p;
  const char* d;
  const char* e1;
  const char* e2;
  const char* base_case;
  std::vector<RestrictionRow> rows;
};

// Expected base-change outcomes over even/odd unramified and totally ramified
// extensions, including a ramified quadratic with an independent uniformizer
// (the [-10,...] / [-6,...] models) where a ramified L turns unramified.
std::vector<RestrictionBlock> restriction_table() {
  std::vector<RestrictionBlock> out;

  out.push_back({5, "2", "1", "2", "P1.i",
                 {{"Unram:5^2", "Trivial", "Split", "Trivial"},
                  {"Unram:5^3", "Isomorphism", "P1.i", "Trivial"},
                  {"Eis:5:[-5,0,1]", "Trivial", "P1.i", "Trivial"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P1.i", "Trivial"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.i", "Trivial"}}});
  out.push_back({5, "2", "1", "6", "P1.ii",
                 {{"Unram:5^2", "Trivial", "Split", "Trivial"},
                  {"Unram:5^3", "Isomorphism", "P1.ii", "Z2"},
                  {"Eis:5:[-5,0,1]", "Trivial", "P1.ii", "Z2"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P1.ii", "Z2"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({5, "2", "5", "10", "P1.iii",
                 {{"Unram:5^2", "Trivial", "Split", "Trivial"},
                  {"Unram:5^3", "Isomorphism", "P1.iii", "Z2xZ2"},
                  {"Eis:5:[-5,0,1]", "Trivial", "P1.i", "Trivial"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P1.iii", "Z2xZ2"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.i", "Trivial"}}});
  out.push_back({5, "5", "1", "6", "P2.i",
                 {{"Unram:5^2", "Trivial", "P2.i", "Z2"},
                  {"Unram:5^3", "Isomorphism", "P2.i", "Z2"},
                  {"Eis:5:[-5,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P2.i", "Z2"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({5, "5", "2", "7", "P2.ii",
                 {{"Unram:5^2", "Trivial", "P2.i", "Z2"},
                  {"Unram:5^3", "Isomorphism", "P2.ii", "Z2xZ2"},
                  {"Eis:5:[-5,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P2.ii", "Z2xZ2"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({5, "5", "1", "2", "P2.iii",
                 {{"Unram:5^2", "Trivial", "P2.iii", "Z2xZ2"},
                  {"Unram:5^3", "Isomorphism", "P2.iii", "Z2xZ2"},
                  {"Eis:5:[-5,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:5:[-5,0,0,1]", "Isomorphism", "P2.iii", "Z2xZ2"},
                  {"Eis:5:[-10,0,1]", "Trivial", "P1.i", "Trivial"}}});

  out.push_back({3, "2", "1", "2", "P1.i",
                 {{"Unram:3^2", "Trivial", "Split", "Trivial"},
                  {"Unram:3^3", "Isomorphism", "P1.i", "Trivial"},
                  {"Eis:3:[-3,0,1]", "Trivial", "P1.i", "Trivial"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P1.i", "Trivial"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.i", "Trivial"}}});
  out.push_back({3, "2", "1", "4", "P1.ii",
                 {{"Unram:3^2", "Trivial", "Split", "Trivial"},
                  {"Unram:3^3", "Isomorphism", "P1.ii", "Z2"},
                  {"Eis:3:[-3,0,1]", "Trivial", "P1.ii", "Z2"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P1.ii", "Z2"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({3, "2", "3", "6", "P1.iii",
                 {{"Unram:3^2", "Trivial", "Split", "Trivial"},
                  {"Unram:3^3", "Isomorphism", "P1.iii", "Z2xZ2"},
                  {"Eis:3:[-3,0,1]", "Trivial", "P1.i", "Trivial"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P1.iii", "Z2xZ2"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.i", "Trivial"}}});
  out.push_back({3, "3", "1", "4", "P2.i",
                 {{"Unram:3^2", "Trivial", "P2.i", "Z2"},
                  {"Unram:3^3", "Isomorphism", "P2.i", "Z2"},
                  {"Eis:3:[-3,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P2.i", "Z2"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({3, "3", "2", "5", "P2.ii",
                 {{"Unram:3^2", "Trivial", "P2.i", "Z2"},
                  {"Unram:3^3", "Isomorphism", "P2.ii", "Z2xZ2"},
                  {"Eis:3:[-3,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P2.ii", "Z2xZ2"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.ii", "Z2"}}});
  out.push_back({3, "3", "1", "2", "P2.iii",
                 {{"Unram:3^2", "Trivial", "P2.iii", "Z2xZ2"},
                  {"Unram:3^3", "Isomorphism", "P2.iii", "Z2xZ2"},
                  {"Eis:3:[-3,0,1]", "Trivial", "Split", "Trivial"},
                  {"Eis:3:[-3,0,0,1]", "Isomorphism", "P2.iii", "Z2xZ2"},
                  {"Eis:3:[-6,0,1]", "Trivial", "P1.i", "Trivial"}}});

  return out;
}

}  // namespace

CheckResult check_restriction_matrix() {
  CheckResult res{"restriction-matrix"};
  auto t0 = std::chrono::steady_clock::now();

  for (const RestrictionBlock& block : restriction_table()) {
    std::string base_label = "Qp:" + std::to_string(block.p) + " d=" + block.d + " e1=" +
                             block.e1 + " e2=" + block.e2;
    try {
      LocalField K = LocalField::qp(block.p);
      ChateletInstance inst = normalize_instance(K, K.parse_element(block.d),
                                                 K.parse_element(block.e1),
                                                 K.parse_element(block.e2));
      ChowResult base = classify(inst);
      if (std::string(case_tag_name(base.case_tag)) != block.base_case) {
        record_fail(res, base_label + ": base case " + case_tag_name(base.case_tag) +
                             " != expected " + block.base_case);
        continue;
      }

      for (const RestrictionRow& row : block.rows) {
        std::string label = base_label + " -> " + row.ext;
        try {
          ExtensionDescriptor ext = make_extension(K, LocalField::parse(row.ext));
          RestrictionResult rr = restriction_behavior(inst, ext);

          std::vector<std::string> problems;
          const char* map_name =
              rr.map == RestrictionMap::Trivial ? "Trivial" : "Isomorphism";
          bool expect_trivial = (ext.n % 2 == 0) ||
                                rr.ext_instance.ext_kind == QuadExtKind::Split;
          const char* map_by_parity = expect_trivial ? "Trivial" : "Isomorphism";
          if (std::string(map_name) != row.map)
            problems.push_back(std::string("map ") + map_name + " != expected " + row.map);
          if (std::string(map_name) != map_by_parity)
            problems.push_back("map disagrees with the parity rule");
          if (std::string(case_tag_name(rr.ext_result.case_tag)) != row.ext_case)
            problems.push_back(std::string("ext case ") +
                               case_tag_name(rr.ext_result.case_tag) + " != expected " +
                               row.ext_case);
          if (std::string(chow_group_name(rr.ext_result.group)) != row.ext_group)
            problems.push_back(std::string("ext group ") +
                               chow_group_name(rr.ext_result.group) + " != expected " +
                               row.ext_group);

          if (problems.empty()) {
            record_pass(res);
          } else {
            std::string line = label + ": ";
            for (size_t i = 0; i < problems.size(); ++i)
              line += (i ? "; " : "") + problems[i];
            record_fail(res, line);
          }
        } catch (const std::exception& ex) {
          record_fail(res, label + ": exception: " + ex.what());
        }
      }
    } catch (const std::exception& ex) {
      record_fail(res, base_label + ": exception: " + ex.what());
    }
  }

  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

VerifyReport verify_suite(const std::vector<MatrixEntry>& matrix, long qmax,
                          std::optional<long> depth_override) {
  VerifyReport report;
  report.checks.push_back(check_classification_matrix(matrix, depth_override));
  report.checks.push_back(check_theta_invariants(matrix));
  report.checks.push_back(check_residue_sweeps(qmax));
  report.checks.push_back(check_restriction_matrix());
  for (const CheckResult& c : report.checks) {
    report.total_passed += c.passed;
    report.total_failed += c.failed;
  }
  return report;
}

}  // namespace chatelet
