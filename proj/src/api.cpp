#include "chatelet/api.hpp"

#include <algorithm>
#include <utility>

#include "chatelet/errors.hpp"
#include "chatelet/oracle.hpp"
#include "chatelet/residue.hpp"

namespace chatelet {

using nlohmann::json;

json klein_to_json(const KleinElem& g) { return json::array({int(g.b1), int(g.b2)}); }

json subgroup_to_json(const KleinSubgroup& s) {
  json out = json::array();
  for (const KleinElem& g : s.members()) out.push_back(klein_to_json(g));
  return out;
}

json chow_result_to_json(const ChowResult& r) {
  json out;
  out["group"] = chow_group_name(r.group);
  out["case"] = case_tag_name(r.case_tag);
  out["reduction"] = r.reduction ? json(reduction_type_name(*r.reduction)) : json(nullptr);
  out["image"] = r.predicted_image ? subgroup_to_json(*r.predicted_image) : json(nullptr);
  return out;
}

namespace {

ChateletInstance parse_and_normalize(const std::string& field, const std::string& d,
                                     const std::string& e1, const std::string& e2) {
  LocalField K = LocalField::parse(field);
  return normalize_instance(K, K.parse_element(d), K.parse_element(e1), K.parse_element(e2));
}

}  // namespace

json api_classify(const std::string& field, const std::string& d, const std::string& e1,
                  const std::string& e2) {
  ChateletInstance inst = parse_and_normalize(field, d, e1, e2);
  ChowResult r = classify(inst);
  json out = chow_result_to_json(r);
  out["normalization_log"] = inst.normalization_log;
  return out;
}

json api_theta(const std::string& field, const std::string& d, const std::string& e1,
               const std::string& e2, const std::string& x) {
  LocalField K = LocalField::parse(field);
  LocalElem dd = K.parse_element(d);
  LocalElem a = K.parse_element(e1);
  LocalElem b = K.parse_element(e2);
  XCoord xc = (x == "inf" || x == "infinity" || x == "oo") ? XCoord::inf()
                                                           : XCoord::at(K.parse_element(x));
  json out;
  out["field"] = K.descriptor();
  out["x"] = xc.str();
  try {
    KleinElem th = theta_raw(dd, a, b, xc);
    out["member"] = true;
    out["theta"] = klein_to_json(th);
  } catch (const Error& ex) {
    if (ex.code() != Errc::NotInFiberImage) throw;
    out["member"] = false;
    out["theta"] = nullptr;
  }
  return out;
}

json api_oracle(const std::string& field, const std::string& d, const std::string& e1,
                const std::string& e2, std::optional<long> depth) {
  ChateletInstance inst = parse_and_normalize(field, d, e1, e2);
  ChowResult r = classify(inst);

  EnumerationPlan plan = EnumerationPlan::defaults(inst);
  if (depth) plan.depth = *depth;

  long members = 0;
  KleinSubgroup img = KleinSubgroup::trivial();
  if (inst.ext_kind != QuadExtKind::Split)
    enumerate_N(plan, [&](const EnumeratedPoint& pt) {
      members += 1;
      img.add(pt.theta);
    });

  json out;
  out["field"] = inst.field.descriptor();
  out["d"] = inst.d.str();
  out["e1"] = inst.e1.str();
  out["e2"] = inst.e2.str();
  out["depth"] = plan.depth;
  out["members"] = members;
  out["image"] = subgroup_to_json(img);
  out["cardinality"] = img.size();
  out["group"] = chow_group_name(r.group);
  out["case"] = case_tag_name(r.case_tag);
  out["match"] = img.size() == chow_group_order(r.group);
  out["normalization_log"] = inst.normalization_log;
  return out;
}

namespace {

std::vector<std::pair<long, long>> lemma_prime_powers(long qmax) {
  std::vector<std::pair<long, long>> out;  // (p, f), ascending q
  std::vector<std::pair<long, std::pair<long, long>>> keyed;
  for (long p = 3; p <= qmax; p += 2) {
    bool prime = true;
    for (long t = 3; t * t <= p; t += 2)
      if (p % t == 0) prime = false;
    if (!prime) continue;
    long q = p, f = 1;
    while (q <= qmax) {
      keyed.push_back({q, {p, f}});
      if (q > qmax / p) break;
      q *= p;
      f += 1;
    }
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

json params_to_json(const std::vector<FqElem>& ps) {
  json out = json::array();
  for (const FqElem& e : ps) out.push_back(e.str());
  return out;
}

json lemma_record(const char* lemma, long q, const std::vector<FqElem>& params,
                  const std::optional<LemmaWitness>& w, json expected, json computed) {
  json rec;
  rec["lemma"] = lemma;
  rec["q"] = q;
  rec["params"] = params_to_json(params);
  rec["witness"] = w ? params_to_json(w->values) : json(nullptr);
  rec["expected"] = expected;
  rec["computed"] = computed;
  rec["ok"] = (expected == computed);
  return rec;
}

}  // namespace

json api_lemmas(long qmax) {
  json records = json::array();
  for (auto [p, f] : lemma_prime_powers(qmax)) {
    FqField k = FqField::make(p, f);
    long q = k.q();
    FqElem alpha = nonsquare_rep(k);

    for (long i = 1; i < q; ++i) {
      FqElem eps = k.element(i);
      auto w = lemma_witness(LemmaId::L6, k, {eps});
      bool expected = !(q == 3 && i == 1);
      records.push_back(lemma_record("L6", q, {eps}, w, expected, w.has_value()));
    }

    for (long i1 = 1; i1 < q; ++i1) {
      FqElem s1 = k.element(i1);
      if (!is_square(s1)) continue;
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem s2 = k.element(i2);
        if (!is_square(s2) || s1 == s2) continue;
        auto w = lemma_witness(LemmaId::L7, k, {s1, s2});
        records.push_back(lemma_record("L7", q, {s1, s2}, w, true, w.has_value()));
      }
    }

    for (long i1 = 1; i1 < q; ++i1) {
      FqElem s1 = k.element(i1);
      if (!is_square(s1)) continue;
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem n2 = k.element(i2);
        if (is_square(n2) || !is_square(s1 - n2)) continue;
        auto w = lemma_witness(LemmaId::L8, k, {s1, n2});
        records.push_back(lemma_record("L8", q, {s1, n2}, w, true, w.has_value()));
      }
    }

    if (!is_square(-k.one())) {
      for (long i1 = 1; i1 < q; ++i1) {
        FqElem n1 = k.element(i1);
        if (is_square(n1)) continue;
        for (long i2 = 1; i2 < q; ++i2) {
          FqElem n2 = k.element(i2);
          if (is_square(n2) || n1 == n2) continue;
          auto w = lemma_witness(LemmaId::L9, k, {n1, n2});
          records.push_back(lemma_record("L9", q, {n1, n2}, w, true, w.has_value()));
        }
      }
    }

    for (long ie = 1; ie < q; ++ie) {
      FqElem eps = k.element(ie);
      for (long ia = 1; ia < q; ++ia) {
        FqElem a = k.element(ia);
        if (is_square(a)) continue;
        long n = conic_count(k, eps, a);
        records.push_back(lemma_record("conic", q, {eps, a}, std::nullopt, q + 1, n));
      }
    }

    for (long i1 = 1; i1 < q; ++i1) {
      FqElem eps1 = k.element(i1);
      for (long i2 = 1; i2 < q; ++i2) {
        FqElem eps2 = k.element(i2);
        json pred = subgroup_to_json(predicted_subgroup(k, eps1, eps2));
        if (i1 == i2) {
          for (long i12 = 1; i12 < q; ++i12) {
            FqElem eps12 = k.element(i12);
            ThetaBarParams params = ThetaBarParams::make(k, eps1, eps2, eps12);
            records.push_back(lemma_record("image", q, {eps1, eps2, eps12}, std::nullopt, pred,
                                           subgroup_to_json(theta_bar_image(params))));
          }
        } else {
          ThetaBarParams params = ThetaBarParams::make(k, eps1, eps2);
          records.push_back(lemma_record("image", q, {eps1, eps2, params.eps12}, std::nullopt,
                                         pred, subgroup_to_json(theta_bar_image(params))));
        }
      }
    }
  }

  long failing = 0;
  for (const json& rec : records)
    if (!rec.at("ok").get<bool>()) failing += 1;

  json out;
  out["qmax"] = qmax;
  out["records"] = std::move(records);
  out["failing"] = failing;
  out["ok"] = failing == 0;
  return out;
}

json api_restrict(const std::string& field, const std::string& d, const std::string& e1,
                  const std::string& e2, const std::string& ext) {
  LocalField K = LocalField::parse(field);
  ChateletInstance inst = normalize_instance(K, K.parse_element(d), K.parse_element(e1),
                                             K.parse_element(e2));
  ExtensionDescriptor ed = make_extension(K, LocalField::parse(ext));
  RestrictionResult rr = restriction_behavior(inst, ed);

  json base = chow_result_to_json(rr.base_result);
  base["normalization_log"] = inst.normalization_log;
  json extj = chow_result_to_json(rr.ext_result);
  extj["normalization_log"] = rr.ext_instance.normalization_log;

  json out;
  out["base"] = std::move(base);
  out["ext_field"] = ed.model.descriptor();
  out["degree"] = ed.n;
  out["step"] = ed.kind == ExtStepKind::UnramifiedStep ? "unramified" : "ramified";
  out["map"] = rr.map == RestrictionMap::Trivial ? "Trivial" : "Isomorphism";
  out["ext"] = std::move(extj);
  return out;
}

json api_delpezzo(const std::string& field, const std::string& d, const std::string& a,
                  const std::string& c) {
  LocalField K = LocalField::parse(field);
  LocalElem aa = K.parse_element(a);
  LocalElem cc = K.parse_element(c);
  auto [e1, e2] = delpezzo_to_chatelet(aa, cc);

  ChateletInstance inst = normalize_instance(K, K.parse_element(d), e1, e2);
  ChowResult r = classify(inst);
  json cls = chow_result_to_json(r);
  cls["normalization_log"] = inst.normalization_log;

  json out;
  out["a"] = aa.str();
  out["c"] = cc.str();
  out["e1"] = e1.str();
  out["e2"] = e2.str();
  out["classification"] = std::move(cls);
  return out;
}

json api_verify(const std::optional<std::string>& matrix_json, long qmax,
                std::optional<long> depth) {
  std::vector<MatrixEntry> matrix = matrix_json ? matrix_from_json(*matrix_json)
                                                : default_matrix();
  VerifyReport report = verify_suite(matrix, qmax, depth);

  json checks = json::array();
  json flat = json::array();
  for (const CheckResult& c : report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["failed"] = c.failed;
    cj["failures"] = c.failures;
    checks.push_back(std::move(cj));
    for (const std::string& line : c.failures) flat.push_back(c.name + ": " + line);
  }

  json out;
  out["checks"] = std::move(checks);
  out["failures"] = std::move(flat);
  out["counts"] = json{{"passed", report.total_passed}, {"failed", report.total_failed}};
  out["ok"] = report.ok();
  return out;
}

std::vector<MatrixEntry> matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    fail(Errc::ParseError, std::string("matrix: ") + ex.what());
  }
  if (!j.is_array()) fail(Errc::ParseError, "matrix: expected a JSON array");

  std::vector<MatrixEntry> out;
  for (const json& row : j) {
    if (!row.is_object()) fail(Errc::ParseError, "matrix: expected an object per entry");
    MatrixEntry e;
    try {
      e.field = row.at("field").get<std::string>();
      e.d = row.at("d").get<std::string>();
      e.e1 = row.at("e1").get<std::string>();
      e.e2 = row.at("e2").get<std::string>();
      if (row.contains("expected_case")) e.expected_case = row.at("expected_case").get<std::string>();
      if (row.contains("expected_group"))
        e.expected_group = row.at("expected_group").get<std::string>();
    } catch (const json::exception& ex) {
      fail(Errc::ParseError, std::string("matrix entry: ") + ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace chatelet
