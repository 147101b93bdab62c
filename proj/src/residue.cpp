#include "chatelet/residue.hpp"

#include <algorithm>

#include "chatelet/errors.hpp"

namespace chatelet {

bool OmegaSet::contains(const FqElem& t) const {
  return std::find(members.begin(), members.end(), t) != members.end();
}

OmegaSet omega_set(const FqField& k, const FqElem& eps1, const FqElem& eps2) {
  if (eps1.field() != k || eps2.field() != k) fail(Errc::FieldMismatch, "eps not in field");
  if (eps1.is_zero() || eps2.is_zero()) fail(Errc::ZeroEpsilon, "eps1, eps2 must be nonzero");
  OmegaSet out{k, eps1, eps2, {}};
  for (long i = 0; i < k.q(); ++i) {
    FqElem t = k.element(i);
    if (is_square(t * (t - eps1) * (t - eps2))) out.members.push_back(t);
  }
  return out;
}

ThetaBarParams ThetaBarParams::make(const FqField& k, const FqElem& eps1, const FqElem& eps2,
                                    const std::optional<FqElem>& eps12) {
  if (eps1.field() != k || eps2.field() != k) fail(Errc::FieldMismatch, "eps not in field");
  if (eps1.is_zero() || eps2.is_zero()) fail(Errc::ZeroEpsilon, "eps1, eps2 must be nonzero");
  FqElem diff = eps1 - eps2;
  if (!diff.is_zero()) {
    if (eps12 && *eps12 != diff)
      fail(Errc::PreconditionViolated, "eps12 must equal eps1 - eps2 when they differ");
    return ThetaBarParams{k, eps1, eps2, diff};
  }
  FqElem chosen = eps12 ? *eps12 : k.one();
  if (chosen.is_zero()) fail(Errc::PreconditionViolated, "eps12 must be nonzero");
  if (chosen.field() != k) fail(Errc::FieldMismatch, "eps12 not in field");
  return ThetaBarParams{k, eps1, eps2, chosen};
}

KleinElem theta_bar(const ThetaBarParams& params, const FqElem& t) {
  if (t.field() != params.field) fail(Errc::FieldMismatch, "t not in field");
  if (t.is_zero())
    return KleinElem(square_class(params.eps1 * params.eps2), square_class(-params.eps1));
  if (t == params.eps1)
    return KleinElem(square_class(params.eps1), square_class(params.eps1 * params.eps12));
  return KleinElem(square_class(t), square_class(t - params.eps1));
}

KleinSubgroup theta_bar_image(const ThetaBarParams& params) {
  OmegaSet om = omega_set(params.field, params.eps1, params.eps2);
  KleinSubgroup s = KleinSubgroup::trivial();
  for (const auto& t : om.members) s.add(theta_bar(params, t));
  return s;
}

KleinSubgroup predicted_subgroup(const FqField& k, const FqElem& eps1, const FqElem& eps2) {
  if (eps1.is_zero() || eps2.is_zero()) fail(Errc::ZeroEpsilon, "eps1, eps2 must be nonzero");
  (void)k;
  if (eps1 == eps2 && is_square(eps1)) return KleinSubgroup::zero_cross_z2();
  return KleinSubgroup::full();
}

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L6: return "L6";
    case LemmaId::L7: return "L7";
    case LemmaId::L8: return "L8";
    case LemmaId::L9: return "L9";
  }
  return "?";
}

namespace {

// smallest eta in the canonical order with eta^2 = val, eta nonzero
std::optional<FqElem> first_sqrt(const FqField& k, const FqElem& val) {
  for (long i = 1; i < k.q(); ++i) {
    FqElem x = k.element(i);
    if (x * x == val) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LemmaWitness> lemma_witness(LemmaId which, const FqField& k,
                                          const std::vector<FqElem>& params) {
  for (const auto& prm : params)
    if (prm.field() != k) fail(Errc::FieldMismatch, "parameter not in field");

  if (which == LemmaId::L6) {
    if (params.size() != 1) fail(Errc::PreconditionViolated, "L6 takes one parameter");
    const FqElem& eps = params[0];
    if (eps.is_zero()) fail(Errc::ZeroEpsilon, "eps must be nonzero");
    for (long i = 1; i < k.q(); ++i) {
      FqElem xi = k.element(i);
      FqElem v = xi * xi - eps;
      if (!v.is_zero() && !is_square(v)) return LemmaWitness{{xi}};
    }
    return std::nullopt;  // only for F_3 with eps = 1
  }

  if (params.size() != 2) fail(Errc::PreconditionViolated, "lemma takes two parameters");
  const FqElem& d1 = params[0];
  const FqElem& d2 = params[1];
  if (d1.is_zero() || d2.is_zero()) fail(Errc::PreconditionViolated, "parameters must be nonzero");
  FqElem alpha = nonsquare_rep(k);

  // Witness equations, by lemma:
  //   L7: alpha xi^2 - d1 = eta^2,   alpha xi^2 - d2 = alpha zeta^2
  //   L8:       xi^2 - d1 = alpha eta^2,   xi^2 - d2 = alpha zeta^2
  //   L9:       xi^2 - d1 = alpha eta^2,   xi^2 - d2 = alpha zeta^2
  bool lhs_scaled = (which == LemmaId::L7);
  bool first_plain = !(which == LemmaId::L8 || which == LemmaId::L9);

  switch (which) {
    case LemmaId::L7:
      if (!is_square(d1) || !is_square(d2) || d1 == d2)
        fail(Errc::PreconditionViolated, "L7 needs distinct nonzero squares");
      break;
    case LemmaId::L8: {
      if (!is_square(d1) || is_square(d2))
        fail(Errc::PreconditionViolated, "L8 needs a square and a non-square");
      FqElem diff = d1 - d2;
      if (!is_square(diff)) fail(Errc::PreconditionViolated, "L8 needs d1 - d2 a square");
      break;
    }
    case LemmaId::L9:
      if (is_square(d1) || is_square(d2) || d1 == d2)
        fail(Errc::PreconditionViolated, "L9 needs distinct non-squares");
      if (is_square(-k.one())) fail(Errc::PreconditionViolated, "L9 needs -1 a non-square");
      break;
    default: break;
  }

  for (long i = 1; i < k.q(); ++i) {
    FqElem xi = k.element(i);
    FqElem sq = xi * xi;
    FqElem lhs = lhs_scaled ? alpha * sq : sq;
    FqElem v1 = lhs - d1;
    FqElem v2 = lhs - d2;
    if (v1.is_zero() || v2.is_zero()) continue;
    FqElem target1 = first_plain ? v1 : v1 / alpha;
    FqElem target2 = v2 / alpha;
    auto eta = first_sqrt(k, target1);
    if (!eta) continue;
    auto zeta = first_sqrt(k, target2);
    if (!zeta) continue;
    return LemmaWitness{{xi, *eta, *zeta}};
  }
  return std::nullopt;
}

long conic_count(const FqField& k, const FqElem& eps, const FqElem& alpha) {
  if (eps.field() != k || alpha.field() != k) fail(Errc::FieldMismatch, "parameter not in field");
  if (eps.is_zero()) fail(Errc::ZeroEpsilon, "eps must be nonzero");
  if (is_square(alpha)) fail(Errc::PreconditionViolated, "alpha must be a non-square");

  // F(xi, eta, zeta) = xi^2 - eps zeta^2 - alpha eta^2 over P^2(k)
  auto vanishes = [&](const FqElem& xi, const FqElem& eta, const FqElem& zeta) {
    return (xi * xi - eps * (zeta * zeta) - alpha * (eta * eta)).is_zero();
  };
  long count = 0;
  FqElem one = k.one();
  for (long a = 0; a < k.q(); ++a)
    for (long b = 0; b < k.q(); ++b)
      if (vanishes(one, k.element(a), k.element(b))) ++count;  // [1 : a : b]
  for (long b = 0; b < k.q(); ++b)
    if (vanishes(k.zero(), one, k.element(b))) ++count;  // [0 : 1 : b]
  if (vanishes(k.zero(), k.zero(), one)) ++count;        // [0 : 0 : 1]
  return count;
}

}  // namespace chatelet
