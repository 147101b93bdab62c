#include "chatelet/local_field.hpp"

#include <algorithm>
#include <sstream>

#include "chatelet/errors.hpp"

namespace chatelet {

long Valuation::value() const {
  if (infinite_) fail(Errc::PreconditionViolated, "valuation of 0 has no finite value");
  return v_;
}

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long vp_mpz(const mpz_class& z, long p) {
  // z != 0
  mpz_class rest;
  return long(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

long vp_mpq(const mpq_class& q, long p) {
  return vp_mpz(q.get_num(), p) - vp_mpz(q.get_den(), p);
}

// residue of a p-integral rational mod p, in [0, p)
long residue_mod_p(const mpq_class& q, long p) {
  mpz_class pm(p);
  mpz_class num = q.get_num() % pm;
  if (num < 0) num += pm;
  mpz_class den = q.get_den() % pm;
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()) == 0)
    fail(Errc::PreconditionViolated, "denominator not invertible mod p");
  mpz_class r = num * dinv % pm;
  return r.get_si();
}

using QPoly = std::vector<mpq_class>;  // constant term first

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  qtrim(c);
  return c;
}

// remainder of a modulo monic m
QPoly qpoly_rem(QPoly a, const QPoly& m) {
  qtrim(a);
  long dm = long(m.size()) - 1;
  while (long(a.size()) - 1 >= dm) {
    mpq_class c = a.back();
    long k = long(a.size()) - 1 - dm;
    for (long i = 0; i <= dm; ++i) a[size_t(k + i)] -= c * m[size_t(i)];
    qtrim(a);
  }
  return a;
}

std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  qtrim(a);
  QPoly q;
  long db = long(b.size()) - 1;
  if (long(a.size()) - 1 < db) return {q, a};
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  mpq_class lead_inv = 1 / b.back();
  while (long(a.size()) - 1 >= db && !a.empty()) {
    mpq_class c = a.back() * lead_inv;
    long k = long(a.size()) - 1 - db;
    q[size_t(k)] = c;
    for (long i = 0; i <= db; ++i) a[size_t(k + i)] -= c * b[size_t(i)];
    qtrim(a);
  }
  return {q, a};
}

// inverse of a modulo monic irreducible m (deg a < deg m, a nonzero)
QPoly qpoly_inv_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a;
  qtrim(r1);
  QPoly t0, t1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r2] = qpoly_divmod(r0, r1);
    QPoly t2 = t0;
    QPoly qt = qpoly_mul(q, t1);
    if (t2.size() < qt.size()) t2.resize(qt.size(), mpq_class(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    qtrim(t2);
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd, a nonzero constant
  if (r0.size() != 1) fail(Errc::DivisionByZero, "element not invertible (reducible modulus?)");
  mpq_class scale = 1 / r0[0];
  for (auto& c : t0) c *= scale;
  return qpoly_rem(t0, m);
}

std::string mpq_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

mpq_class parse_mpq(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  // tolerate the U+2212 minus sign
  for (std::string::size_type pos; (pos = s.find("\xe2\x88\x92")) != std::string::npos;)
    s.replace(pos, 3, "-");
  if (s.empty()) fail(Errc::ParseError, "empty number");
  try {
    mpq_class q(s);
    if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator: " + raw);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational: " + raw);
  }
}

}  // namespace

struct LocalField::Impl {
  LocalFieldKind kind;
  long p, f, e, n;
  FqField residue;
  QPoly min_poly;  // length n+1, monic; {0,1} for degree 1
  QPoly unif;      // uniformizer coefficients
};

LocalField LocalField::qp(long p) {
  if (!is_prime_long(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (p == 2) fail(Errc::EvenPrime, "p must be odd");
  auto impl = std::make_shared<Impl>(Impl{LocalFieldKind::Qp, p, 1, 1, 1, FqField::make(p, 1),
                                          QPoly{mpq_class(0), mpq_class(1)}, QPoly{}});
  impl->unif = {mpq_class(p)};
  return LocalField(impl);
}

LocalField LocalField::unramified(long p, long f) {
  FqField k = FqField::make(p, f);
  return unramified(p, f, k.modulus());
}

LocalField LocalField::unramified(long p, long f, const std::vector<long>& modulus) {
  if (f < 2) fail(Errc::PreconditionViolated, "unramified extension needs f >= 2");
  FqField k = FqField::make(p, f, modulus);
  QPoly mp(k.modulus().size());
  for (size_t i = 0; i < mp.size(); ++i) mp[i] = mpq_class(k.modulus()[i]);
  auto impl = std::make_shared<Impl>(Impl{LocalFieldKind::Unramified, p, f, 1, f, k, mp, QPoly{}});
  impl->unif = {mpq_class(p)};
  return LocalField(impl);
}

LocalField LocalField::eisenstein(long p, const std::vector<mpq_class>& poly) {
  if (!is_prime_long(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (p == 2) fail(Errc::EvenPrime, "p must be odd");
  long e = long(poly.size()) - 1;
  if (e < 2) fail(Errc::NotEisenstein, "degree must be >= 2");
  if (poly.back() != 1) fail(Errc::NotEisenstein, "leading coefficient must be 1");
  if (poly[0] == 0 || vp_mpq(poly[0], p) != 1)
    fail(Errc::NotEisenstein, "constant term must have valuation exactly 1");
  for (long i = 1; i < e; ++i)
    if (poly[size_t(i)] != 0 && vp_mpq(poly[size_t(i)], p) < 1)
      fail(Errc::NotEisenstein, "middle coefficients must have valuation >= 1");

  auto impl = std::make_shared<Impl>(
      Impl{LocalFieldKind::Eisenstein, p, 1, e, e, FqField::make(p, 1), poly, QPoly{}});
  impl->unif = {mpq_class(0), mpq_class(1)};
  return LocalField(impl);
}

LocalField LocalField::parse(const std::string& descriptor) {
  std::string s = descriptor;
  for (std::string::size_type pos; (pos = s.find("\xe2\x88\x92")) != std::string::npos;)
    s.replace(pos, 3, "-");
  auto first_colon = s.find(':');
  if (first_colon == std::string::npos)
    fail(Errc::ParseError, "bad field descriptor: " + descriptor);
  std::string tag = s.substr(0, first_colon);
  std::string rest = s.substr(first_colon + 1);
  try {
    if (tag == "Qp") return qp(std::stol(rest));
    if (tag == "Unram") {
      std::string head = rest;
      std::string mod_part;
      auto colon = rest.find(':');
      if (colon != std::string::npos) {
        head = rest.substr(0, colon);
        mod_part = rest.substr(colon + 1);
      }
      auto caret = head.find('^');
      if (caret == std::string::npos)
        fail(Errc::ParseError, "Unram descriptor needs p^f: " + descriptor);
      long p = std::stol(head.substr(0, caret));
      long f = std::stol(head.substr(caret + 1));
      if (mod_part.empty()) return unramified(p, f);
      if (mod_part.size() < 2 || mod_part.front() != '[' || mod_part.back() != ']')
        fail(Errc::ParseError, "bad modulus list: " + descriptor);
      std::vector<long> mod;
      std::stringstream ss(mod_part.substr(1, mod_part.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) mod.push_back(std::stol(item));
      return unramified(p, f, mod);
    }
    if (tag == "Eis") {
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        fail(Errc::ParseError, "Eis descriptor needs a polynomial: " + descriptor);
      long p = std::stol(rest.substr(0, colon));
      std::string poly_part = rest.substr(colon + 1);
      if (poly_part.size() < 2 || poly_part.front() != '[' || poly_part.back() != ']')
        fail(Errc::ParseError, "bad polynomial list: " + descriptor);
      std::vector<mpq_class> poly;
      std::stringstream ss(poly_part.substr(1, poly_part.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) poly.push_back(parse_mpq(item));
      return eisenstein(p, poly);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad field descriptor: " + descriptor);
  }
  fail(Errc::ParseError, "unknown field kind: " + tag);
}

LocalFieldKind LocalField::kind() const { return impl_->kind; }
long LocalField::p() const { return impl_->p; }
long LocalField::f() const { return impl_->f; }
long LocalField::e() const { return impl_->e; }
const FqField& LocalField::residue_field() const { return impl_->residue; }

std::string LocalField::descriptor() const {
  switch (impl_->kind) {
    case LocalFieldKind::Qp:
      return "Qp:" + std::to_string(impl_->p);
    case LocalFieldKind::Unramified: {
      std::string s = "Unram:" + std::to_string(impl_->p) + "^" + std::to_string(impl_->f) + ":[";
      const auto& m = impl_->residue.modulus();
      for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
      }
      return s + "]";
    }
    case LocalFieldKind::Eisenstein: {
      std::string s = "Eis:" + std::to_string(impl_->p) + ":[";
      for (size_t i = 0; i < impl_->min_poly.size(); ++i) {
        if (i) s += ",";
        s += mpq_str(impl_->min_poly[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

LocalElem LocalField::zero() const {
  return LocalElem(*this, std::vector<mpq_class>(size_t(impl_->n), mpq_class(0)));
}

LocalElem LocalField::one() const { return from_rational(mpq_class(1)); }

LocalElem LocalField::from_rational(const mpq_class& a) const {
  std::vector<mpq_class> c(size_t(impl_->n), mpq_class(0));
  c[0] = a;
  return LocalElem(*this, c);
}

LocalElem LocalField::from_int(long a) const { return from_rational(mpq_class(a)); }

LocalElem LocalField::from_coeffs(const std::vector<mpq_class>& c) const {
  if (long(c.size()) > impl_->n) fail(Errc::PreconditionViolated, "too many coefficients");
  std::vector<mpq_class> out(size_t(impl_->n), mpq_class(0));
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return LocalElem(*this, out);
}

LocalElem LocalField::generator() const {
  if (impl_->n == 1) fail(Errc::PreconditionViolated, "prime field has no generator");
  std::vector<mpq_class> c(size_t(impl_->n), mpq_class(0));
  c[1] = 1;
  return LocalElem(*this, c);
}

LocalElem LocalField::uniformizer() const {
  std::vector<mpq_class> c(size_t(impl_->n), mpq_class(0));
  for (size_t i = 0; i < impl_->unif.size(); ++i) c[i] = impl_->unif[i];
  return LocalElem(*this, c);
}

LocalElem LocalField::lift(const FqElem& a) const {
  if (a.field() != impl_->residue) fail(Errc::FieldMismatch, "residue element of another field");
  std::vector<mpq_class> c(size_t(impl_->n), mpq_class(0));
  if (impl_->kind == LocalFieldKind::Unramified) {
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = mpq_class(a.coeffs()[i]);
  } else {
    c[0] = mpq_class(a.coeffs()[0]);
  }
  return LocalElem(*this, c);
}

LocalElem LocalField::parse_element(const std::string& raw) const {
  std::string s;
  for (char ch : raw)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(Errc::ParseError, "bad coefficient list: " + raw);
    std::vector<mpq_class> c;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_mpq(item));
    return from_coeffs(c);
  }
  return from_rational(parse_mpq(s));
}

bool operator==(const LocalField& a, const LocalField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p &&
         a.impl_->f == b.impl_->f && a.impl_->e == b.impl_->e &&
         a.impl_->min_poly == b.impl_->min_poly;
}

namespace {
void check_same_field(const LocalElem& a, const LocalElem& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "operands in different fields");
}
}  // namespace

bool LocalElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

LocalElem LocalElem::operator-() const {
  std::vector<mpq_class> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return LocalElem(field_, c);
}

LocalElem operator+(const LocalElem& a, const LocalElem& b) {
  check_same_field(a, b);
  std::vector<mpq_class> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return LocalElem(a.field_, c);
}

LocalElem operator-(const LocalElem& a, const LocalElem& b) {
  check_same_field(a, b);
  std::vector<mpq_class> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return LocalElem(a.field_, c);
}

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  check_same_field(a, b);
  long n = long(a.coeffs_.size());
  if (n == 1) return LocalElem(a.field_, {a.coeffs_[0] * b.coeffs_[0]});
  QPoly prod = qpoly_mul(a.coeffs_, b.coeffs_);
  QPoly r = qpoly_rem(prod, a.field_.impl_->min_poly);
  r.resize(size_t(n), mpq_class(0));
  return LocalElem(a.field_, std::move(r));
}

LocalElem LocalElem::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0");
  if (coeffs_.size() == 1) return LocalElem(field_, {1 / coeffs_[0]});
  QPoly a = coeffs_;
  QPoly r = qpoly_inv_mod(a, field_.impl_->min_poly);
  r.resize(coeffs_.size(), mpq_class(0));
  return LocalElem(field_, std::move(r));
}

LocalElem operator/(const LocalElem& a, const LocalElem& b) { return a * b.inv(); }

LocalElem LocalElem::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  LocalElem r = field_.one();
  LocalElem base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool operator==(const LocalElem& a, const LocalElem& b) {
  check_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string LocalElem::str() const {
  if (coeffs_.size() == 1) return mpq_str(coeffs_[0]);
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += mpq_str(coeffs_[i]);
  }
  return s + "]";
}

Valuation valuation(const LocalElem& x) {
  const LocalField& K = x.field();
  bool graded = K.kind() == LocalFieldKind::Eisenstein;
  long p = K.p(), e = K.e();
  bool found = false;
  long best = 0;
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    const mpq_class& c = x.coeffs()[i];
    if (c == 0) continue;
    long v = vp_mpq(c, p);
    long term = graded ? e * v + long(i) : v;
    if (!found || term < best) {
      best = term;
      found = true;
    }
  }
  if (!found) return Valuation::infinite();
  return Valuation::of(best);
}

FqElem residue_of_unit(const LocalElem& x) {
  const LocalField& K = x.field();
  if (valuation(x) != Valuation::of(0)) fail(Errc::PreconditionViolated, "residue needs a unit");
  if (K.kind() == LocalFieldKind::Unramified) {
    std::vector<long> c(x.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = (x.coeffs()[i] == 0) ? 0 : residue_mod_p(x.coeffs()[i], K.p());
    return K.residue_field().from_coeffs(c);
  }
  return K.residue_field().from_int(residue_mod_p(x.coeffs()[0], K.p()));
}

FqElem omega(const LocalElem& pi, const LocalElem& x) {
  if (pi.field() != x.field()) fail(Errc::FieldMismatch, "pi and x in different fields");
  if (valuation(pi) != Valuation::of(1))
    fail(Errc::PreconditionViolated, "pi must have valuation 1");
  if (x.is_zero()) return x.field().residue_field().zero();
  long v = valuation(x).value();
  return residue_of_unit(x * pi.pow(-v));
}

QuadExtKind quad_ext_kind(const LocalElem& d) {
  if (d.is_zero()) fail(Errc::ZeroArgument, "d must be nonzero");
  Valuation v = valuation(d);
  if (v.is_odd()) return QuadExtKind::Ramified;
  FqElem u = omega(d.field().uniformizer(), d);
  return is_square(u) ? QuadExtKind::Split : QuadExtKind::Unramified;
}

int hilbert_symbol(const LocalElem& x, const LocalElem& y) {
  if (x.is_zero() || y.is_zero()) fail(Errc::ZeroArgument, "hilbert symbol needs nonzero arguments");
  check_same_field(x, y);
  long a = valuation(x).value();
  long b = valuation(y).value();
  LocalElem pi = x.field().uniformizer();
  int neg_one = square_class(-x.field().residue_field().one());
  int cu = square_class(residue_of_unit(x * pi.pow(-a)));
  int cw = square_class(residue_of_unit(y * pi.pow(-b)));
  int bit = ((a & 1) & (b & 1)) * neg_one + (b & 1) * cu + (a & 1) * cw;
  return (bit % 2 == 0) ? 1 : -1;
}

int h_map(const LocalElem& d, const LocalElem& x) {
  if (quad_ext_kind(d) == QuadExtKind::Split)
    fail(Errc::SplitExtension, "h is undefined for split d");
  if (x.is_zero()) fail(Errc::ZeroArgument, "h(0) is undefined");
  return hilbert_symbol(x, d) == 1 ? 0 : 1;
}

LocalElem adapted_uniformizer(const LocalElem& d) {
  if (quad_ext_kind(d) != QuadExtKind::Ramified)
    fail(Errc::NotRamified, "adapted uniformizer needs a ramified extension");
  const LocalField& K = d.field();
  LocalElem pi = K.uniformizer();
  if (h_map(d, pi) == 0) return pi;
  LocalElem u = K.lift(nonsquare_rep(K.residue_field()));
  LocalElem candidate = u * pi;
  if (h_map(d, candidate) != 0)
    fail(Errc::PreconditionViolated, "no adapted uniformizer (internal error)");
  return candidate;
}

namespace {

// rational x/y with x ≡ a*y (mod m), |x|, |y| <= sqrt(m/2); verified by the caller
std::optional<mpq_class> rational_reconstruct(const mpz_class& a_in, const mpz_class& m) {
  mpz_class a = a_in % m;
  if (a < 0) a += m;
  if (a == 0) return mpq_class(0);
  mpz_class bound = sqrt((m - 1) / 2);
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpq_class out(r1, abs(t1));
  if (t1 < 0) out = -out;
  out.canonicalize();
  return out;
}

// value of a p-free-denominator rational mod p^k, as an integer in [0, p^k)
std::optional<mpz_class> mpq_mod_pk(const mpq_class& c, const mpz_class& pk) {
  mpz_class den = c.get_den() % pk;
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r = c.get_num() % pk * dinv % pk;
  if (r < 0) r += pk;
  return r;
}

// rational square root of a nonnegative perfect square
std::optional<mpq_class> exact_rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
  mpz_class n = sqrt(q.get_num());
  mpz_class d = sqrt(q.get_den());
  return mpq_class(n, d);
}

}  // namespace

std::optional<LocalElem> try_exact_sqrt(const LocalElem& x) {
  const LocalField& K = x.field();
  if (x.is_zero()) return K.zero();
  Valuation v = valuation(x);
  if (v.is_odd()) return std::nullopt;
  long t = v.value() / 2;
  LocalElem pi = K.uniformizer();
  LocalElem u = x * pi.pow(-2 * t);

  if (K.degree() == 1) {
    auto r = exact_rational_sqrt(u.coeffs()[0]);
    if (!r) return std::nullopt;
    return K.from_rational(*r) * pi.pow(t);
  }

  FqElem r0 = residue_of_unit(u);
  if (!is_square(r0)) return std::nullopt;
  const FqField& k = K.residue_field();
  FqElem rbar = k.zero();
  for (long i = 1; i < k.q(); ++i) {
    FqElem cand = k.element(i);
    if (cand * cand == r0) {
      rbar = cand;
      break;
    }
  }

  LocalElem a = K.lift(rbar);
  LocalElem half = K.from_rational(mpq_class(1, 2));
  bool graded = K.kind() == LocalFieldKind::Eisenstein;
  long e = K.e();
  long prec = 1;  // v(a^2 - u) >= prec
  for (int step = 0; step < 9; ++step) {
    if ((a * a) == u) return a * pi.pow(t);
    // reconstruct small rational coefficients from the current approximation
    if (prec >= 8) {
      std::vector<mpq_class> rec(a.coeffs().size(), mpq_class(0));
      bool ok = true;
      for (size_t i = 0; i < a.coeffs().size() && ok; ++i) {
        // known p-digit precision of coefficient i given v(a - sqrt) >= prec
        long ki = graded ? (prec - long(i) + e - 1) / e : prec;
        if (ki <= 0) {
          rec[i] = a.coeffs()[i];
          continue;
        }
        mpz_class pk = 1;
        for (long j = 0; j < ki; ++j) pk *= K.p();
        auto ai = mpq_mod_pk(a.coeffs()[i], pk);
        if (!ai) {
          ok = false;
          break;
        }
        auto c = rational_reconstruct(*ai, pk);
        if (!c) {
          ok = false;
          break;
        }
        rec[i] = *c;
      }
      if (ok) {
        LocalElem cand = K.from_coeffs(rec);
        if (cand * cand == u) return cand * pi.pow(t);
      }
    }
    a = (a + u / a) * half;
    prec *= 2;
    if (prec > 512) break;
  }
  return std::nullopt;
}

LocalElem embed(const LocalField& target, const LocalElem& x) {
  if (x.field() == target) return x;
  if (x.field().degree() != 1 || x.field().p() != target.p())
    fail(Errc::UnsupportedTower, "can only embed Q_p elements into extensions of Q_p");
  return target.from_rational(x.coeffs()[0]);
}

}  // namespace chatelet
