#include "chatelet/fq.hpp"

#include <algorithm>
#include <sstream>

#include "chatelet/errors.hpp"

namespace chatelet {

namespace {

long mod_p(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long pow_mod(long base, long exp, long p) {
  long r = 1;
  base = mod_p(base, p);
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<long>;  // constant term first, coefficients in [0, p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) { return pow_mod(a, p - 2, p); }

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// a mod m, m monic
Poly poly_rem(Poly a, const Poly& m, long p) {
  trim(a);
  long dm = long(m.size()) - 1;
  while (long(a.size()) - 1 >= dm) {
    long k = long(a.size()) - 1 - dm;
    long c = a.back();
    for (long i = 0; i <= dm; ++i) a[k + i] = mod_p(a[k + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

bool divides(const Poly& div, const Poly& target, long p) {
  return poly_rem(target, div, p).empty();
}

// Monic polynomial of degree d whose coefficient tuple encodes idx
// (constant term = least significant base-p digit).
Poly monic_from_index(long idx, long d, long p) {
  Poly m(d + 1, 0);
  for (long j = 0; j < d; ++j) {
    m[j] = idx % p;
    idx /= p;
  }
  m[d] = 1;
  return m;
}

bool is_irreducible(const Poly& m, long p) {
  long f = long(m.size()) - 1;
  if (f == 1) return true;
  for (long d = 1; 2 * d <= f; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx)
      if (divides(monic_from_index(idx, d, p), m, p)) return false;
  }
  return true;
}

}  // namespace

struct FqField::Impl {
  long p, f, q;
  Poly modulus;                 // length f+1, monic
  std::vector<uint8_t> square;  // by element index; square[0] = 1 by convention

  long index_of(const std::vector<long>& coeffs) const {
    long idx = 0;
    for (long j = f - 1; j >= 0; --j) idx = idx * p + coeffs[j];
    return idx;
  }
};

FqField FqField::make(long p, long f) {
  if (p < 2 || !is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (p == 2) fail(Errc::EvenPrime, "p must be odd");
  if (f < 1) fail(Errc::PreconditionViolated, "f must be >= 1");
  if (f == 1) return make(p, 1, {0, 1});
  long count = 1;
  for (long i = 0; i < f; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    Poly m = monic_from_index(idx, f, p);
    if (is_irreducible(m, p)) return make(p, f, m);
  }
  fail(Errc::ReducibleModulus, "no irreducible polynomial found");  // unreachable
}

FqField FqField::make(long p, long f, const std::vector<long>& modulus) {
  if (p < 2 || !is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (p == 2) fail(Errc::EvenPrime, "p must be odd");
  if (f < 1) fail(Errc::PreconditionViolated, "f must be >= 1");
  if (long(modulus.size()) != f + 1)
    fail(Errc::PreconditionViolated, "modulus must have degree f");
  Poly m(modulus.size());
  for (size_t i = 0; i < modulus.size(); ++i) m[i] = mod_p(modulus[i], p);
  if (m.back() != 1) fail(Errc::PreconditionViolated, "modulus must be monic");
  if (!is_irreducible(m, p)) fail(Errc::ReducibleModulus, "modulus factors over Z/p");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->f = f;
  impl->q = 1;
  for (long i = 0; i < f; ++i) impl->q *= p;
  impl->modulus = m;

  impl->square.assign(size_t(impl->q), 0);
  impl->square[0] = 1;
  FqField k(impl);
  for (long i = 1; i < impl->q; ++i) {
    FqElem x = k.element(i);
    impl->square[size_t((x * x).index())] = 1;
  }
  return k;
}

FqField FqField::parse(const std::string& descriptor) {
  std::string s = descriptor;
  // tolerate the U+2212 minus sign
  for (std::string::size_type pos; (pos = s.find("\xe2\x88\x92")) != std::string::npos;)
    s.replace(pos, 3, "-");
  if (s.rfind("F:", 0) != 0) fail(Errc::ParseError, "expected F:... descriptor: " + descriptor);
  std::string body = s.substr(2);
  std::string head = body;
  std::string mod_part;
  auto colon = body.find(':');
  if (colon != std::string::npos) {
    head = body.substr(0, colon);
    mod_part = body.substr(colon + 1);
  }
  long p = 0, f = 1;
  auto caret = head.find('^');
  try {
    if (caret == std::string::npos) {
      p = std::stol(head);
    } else {
      p = std::stol(head.substr(0, caret));
      f = std::stol(head.substr(caret + 1));
    }
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad field descriptor: " + descriptor);
  }
  if (mod_part.empty()) return make(p, f);
  if (mod_part.size() < 2 || mod_part.front() != '[' || mod_part.back() != ']')
    fail(Errc::ParseError, "bad modulus list: " + descriptor);
  std::vector<long> mod;
  std::stringstream ss(mod_part.substr(1, mod_part.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mod.push_back(std::stol(item));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad modulus coefficient: " + item);
    }
  }
  return make(p, f, mod);
}

long FqField::p() const { return impl_->p; }
long FqField::f() const { return impl_->f; }
long FqField::q() const { return impl_->q; }
const std::vector<long>& FqField::modulus() const { return impl_->modulus; }

std::string FqField::descriptor() const {
  if (impl_->f == 1) return "F:" + std::to_string(impl_->p);
  std::string s = "F:" + std::to_string(impl_->p) + "^" + std::to_string(impl_->f) + ":[";
  for (size_t i = 0; i < impl_->modulus.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(impl_->modulus[i]);
  }
  return s + "]";
}

FqElem FqField::zero() const { return FqElem(*this, std::vector<long>(size_t(impl_->f), 0)); }
FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_coeffs(const std::vector<long>& c) const {
  if (long(c.size()) > impl_->f) {
    Poly r = poly_rem(Poly(c.begin(), c.end()), impl_->modulus, impl_->p);
    r.resize(size_t(impl_->f), 0);
    std::vector<long> out(r.begin(), r.end());
    for (auto& v : out) v = mod_p(v, impl_->p);
    return FqElem(*this, out);
  }
  std::vector<long> out(size_t(impl_->f), 0);
  for (size_t i = 0; i < c.size(); ++i) out[i] = mod_p(c[i], impl_->p);
  return FqElem(*this, out);
}

FqElem FqField::from_int(long v) const { return from_coeffs({v}); }

FqElem FqField::element(long i) const {
  if (i < 0 || i >= impl_->q) fail(Errc::PreconditionViolated, "element index out of range");
  std::vector<long> c(size_t(impl_->f), 0);
  for (long j = 0; j < impl_->f; ++j) {
    c[size_t(j)] = i % impl_->p;
    i /= impl_->p;
  }
  return FqElem(*this, c);
}

bool FqField::is_square_by_index(long i) const { return impl_->square[size_t(i)] != 0; }

bool operator==(const FqField& a, const FqField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->f == b.impl_->f &&
         a.impl_->modulus == b.impl_->modulus;
}

namespace {
void check_same_field(const FqElem& a, const FqElem& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "operands in different fields");
}
}  // namespace

long FqElem::index() const { return field_.impl_->index_of(coeffs_); }

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

FqElem FqElem::operator-() const {
  std::vector<long> c(coeffs_.size());
  long p = field_.p();
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = mod_p(-coeffs_[i], p);
  return FqElem(field_, c);
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  long p = a.field().p();
  std::vector<long> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % p;
  return FqElem(a.field_, c);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  long p = a.field().p();
  std::vector<long> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(a.coeffs_[i] - b.coeffs_[i], p);
  return FqElem(a.field_, c);
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  long p = a.field().p();
  Poly prod = poly_mul(Poly(a.coeffs_.begin(), a.coeffs_.end()),
                       Poly(b.coeffs_.begin(), b.coeffs_.end()), p);
  Poly r = poly_rem(prod, a.field().modulus(), p);
  r.resize(a.coeffs_.size(), 0);
  return FqElem(a.field_, std::vector<long>(r.begin(), r.end()));
}

FqElem FqElem::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  FqElem r = field_.one();
  FqElem base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

FqElem FqElem::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0");
  return pow(field_.q() - 2);
}

FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

bool operator==(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string FqElem::str() const {
  if (field_.f() == 1) return std::to_string(coeffs_[0]);
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs_[i]);
  }
  return s + "]";
}

bool is_square(const FqElem& a) {
  if (a.is_zero()) return true;
  return a.field().is_square_by_index(a.index());
}

int square_class(const FqElem& a) {
  if (a.is_zero()) fail(Errc::ZeroArgument, "square class of 0 is undefined");
  return is_square(a) ? 0 : 1;
}

FqElem nonsquare_rep(const FqField& k) {
  for (long i = 1; i < k.q(); ++i)
    if (!k.is_square_by_index(i)) return k.element(i);
  fail(Errc::PreconditionViolated, "no non-square exists");  // unreachable for odd q
}

}  // namespace chatelet
