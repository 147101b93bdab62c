#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chatelet/fq.hpp"

namespace chatelet {

// Valuation value: an integer or +infinity (valuation of 0).
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation of(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;  // PreconditionViolated when infinite

  bool is_even() const { return !infinite_ && v_ % 2 == 0; }
  bool is_odd() const { return !infinite_ && (v_ % 2 + 2) % 2 == 1; }

  friend bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend bool operator<(Valuation a, Valuation b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(Valuation a, Valuation b) { return b < a; }
  friend bool operator<=(Valuation a, Valuation b) { return !(b < a); }
  friend bool operator>=(Valuation a, Valuation b) { return !(a < b); }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

enum class LocalFieldKind { Qp, Unramified, Eisenstein };
enum class QuadExtKind { Split, Unramified, Ramified };

class LocalElem;

// Finite extension of Q_p for odd p, restricted to simple towers: either
// unramified (degree f, residue field F_{p^f}) or totally ramified (Eisenstein
// polynomial of degree e, residue field F_p).  Elements are exact: vectors of
// rationals in the power basis of the generator.
class LocalField {
 public:
  static LocalField qp(long p);
  static LocalField unramified(long p, long f);  // auto residue modulus
  static LocalField unramified(long p, long f, const std::vector<long>& modulus);
  // poly: constant term first, length e+1, monic Eisenstein over Z_p.
  static LocalField eisenstein(long p, const std::vector<mpq_class>& poly);
  // "Qp:5" | "Unram:5^2" | "Unram:5^2:[c0,...,1]" | "Eis:3:[-3,0,1]".
  static LocalField parse(const std::string& descriptor);

  LocalFieldKind kind() const;
  long p() const;
  long f() const;
  long e() const;
  long degree() const { return f() * e(); }
  const FqField& residue_field() const;
  std::string descriptor() const;

  LocalElem zero() const;
  LocalElem one() const;
  LocalElem from_rational(const mpq_class& a) const;
  LocalElem from_int(long a) const;
  LocalElem from_coeffs(const std::vector<mpq_class>& c) const;  // length <= degree
  LocalElem generator() const;  // t (unramified) or the Eisenstein root g
  // Canonical uniformizer: p for Qp/unramified, the generator for Eisenstein.
  LocalElem uniformizer() const;
  // Canonical lift of a residue element (integer coefficients in [0, p)).
  LocalElem lift(const FqElem& a) const;
  // "a/b" (rational) or "[c0,c1,...]" with rational entries.
  LocalElem parse_element(const std::string& text) const;

  friend bool operator==(const LocalField& a, const LocalField& b);
  friend bool operator!=(const LocalField& a, const LocalField& b) { return !(a == b); }

 private:
  struct Impl;
  explicit LocalField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class LocalElem;
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
};

class LocalElem {
 public:
  const LocalField& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  LocalElem operator-() const;
  LocalElem inv() const;       // DivisionByZero on 0
  LocalElem pow(long k) const; // negative k needs a nonzero element

  friend LocalElem operator+(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator-(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator/(const LocalElem& a, const LocalElem& b);
  friend bool operator==(const LocalElem& a, const LocalElem& b);
  friend bool operator!=(const LocalElem& a, const LocalElem& b) { return !(a == b); }

  std::string str() const;  // "a/b" for degree 1, "[c0,...,c_{n-1}]" otherwise

 private:
  LocalElem(LocalField field, std::vector<mpq_class> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  LocalField field_;
  std::vector<mpq_class> coeffs_;
  friend class LocalField;
};

// Normalized valuation (v(uniformizer) = 1); +infinity for 0.
Valuation valuation(const LocalElem& x);

// Residue of a unit (valuation 0) in the residue field.
FqElem residue_of_unit(const LocalElem& x);

// omega(x) = residue of x / pi^{v(x)}; omega(0) = 0.  pi must have
// valuation 1.
FqElem omega(const LocalElem& pi, const LocalElem& x);

// Type of K(sqrt(d)) over K: Split (d a square), Unramified, or Ramified.
// d must be nonzero.
QuadExtKind quad_ext_kind(const LocalElem& d);

// Tame Hilbert symbol (x, y) in {+1, -1}: +1 iff the residue of
// (-1)^{v(x)v(y)} x^{v(y)} y^{-v(x)} is a square.  x, y nonzero.
int hilbert_symbol(const LocalElem& x, const LocalElem& y);

// Norm-group character of L = K(sqrt(d)): h(x) = 0 iff x is a norm from L.
// SplitExtension when d is a square.
int h_map(const LocalElem& d, const LocalElem& x);

// A uniformizer pi with h(pi) = 0, for ramified K(sqrt(d)): the canonical
// uniformizer or its twist by the canonical non-square lift.  NotRamified
// otherwise.
LocalElem adapted_uniformizer(const LocalElem& d);

// Exact square root when x is a perfect square with a small-height root:
// strips even uniformizer powers, Hensel-lifts from the residue square root,
// reconstructs small rational coefficients and verifies the square exactly.
std::optional<LocalElem> try_exact_sqrt(const LocalElem& x);

// Embed a rational-valued element of Q_p into an extension of Q_p with the
// same p (UnsupportedTower otherwise).
LocalElem embed(const LocalField& target, const LocalElem& x);

}  // namespace chatelet
