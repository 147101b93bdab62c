#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chatelet {

class FqElem;

// Finite field F_q, q = p^f with p an odd prime, as Z/p[t] modulo a monic
// irreducible polynomial of degree f.  Immutable after construction and
// shared by its elements.
class FqField {
 public:
  // Auto-selected modulus: the first monic irreducible polynomial of degree f
  // in the canonical enumeration order (coefficient tuples (c_{f-1},...,c_0),
  // most significant first).
  static FqField make(long p, long f = 1);
  // Explicit modulus, constant term first, length f+1, monic.
  static FqField make(long p, long f, const std::vector<long>& modulus);
  // "F:p", "F:p^f", or "F:p^f:[c0,c1,...,1]".
  static FqField parse(const std::string& descriptor);

  long p() const;
  long f() const;
  long q() const;  // p^f
  const std::vector<long>& modulus() const;  // constant term first, length f+1
  std::string descriptor() const;

  FqElem zero() const;
  FqElem one() const;
  FqElem from_coeffs(const std::vector<long>& c) const;  // any length <= f, reduced mod p
  FqElem from_int(long v) const;
  // i-th element in the canonical enumeration order, 0 <= i < q.
  FqElem element(long i) const;

  bool is_square_by_index(long i) const;

  friend bool operator==(const FqField& a, const FqField& b);
  friend bool operator!=(const FqField& a, const FqField& b) { return !(a == b); }

 private:
  struct Impl;
  explicit FqField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class FqElem;
};

class FqElem {
 public:
  const FqField& field() const { return field_; }
  const std::vector<long>& coeffs() const { return coeffs_; }  // length f, in [0, p)
  long index() const;  // position in the canonical enumeration
  bool is_zero() const;

  FqElem operator-() const;
  FqElem inv() const;           // DivisionByZero on 0
  FqElem pow(long k) const;     // k may be negative for nonzero elements

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  std::string str() const;  // "[c0,...,c_{f-1}]", or "c0" for prime fields

 private:
  FqElem(FqField field, std::vector<long> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  FqField field_;
  std::vector<long> coeffs_;
  friend class FqField;
};

// 0 counts as a square (convention used throughout the residue layer).
bool is_square(const FqElem& a);
// 0 for nonzero squares, 1 for non-squares; ZeroArgument on 0.
int square_class(const FqElem& a);
// First non-square in the canonical enumeration order.
FqElem nonsquare_rep(const FqField& k);

}  // namespace chatelet
