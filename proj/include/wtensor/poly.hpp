#pragma once

#include <wtensor/bigint.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace wtensor {

// Dense univariate polynomial over BigInt in the formal weight "lam", i.e. an
// element of Z[lam]. Canonical form: no trailing zero coefficients, so the
// zero polynomial is the empty list and degree() of zero is -1.
class RingPoly {
 public:
  RingPoly() = default;
  RingPoly(long v) {
    if (v != 0) c_.emplace_back(v);
  }
  RingPoly(int v) : RingPoly(static_cast<long>(v)) {}
  RingPoly(const BigInt& v) {
    if (v != 0) c_.push_back(v);
  }

  // The generator lam itself.
  static RingPoly lambda() { return monomial(BigInt(1), 1); }
  static RingPoly monomial(const BigInt& coeff, int deg);
  static RingPoly from_coeffs(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  RingPoly& operator+=(const RingPoly& o);
  RingPoly& operator-=(const RingPoly& o);
  RingPoly& operator*=(const RingPoly& o);
  RingPoly operator-() const;

  friend RingPoly operator+(RingPoly a, const RingPoly& b) { return a += b; }
  friend RingPoly operator-(RingPoly a, const RingPoly& b) { return a -= b; }
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
  friend bool operator==(const RingPoly& a, const RingPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RingPoly& a, const RingPoly& b) { return !(a == b); }

  RingPoly pow(unsigned e) const;

  // Horner evaluation at an integer point, exact.
  BigInt eval(const BigInt& x) const;
  // Substitution of a polynomial for lam (used to specialize formal results).
  RingPoly subst(const RingPoly& x) const;

  // Text form "c0 + c1*lam + c2*lam^2" with zero terms omitted, "0" for zero.
  std::string str() const;
  // Inverse of str(); also accepts "-" joined terms, "lam^k" without
  // coefficient, and surrounding whitespace. Throws std::invalid_argument.
  static RingPoly parse(const std::string& text);

 private:
  void trim();
  std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const RingPoly& p);

inline RingPoly lam_pow(unsigned e) { return RingPoly::monomial(BigInt(1), static_cast<int>(e)); }

// exactmath surface op: Horner evaluation, exact.
inline BigInt poly_eval(const RingPoly& p, const BigInt& x) { return p.eval(x); }

}  // namespace wtensor
