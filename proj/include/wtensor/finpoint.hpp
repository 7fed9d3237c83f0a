#pragma once

#include <wtensor/algebra.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace wtensor {

// The pointwise unital commutative algebra Z[lam]^m: the finite witness
// standing in for the paper's function-space examples. Entries are
// polynomials so that formal-lam operators (e.g. lam-scaled partial sums)
// stay inside the algebra.
class FinPoint {
 public:
  FinPoint() = default;
  explicit FinPoint(PolyVector v) : v_(std::move(v)) {}

  static FinPoint constant(Eigen::Index m, const RingPoly& c) {
    FinPoint out;
    out.v_ = PolyVector::Constant(m, c);
    return out;
  }
  static FinPoint from_ints(const std::vector<long>& xs) {
    FinPoint out;
    out.v_.resize(static_cast<Eigen::Index>(xs.size()));
    for (size_t i = 0; i < xs.size(); ++i) out.v_[static_cast<Eigen::Index>(i)] = RingPoly(xs[i]);
    return out;
  }

  Eigen::Index size() const { return v_.size(); }
  const RingPoly& operator[](Eigen::Index i) const { return v_[i]; }
  RingPoly& operator[](Eigen::Index i) { return v_[i]; }
  const PolyVector& vec() const { return v_; }

  friend FinPoint operator+(const FinPoint& a, const FinPoint& b) {
    check_same(a, b);
    return FinPoint(PolyVector(a.v_ + b.v_));
  }
  friend FinPoint operator-(const FinPoint& a, const FinPoint& b) {
    check_same(a, b);
    return FinPoint(PolyVector(a.v_ - b.v_));
  }
  friend FinPoint operator*(const FinPoint& a, const FinPoint& b) {
    check_same(a, b);
    return FinPoint(PolyVector(a.v_.cwiseProduct(b.v_)));
  }
  friend bool operator==(const FinPoint& a, const FinPoint& b) { return mat_eq(a.v_, b.v_); }
  friend bool operator!=(const FinPoint& a, const FinPoint& b) { return !(a == b); }

 private:
  static void check_same(const FinPoint& a, const FinPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("FinPoint: size mismatch");
  }
  PolyVector v_;
};

inline FinPoint scale(const RingPoly& lam, const FinPoint& a) {
  return FinPoint(PolyVector(lam * a.vec()));
}
inline FinPoint zero_like(const FinPoint& a) {
  return FinPoint(PolyVector(PolyVector::Zero(a.size())));
}
inline FinPoint one_like(const FinPoint& a) { return FinPoint::constant(a.size(), RingPoly(1)); }
inline bool alg_eq(const FinPoint& a, const FinPoint& b) { return a == b; }
inline std::string to_text(const FinPoint& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i].str();
  }
  os << "]";
  return os.str();
}

// d(x)_i = x_{i+1 mod m} - x_i: the cyclic stand-in for the difference
// operator; a 1-weighted derivation of the pointwise algebra.
inline FinPoint cyclic_difference(const FinPoint& x) {
  const Eigen::Index m = x.size();
  PolyVector out(m);
  for (Eigen::Index i = 0; i < m; ++i) out[i] = x[(i + 1) % m] - x[i];
  return FinPoint(std::move(out));
}

// P(x)_i = sum_{j<i} x_j: finite strict partial sums; a 1-weighted
// Rota-Baxter operator of the pointwise algebra.
inline FinPoint strict_partial_sums(const FinPoint& x) {
  const Eigen::Index m = x.size();
  PolyVector out(m);
  RingPoly acc;
  for (Eigen::Index i = 0; i < m; ++i) {
    out[i] = acc;
    acc += x[i];
  }
  return FinPoint(std::move(out));
}

}  // namespace wtensor
