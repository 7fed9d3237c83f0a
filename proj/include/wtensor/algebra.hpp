#pragma once

#include <wtensor/matrix.hpp>

#include <string>

namespace wtensor {

// Customization points every entry algebra provides: formal lam-scaling,
// additive/multiplicative neutrals shaped like a given element, exact
// equality, and a printable form for counterexamples. Generic sequence code
// calls these unqualified and relies on ADL.

// --- Z[lam] itself ---
inline RingPoly scale(const RingPoly& lam, const RingPoly& a) { return lam * a; }
inline RingPoly zero_like(const RingPoly&) { return RingPoly(); }
inline RingPoly one_like(const RingPoly&) { return RingPoly(1); }
inline bool alg_eq(const RingPoly& a, const RingPoly& b) { return a == b; }
inline std::string to_text(const RingPoly& p) { return p.str(); }

// --- square matrices over Z[lam] (noncommutative coverage) ---
inline PolyMatrix scale(const RingPoly& lam, const PolyMatrix& a) {
  return PolyMatrix(lam * a);
}
inline PolyMatrix zero_like(const PolyMatrix& a) { return PolyMatrix::Zero(a.rows(), a.cols()); }
inline PolyMatrix one_like(const PolyMatrix& a) {
  return PolyMatrix::Identity(a.rows(), a.cols());
}
inline bool alg_eq(const PolyMatrix& a, const PolyMatrix& b) { return mat_eq(a, b); }
inline std::string to_text(const PolyMatrix& m) { return mat_str(m); }

}  // namespace wtensor
