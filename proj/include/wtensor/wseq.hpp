#pragma once

#include <wtensor/algebra.hpp>
#include <wtensor/counts.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wtensor {

// Truncated sequence f(0), ..., f(N-1) with entries in an algebra A — the
// finite model of A^N from the weighted-Hurwitz construction. The truncation
// is chosen so every identity below is exact: the Hurwitz product at index n
// reads inputs only at indices <= n, derivations shrink the truncation by
// one, and comparisons run over the common valid prefix.
template <class A>
class WSeq {
 public:
  WSeq() = default;
  explicit WSeq(std::vector<A> entries) : e_(std::move(entries)) {}

  static WSeq constant(size_t n, const A& value) { return WSeq(std::vector<A>(n, value)); }

  size_t trunc() const { return e_.size(); }
  const A& operator()(size_t n) const { return e_.at(n); }
  A& operator()(size_t n) { return e_.at(n); }
  const std::vector<A>& entries() const { return e_; }

  friend bool operator==(const WSeq& a, const WSeq& b) {
    if (a.trunc() != b.trunc()) return false;
    for (size_t i = 0; i < a.trunc(); ++i)
      if (!alg_eq(a.e_[i], b.e_[i])) return false;
    return true;
  }
  friend bool operator!=(const WSeq& a, const WSeq& b) { return !(a == b); }

 private:
  std::vector<A> e_;
};

template <class A>
WSeq<A> truncate(const WSeq<A>& f, size_t n) {
  if (n > f.trunc()) throw std::invalid_argument("truncate: extending, not truncating");
  return WSeq<A>(std::vector<A>(f.entries().begin(), f.entries().begin() + n));
}

// Index of the first entry where the common prefixes differ, or -1 if the
// sequences agree on min(trunc(f), trunc(g)).
template <class A>
long first_prefix_diff(const WSeq<A>& f, const WSeq<A>& g) {
  size_t n = std::min(f.trunc(), g.trunc());
  for (size_t i = 0; i < n; ++i)
    if (!alg_eq(f(i), g(i))) return static_cast<long>(i);
  return -1;
}

template <class A>
bool prefix_eq(const WSeq<A>& f, const WSeq<A>& g) {
  return first_prefix_diff(f, g) < 0;
}

// The lam-weighted Hurwitz product with an arbitrary bilinear multiplication
// on entries: out(n) = sum_{r+s+t=n} multinomial(n,[r,s,t]) lam^t mul(f(r+t), g(s+t)).
template <class A, class Mul>
WSeq<A> hurwitz_mul_with(const WSeq<A>& f, const WSeq<A>& g, const RingPoly& lam, Mul&& mul) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("hurwitz_mul: trunc mismatch");
  const long n_max = static_cast<long>(f.trunc());
  std::vector<A> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 0; n < n_max; ++n) {
    A acc = zero_like(f(static_cast<size_t>(n)));
    for (long r = 0; r <= n; ++r) {
      for (long t = 0; r + t <= n; ++t) {
        const long s = n - r - t;
        RingPoly c = RingPoly(multinomial(n, {r, s, t})) * lam.pow(static_cast<unsigned>(t));
        acc = acc + scale(c, mul(f(static_cast<size_t>(r + t)), g(static_cast<size_t>(s + t))));
      }
    }
    out.push_back(std::move(acc));
  }
  return WSeq<A>(std::move(out));
}

template <class A>
WSeq<A> hurwitz_mul(const WSeq<A>& f, const WSeq<A>& g, const RingPoly& lam) {
  return hurwitz_mul_with(f, g, lam, [](const A& a, const A& b) { return a * b; });
}

template <class A>
WSeq<A> pointwise_mul(const WSeq<A>& f, const WSeq<A>& g) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("pointwise_mul: trunc mismatch");
  std::vector<A> out;
  out.reserve(f.trunc());
  for (size_t n = 0; n < f.trunc(); ++n) out.push_back(f(n) * g(n));
  return WSeq<A>(std::move(out));
}

template <class A>
WSeq<A> seq_add(const WSeq<A>& f, const WSeq<A>& g) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("seq_add: trunc mismatch");
  std::vector<A> out;
  out.reserve(f.trunc());
  for (size_t n = 0; n < f.trunc(); ++n) out.push_back(f(n) + g(n));
  return WSeq<A>(std::move(out));
}

template <class A>
WSeq<A> seq_scale(const RingPoly& lam, const WSeq<A>& f) {
  std::vector<A> out;
  out.reserve(f.trunc());
  for (size_t n = 0; n < f.trunc(); ++n) out.push_back(scale(lam, f(n)));
  return WSeq<A>(std::move(out));
}

// WSeq<A> is itself an entry algebra (for nested sequences and for running
// the derivation / Rota-Baxter checks with A^N as the carrier), so it
// provides the same customization points the scalar algebras do.
template <class A>
WSeq<A> operator+(const WSeq<A>& f, const WSeq<A>& g) {
  return seq_add(f, g);
}

template <class A>
WSeq<A> operator*(const WSeq<A>& f, const WSeq<A>& g) {
  return pointwise_mul(f, g);
}

template <class A>
WSeq<A> operator-(const WSeq<A>& f, const WSeq<A>& g) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("seq subtract: trunc mismatch");
  std::vector<A> out;
  out.reserve(f.trunc());
  for (size_t n = 0; n < f.trunc(); ++n) out.push_back(f(n) - g(n));
  return WSeq<A>(std::move(out));
}

template <class A>
WSeq<A> scale(const RingPoly& lam, const WSeq<A>& f) {
  return seq_scale(lam, f);
}

template <class A>
WSeq<A> zero_like(const WSeq<A>& f) {
  if (f.trunc() == 0) return f;
  return WSeq<A>::constant(f.trunc(), zero_like(f(0)));
}

template <class A>
bool alg_eq(const WSeq<A>& a, const WSeq<A>& b) {
  return a == b;
}

// d(f)(n) = f(n+1); truncation shrinks by one.
template <class A>
WSeq<A> shift_derivation(const WSeq<A>& f) {
  if (f.trunc() == 0) throw std::invalid_argument("shift_derivation: empty sequence");
  return WSeq<A>(std::vector<A>(f.entries().begin() + 1, f.entries().end()));
}

// d(f)(n) = f(n+1) - f(n); truncation shrinks by one.
template <class A>
WSeq<A> difference_derivation(const WSeq<A>& f) {
  if (f.trunc() == 0) throw std::invalid_argument("difference_derivation: empty sequence");
  std::vector<A> out;
  out.reserve(f.trunc() - 1);
  for (size_t n = 0; n + 1 < f.trunc(); ++n) out.push_back(f(n + 1) - f(n));
  return WSeq<A>(std::move(out));
}

// P(f)(n) = sum_{i<n} f(i); P(f)(0) = 0. Same truncation.
template <class A>
WSeq<A> partial_sums(const WSeq<A>& f) {
  std::vector<A> out;
  out.reserve(f.trunc());
  if (f.trunc() == 0) return WSeq<A>(std::move(out));
  A acc = zero_like(f(0));
  for (size_t n = 0; n < f.trunc(); ++n) {
    out.push_back(acc);
    acc = acc + f(n);
  }
  return WSeq<A>(std::move(out));
}

// Lift of a base Rota-Baxter operator to sequences: out(0) = baseP(f(0)),
// out(n) = f(n-1). Keeps the truncation (an endomorphism of A^N).
template <class A, class Endo>
WSeq<A> lifted_rb(const WSeq<A>& f, Endo&& baseP) {
  if (f.trunc() == 0) return f;
  std::vector<A> out;
  out.reserve(f.trunc());
  out.push_back(baseP(f(0)));
  for (size_t n = 1; n < f.trunc(); ++n) out.push_back(f(n - 1));
  return WSeq<A>(std::move(out));
}

// d*(a)(n) = d^n(a): the coaction companion of a derivation.
template <class A, class Endo>
WSeq<A> d_star(const A& a, Endo&& d, size_t n_entries) {
  std::vector<A> out;
  out.reserve(n_entries);
  A cur = a;
  for (size_t n = 0; n < n_entries; ++n) {
    out.push_back(cur);
    if (n + 1 < n_entries) cur = d(cur);
  }
  return WSeq<A>(std::move(out));
}

// a <> b = P(a) b + a P(b) + lam a b; associative whenever P is a
// lam-weighted Rota-Baxter operator.
template <class A, class Endo>
A diamond_mul(const A& a, const A& b, Endo&& P, const RingPoly& lam) {
  return P(a) * b + a * P(b) + scale(lam, a * b);
}

// Expands delta(x)^n = (x + y + lam x y)^n exactly in two commuting
// indeterminates and pairs coefficients against f and g — an independent
// route to the Hurwitz product through the bialgebra comultiplication.
template <class A>
WSeq<A> convolution_via_bialgebra(const WSeq<A>& f, const WSeq<A>& g, const RingPoly& lam) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("convolution: trunc mismatch");
  const size_t n_max = f.trunc();
  std::vector<A> out;
  out.reserve(n_max);
  // grid[i][j] = coefficient of x^i y^j in (x + y + lam x y)^n
  std::vector<std::vector<RingPoly>> grid(n_max + 1, std::vector<RingPoly>(n_max + 1));
  if (n_max > 0) grid[0][0] = RingPoly(1);
  for (size_t n = 0; n < n_max; ++n) {
    A acc = zero_like(f(n));
    for (size_t i = 0; i <= n; ++i)
      for (size_t j = 0; j <= n; ++j)
        if (!grid[i][j].is_zero()) acc = acc + scale(grid[i][j], f(i) * g(j));
    out.push_back(std::move(acc));
    if (n + 1 < n_max) {
      std::vector<std::vector<RingPoly>> next(n_max + 1, std::vector<RingPoly>(n_max + 1));
      for (size_t i = 0; i <= n + 1; ++i)
        for (size_t j = 0; j <= n + 1; ++j) {
          RingPoly c;
          if (i > 0) c += grid[i - 1][j];
          if (j > 0) c += grid[i][j - 1];
          if (i > 0 && j > 0) c += lam * grid[i - 1][j - 1];
          next[i][j] = std::move(c);
        }
      grid = std::move(next);
    }
  }
  return WSeq<A>(std::move(out));
}

// ----- built-in Z[lam]-sequence generators -----
WSeq<RingPoly> seq_ones(size_t n);
WSeq<RingPoly> seq_zeros(size_t n);
WSeq<RingPoly> seq_unit(size_t n);     // (1, 0, 0, ...)
WSeq<RingPoly> seq_squares(size_t n);  // n^2
WSeq<RingPoly> seq_iota(size_t n);     // 0, 1, 2, ...

template <class A>
std::string to_text(const WSeq<A>& f) {
  std::string out = "(";
  for (size_t i = 0; i < f.trunc(); ++i) {
    if (i) out += ", ";
    out += to_text(f(i));
  }
  out += ")";
  return out;
}

}  // namespace wtensor
