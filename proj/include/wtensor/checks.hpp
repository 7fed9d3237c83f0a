#pragma once

#include <wtensor/finpoint.hpp>
#include <wtensor/report.hpp>
#include <wtensor/rng.hpp>
#include <wtensor/wseq.hpp>

#include <functional>
#include <string>
#include <vector>

namespace wtensor {

// A named endomorphism of an algebra (the d and P of the derivation /
// Rota-Baxter checks). Additivity is a checkable invariant, not an
// assumption: see check_additivity.
template <class A>
struct Endo {
  std::string name;
  std::function<A(const A&)> fn;
  A operator()(const A& a) const { return fn(a); }
};

template <class A>
Endo<A> zero_endo() {
  return {"zero", [](const A& a) { return zero_like(a); }};
}

template <class A>
Report check_additivity(const Endo<A>& d, const std::vector<A>& samples) {
  Report rep;
  rep.op = "hurwitz.check_additivity";
  rep.params = {{"endo", d.name}, {"samples", samples.size()}};
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = 0; j < samples.size(); ++j) {
      A lhs = d(samples[i] + samples[j]);
      A rhs = d(samples[i]) + d(samples[j]);
      ++rep.checks;
      if (!alg_eq(lhs, rhs)) {
        rep.fail({{"i", i},
                  {"j", j},
                  {"a", to_text(samples[i])},
                  {"b", to_text(samples[j])},
                  {"lhs", to_text(lhs)},
                  {"rhs", to_text(rhs)}});
        return rep;
      }
    }
  return rep;
}

// d(ab) = d(a) b + a d(b) + lam d(a) d(b) on all ordered sample pairs, plus
// d(1) = 0 when a unit is supplied. First counterexample (lowest pair index)
// is recorded.
template <class A, class Mul>
Report check_weighted_derivation(Mul&& mul, const Endo<A>& d, const RingPoly& lam,
                                 const std::vector<A>& samples, const A* unit = nullptr) {
  Report rep;
  rep.op = "hurwitz.check_weighted_derivation";
  rep.params = {{"d", d.name}, {"lambda", lam.str()}, {"samples", samples.size()}};
  if (unit) {
    A du = d(*unit);
    ++rep.checks;
    if (!alg_eq(du, zero_like(*unit)))
      rep.fail({{"law", "d(1) = 0"}, {"d(1)", to_text(du)}});
  }
  for (size_t i = 0; i < samples.size() && rep.pass; ++i)
    for (size_t j = 0; j < samples.size() && rep.pass; ++j) {
      const A& a = samples[i];
      const A& b = samples[j];
      A lhs = d(mul(a, b));
      A rhs = mul(d(a), b) + mul(a, d(b)) + scale(lam, mul(d(a), d(b)));
      ++rep.checks;
      if (!alg_eq(lhs, rhs))
        rep.fail({{"i", i},
                  {"j", j},
                  {"a", to_text(a)},
                  {"b", to_text(b)},
                  {"lhs d(ab)", to_text(lhs)},
                  {"rhs d(a)b+ad(b)+lam d(a)d(b)", to_text(rhs)}});
    }
  return rep;
}

// P(a) P(b) = P(P(a) b + a P(b) + lam a b) on all ordered sample pairs.
template <class A, class Mul>
Report check_rb_operator(Mul&& mul, const Endo<A>& P, const RingPoly& lam,
                         const std::vector<A>& samples) {
  Report rep;
  rep.op = "hurwitz.check_rb_operator";
  rep.params = {{"P", P.name}, {"lambda", lam.str()}, {"samples", samples.size()}};
  for (size_t i = 0; i < samples.size() && rep.pass; ++i)
    for (size_t j = 0; j < samples.size() && rep.pass; ++j) {
      const A& a = samples[i];
      const A& b = samples[j];
      A lhs = mul(P(a), P(b));
      A rhs = P(mul(P(a), b) + mul(a, P(b)) + scale(lam, mul(a, b)));
      ++rep.checks;
      if (!alg_eq(lhs, rhs))
        rep.fail({{"i", i},
                  {"j", j},
                  {"a", to_text(a)},
                  {"b", to_text(b)},
                  {"lhs P(a)P(b)", to_text(lhs)},
                  {"rhs P(P(a)b+aP(b)+lam ab)", to_text(rhs)}});
    }
  return rep;
}

// Generalized Leibniz rule for the shift derivation of (A^N, .^lam):
// shift^n(f.g) = sum_{r+s+t=n} multinomial(n,[r,s,t]) lam^t
//                  (shift^{r+t} f) .^lam (shift^{s+t} g)
// compared on the common valid prefix for every n < trunc.
template <class A>
Report check_shift_generalized_leibniz(const WSeq<A>& f, const WSeq<A>& g, const RingPoly& lam) {
  Report rep;
  rep.op = "hurwitz.shift_generalized_leibniz";
  rep.params = {{"trunc", f.trunc()}, {"lambda", lam.str()}};
  const long n_max = static_cast<long>(f.trunc());
  WSeq<A> prod = hurwitz_mul(f, g, lam);
  for (long n = 0; n < n_max && rep.pass; ++n) {
    const size_t len = static_cast<size_t>(n_max - n);
    WSeq<A> lhs = prod;
    for (long k = 0; k < n; ++k) lhs = shift_derivation(lhs);
    WSeq<A> rhs = WSeq<A>::constant(len, zero_like(f(0)));
    for (long r = 0; r <= n; ++r)
      for (long t = 0; r + t <= n; ++t) {
        const long s = n - r - t;
        WSeq<A> fs = f, gs = g;
        for (long k = 0; k < r + t; ++k) fs = shift_derivation(fs);
        for (long k = 0; k < s + t; ++k) gs = shift_derivation(gs);
        RingPoly c = RingPoly(multinomial(n, {r, s, t})) * lam.pow(static_cast<unsigned>(t));
        rhs = seq_add(rhs, seq_scale(c, hurwitz_mul(truncate(fs, len), truncate(gs, len), lam)));
      }
    ++rep.checks;
    long bad = first_prefix_diff(lhs, rhs);
    if (bad >= 0)
      rep.fail({{"n", n},
                {"index", bad},
                {"lhs", to_text(lhs(static_cast<size_t>(bad)))},
                {"rhs", to_text(rhs(static_cast<size_t>(bad)))}});
  }
  return rep;
}

// The K(J(A,p)^op) carrier: sequences with p(a_{n+1}) = a_n. Random members
// are built by applying baseP downward from a random tail; the check
// verifies closure under the diamond-Hurwitz product, under shift, and under
// entrywise p, plus shift(p(a)) = a.
Report k_subalgebra_check(const Endo<FinPoint>& baseP, const RingPoly& lam, int m, int n_trunc,
                          int trials, std::uint64_t seed);

// Helper shared by the K checks: p(a_{n+1}) = a_n for all n.
template <class A, class EndoFn>
long k_membership_defect(const WSeq<A>& a, EndoFn&& baseP) {
  for (size_t n = 0; n + 1 < a.trunc(); ++n)
    if (!alg_eq(baseP(a(n + 1)), a(n))) return static_cast<long>(n);
  return -1;
}

}  // namespace wtensor
