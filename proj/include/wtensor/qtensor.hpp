#pragma once

#include <wtensor/qlattice.hpp>
#include <wtensor/report.hpp>
#include <wtensor/wseq.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace wtensor {

// Dimension sequence of a charade: n -> dim F(F_q^n).
using DimSeq = std::vector<long>;

WSeq<RingPoly> seq_from_dims(const DimSeq& d);

// Eq. (11.1) with the dimension-power weight L = lam^dim: the sum over
// subspace chains V <= U <= F_q^n of lam^{dim U - dim V} f(dim U) g(n - dim V),
// by brute-force chain enumeration over the lattice. The polynomial-entry
// overload lets the tensor be iterated (intermediate values live in Z[lam]).
RingPoly q_tensor_dim(const std::vector<RingPoly>& f, const std::vector<RingPoly>& g,
                      const RingPoly& lam, const SubspaceLattice& lat);
RingPoly q_tensor_dim(const DimSeq& f, const DimSeq& g, const RingPoly& lam,
                      const SubspaceLattice& lat);

// Lattices of F_q^0 .. F_q^{n_max} (the towers the sequence-level tensor runs over).
std::vector<SubspaceLattice> lattice_tower(const QParam& q, int n_max);

// (f (x) g)(n) for n = 0 .. lats.size()-1, where lats[n] is the lattice of F_q^n.
std::vector<RingPoly> q_tensor_seq(const std::vector<RingPoly>& f, const std::vector<RingPoly>& g,
                                   const RingPoly& lam, const std::vector<SubspaceLattice>& lats);

// q-weighted Hurwitz product:
// out(n) = sum_{r+s+t=n} [n; r,s,t]_q lam^t f(r+t) g(s+t).
// Defined for any integer q >= 2; primality plays no role here.
template <class A>
WSeq<A> q_hurwitz_mul(const WSeq<A>& f, const WSeq<A>& g, const RingPoly& lam, const QParam& q) {
  if (f.trunc() != g.trunc()) throw std::invalid_argument("q_hurwitz_mul: trunc mismatch");
  const long n_max = static_cast<long>(f.trunc());
  std::vector<A> out;
  out.reserve(f.trunc());
  for (long n = 0; n < n_max; ++n) {
    A acc = zero_like(f(static_cast<size_t>(n)));
    for (long r = 0; r <= n; ++r)
      for (long t = 0; r + t <= n; ++t) {
        const long s = n - r - t;
        RingPoly c = RingPoly(gauss_multinomial(n, {r, s, t}, q)) * lam.pow(static_cast<unsigned>(t));
        acc = acc + scale(c, f(static_cast<size_t>(r + t)) * g(static_cast<size_t>(s + t)));
      }
    out.push_back(std::move(acc));
  }
  return WSeq<A>(std::move(out));
}

// ----- modified k-flags -----

// A flag (0 = U_0 <= U_1 <= ... <= U_k = X, V_0 .. V_{k-1} with V_i <= U_i),
// stored as indices into one SubspaceLattice. V_0 is forced to the zero space.
struct MFlg {
  int k = 0;
  std::vector<size_t> U;  // size k+1
  std::vector<size_t> V;  // size k
};

bool mflg_valid(const MFlg& m, const SubspaceLattice& lat);

// Exhaustive deterministic enumeration. Budget: k <= 3 and lat.n() <= 3.
std::vector<MFlg> mflg_enumerate(int k, const SubspaceLattice& lat);

BigInt mflg_count(int k, const SubspaceLattice& lat);

// Weight of one flag with factor dimension-sequences fs[0..k-1]:
// lam^{sum_{i=1}^{k-1} dim(U_i/V_i)} * prod_{i=1}^{k} fs[i-1](dim(U_i/V_{i-1})).
RingPoly mflg_weight(const MFlg& m, const std::vector<DimSeq>& fs, const RingPoly& lam,
                     const SubspaceLattice& lat);
// Total over mFlg_k(X); equals the left-bracketed iterate of the binary tensor.
RingPoly mflg_weighted_card(int k, const std::vector<DimSeq>& fs, const RingPoly& lam,
                            const SubspaceLattice& lat);

// Dimensions of the seven spaces A_S attached to a 3-flag by the
// short-exact-sequence diagrams (X decomposes as their direct sum).
struct Flag3Dims {
  int a1 = 0, a2 = 0, a3 = 0, a12 = 0, a13 = 0, a23 = 0, a123 = 0;
  int sum() const { return a1 + a2 + a3 + a12 + a13 + a23 + a123; }
};

Flag3Dims flag3_block_dims(const MFlg& m, const SubspaceLattice& lat);

// ----- short pre-exact sequences -----

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
BigInt gl_order(int n, const QParam& q);

// Census of Spes(A,B;X) = {(f,g) : f mono F_q^a -> X, g epi X -> F_q^b,
// ker g <= im f}, keyed by dim im(g o f). Maps are enumerated as full
// matrices with mono/epi decided by rank; when the pair count exceeds the
// pair-loop budget, pairs are grouped by (image of f, kernel of g) and the
// key is computed from one representative pair per group (it depends only on
// the group). Budget: q in {2,3}, a, b, n <= 3.
std::map<int, BigInt> spes_census(const SubspaceLattice& lat, int a, int b);

// Independent chain-formula route: sum over V <= U with dim U = a,
// dim V = n - b of |GL_a| * |GL_b| at key a - dim V.
std::map<int, BigInt> spes_census_formula(const SubspaceLattice& lat, int a, int b);

// ----- Conjecture evidence -----

// Associativity and unit evidence for the q-weighted Hurwitz product on
// random integer sequences, with a lam = 0 control on the same triples and,
// for prime q <= 3, a structural cross-check that the subspace-chain tensor
// reproduces both bracketings (so the two routes agree on any defect).
// Outcomes are recorded as found; a failure is a finding, never masked.
Report conjecture_evidence(const RingPoly& lam, long q, int n_trunc, int trials,
                           std::uint64_t seed);

}  // namespace wtensor
