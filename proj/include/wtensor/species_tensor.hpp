#pragma once

#include <wtensor/report.hpp>
#include <wtensor/species.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace wtensor {

// One structure of (F (x)^L G)X: a cover X = U u V, a coloring of the
// overlap U n V (colors listed for the elements of U n V in ascending label
// order), an F-structure on U and a G-structure on V.
struct Quintuple {
  LabelSet U = 0;
  LabelSet V = 0;
  std::vector<int> coloring;
  Structure phi;
  Structure gamma;
};

// Visits every quintuple in canonical order (U ascending, then the free part
// of V, then colorings, then phi, then gamma). Enumeration mode only.
void l_tensor_for_each(const SetSpecies& f, const SetSpecies& g, const LWeight& l, LabelSet x,
                       const std::function<void(const Quintuple&)>& fn);

std::vector<Quintuple> l_tensor_structures(const SetSpecies& f, const SetSpecies& g,
                                           const LWeight& l, LabelSet x);

// Structure count by genuine cover iteration: sum over covers X = U u V of
// |colors|^{|U n V|} #F(U) #G(V). Independent of the closed-form route.
BigInt l_tensor_count(const SetSpecies& f, const SetSpecies& g, const LWeight& l, LabelSet x);

// Closed-form cardinality: sum_{r+s+t=n} multinomial(n,[r,s,t]) lam^t f(r+t) g(s+t).
RingPoly l_tensor_card(const SpeciesCard& f, const SpeciesCard& g, const RingPoly& lam, int n);

// Eq-(6.1)-style n-fold tensor cardinality: every label is assigned a
// nonempty subset S of <k> (a base-(2^k - 1) digit string); weight
// lam^{sum_S (|S|-1)|A_S|}; factor i evaluated on sum_{S owns i} |A_S|.
RingPoly nfold_tensor_card(const std::vector<SpeciesCard>& fs, const RingPoly& lam, int n_labels);

// Transport of a quintuple along a label bijection.
Quintuple transport_quintuple(const SetSpecies& f, const SetSpecies& g, const LabelPerm& sigma,
                              const Quintuple& q);

// ----- Cov(A,B;X): jointly surjective injection pairs -----

// Census keyed by pullback size c = |im mu n im nu|; joint surjectivity
// forces c = a + b - n, so there is at most one nonzero key.
std::map<int, BigInt> cov_enumerate(int a, int b, int n);

void cov_for_each(int a, int b, int n,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                           int)>& fn);

// ----- Delta comultiplication (weighted multiset of pairs) -----

using WeightedPairs = std::map<std::pair<int, int>, RingPoly>;

// Delta(X) = sum over X = A + B + C of lam^{|C|} at key (|A+C|, |B+C|).
WeightedPairs delta_fam(int n_labels, const RingPoly& lam);

// Strong monoidality: Delta(X+Y) equals the componentwise-sum convolution of
// Delta(X) and Delta(Y).
Report delta_monoidal_check(int x, int y, const RingPoly& lam);

// ----- section-9 cardinality Leibniz -----

// #(F(x)G)(x+y) = sum_{r+s+t=x} multinomial lam^t #(F(r+t+-)(x)G(s+t+-))(y).
Report shift_leibniz_card_check(const SpeciesCard& f, const SpeciesCard& g, const RingPoly& lam,
                                int x, int y);

// ----- Venn bijection (Lemma 4.3) -----

// Occurrence of a label on one side of the identity
// (U u V) n W + U n V == U n (V u W) + V n W; component 0 is the first
// summand, component 1 the second.
struct VennPair {
  int label = 0;
  int lhs_component = 0;
  int rhs_component = 0;
};

struct VennBijection {
  std::vector<VennPair> pairs;
  size_t lhs_size = 0;
  size_t rhs_size = 0;
};

VennBijection venn_bijection(LabelSet u, LabelSet v, LabelSet w);

}  // namespace wtensor
