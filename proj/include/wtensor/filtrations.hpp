#pragma once

#include <wtensor/poly.hpp>
#include <wtensor/species.hpp>

#include <array>
#include <functional>
#include <vector>

namespace wtensor {

// Modified k-filtration: a chain 0 = U_0 <= U_1 <= ... <= U_k = X together
// with V_i <= U_i for 0 <= i < k (V_0 is forced empty).
struct MFil {
  int k = 0;
  std::vector<LabelSet> U;  // size k+1
  std::vector<LabelSet> V;  // size k
};

bool mfil_valid(const MFil& m);

void mfil_for_each(int k, LabelSet x, const std::function<void(const MFil&)>& fn);

std::vector<MFil> mfil_enumerate(int k, LabelSet x);

BigInt mfil_count(int k, LabelSet x);

// Weight of one filtration and the weighted total:
// lam^{sum_{i=1}^{k-1} |U_i \ V_i|} * prod_{i=1}^{k} f_i(|U_i \ V_{i-1}|).
RingPoly mfil_weight(const MFil& m, const std::vector<SpeciesCard>& fs, const RingPoly& lam);
RingPoly mfil_weighted_card(int k, LabelSet x, const std::vector<SpeciesCard>& fs,
                            const RingPoly& lam);

// Partition of X into at most 7 blocks indexed by nonempty S subset of
// {1,2,3} (bit i-1 of the mask = membership of i in S).
struct Partition7 {
  LabelSet X = 0;
  std::array<LabelSet, 8> block{};  // block[1..7]; block[0] unused
};

bool partition7_valid(const Partition7& p);

// The explicit mutually inverse maps between 3-flags and 7-block partitions.
Partition7 flag3_to_partition(const MFil& m);
MFil partition_to_flag3(const Partition7& p);

}  // namespace wtensor
