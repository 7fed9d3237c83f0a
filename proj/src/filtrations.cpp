#include <wtensor/filtrations.hpp>

#include <stdexcept>

namespace wtensor {

bool mfil_valid(const MFil& m) {
  if (m.k < 1) return false;
  if (m.U.size() != static_cast<size_t>(m.k) + 1 || m.V.size() != static_cast<size_t>(m.k))
    return false;
  if (m.U.front() != 0) return false;
  for (int i = 0; i < m.k; ++i)
    if ((m.U[static_cast<size_t>(i)] & ~m.U[static_cast<size_t>(i) + 1]) != 0) return false;
  for (int i = 0; i < m.k; ++i)
    if ((m.V[static_cast<size_t>(i)] & ~m.U[static_cast<size_t>(i)]) != 0) return false;
  return true;
}

void mfil_for_each(int k, LabelSet x, const std::function<void(const MFil&)>& fn) {
  if (k < 1 || k > 4 || set_size(x) > 6)
    throw std::length_error("mfil: budget is k <= 4, |X| <= 6");
  MFil m;
  m.k = k;
  m.U.assign(static_cast<size_t>(k) + 1, 0);
  m.U.back() = x;
  m.V.assign(static_cast<size_t>(k), 0);
  // Choose U_1 <= ... <= U_{k-1} ascending, then each V_i <= U_i (V_0 = 0).
  std::function<void(int)> pick_v = [&](int i) {
    if (i == k) {
      fn(m);
      return;
    }
    for (LabelSet v : submasks_sorted(m.U[static_cast<size_t>(i)])) {
      m.V[static_cast<size_t>(i)] = v;
      pick_v(i + 1);
    }
  };
  std::function<void(int)> pick_u = [&](int i) {
    if (i == k) {
      pick_v(1);
      return;
    }
    const LabelSet lo = m.U[static_cast<size_t>(i) - 1];
    for (LabelSet w : submasks_sorted(x & ~lo)) {
      m.U[static_cast<size_t>(i)] = lo | w;
      pick_u(i + 1);
    }
  };
  pick_u(1);
}

std::vector<MFil> mfil_enumerate(int k, LabelSet x) {
  constexpr size_t kCap = 2'000'000;
  std::vector<MFil> out;
  mfil_for_each(k, x, [&](const MFil& m) {
    if (out.size() >= kCap) throw std::length_error("mfil_enumerate: budget");
    out.push_back(m);
  });
  return out;
}

BigInt mfil_count(int k, LabelSet x) {
  BigInt total(0);
  mfil_for_each(k, x, [&](const MFil&) { total += 1; });
  return total;
}

RingPoly mfil_weight(const MFil& m, const std::vector<SpeciesCard>& fs, const RingPoly& lam) {
  if (fs.size() != static_cast<size_t>(m.k))
    throw std::invalid_argument("mfil_weight: need one cardinality sequence per level");
  long lam_exp = 0;
  for (int i = 1; i < m.k; ++i)
    lam_exp += set_size(m.U[static_cast<size_t>(i)] & ~m.V[static_cast<size_t>(i)]);
  BigInt prod(1);
  for (int i = 1; i <= m.k; ++i) {
    int arg = set_size(m.U[static_cast<size_t>(i)] & ~m.V[static_cast<size_t>(i) - 1]);
    prod *= fs[static_cast<size_t>(i) - 1][static_cast<size_t>(arg)];
  }
  return RingPoly(prod) * lam.pow(static_cast<unsigned>(lam_exp));
}

RingPoly mfil_weighted_card(int k, LabelSet x, const std::vector<SpeciesCard>& fs,
                            const RingPoly& lam) {
  for (const auto& f : fs)
    if (static_cast<size_t>(set_size(x)) >= f.size())
      throw std::out_of_range("mfil_weighted_card: cardinality sequence too short");
  RingPoly total;
  mfil_for_each(k, x, [&](const MFil& m) { total += mfil_weight(m, fs, lam); });
  return total;
}

bool partition7_valid(const Partition7& p) {
  LabelSet seen = 0;
  for (int s = 1; s <= 7; ++s) {
    if (p.block[static_cast<size_t>(s)] & seen) return false;
    seen |= p.block[static_cast<size_t>(s)];
  }
  return seen == p.X;
}

Partition7 flag3_to_partition(const MFil& m) {
  if (m.k != 3 || !mfil_valid(m)) throw std::invalid_argument("flag3_to_partition: need a valid 3-flag");
  const LabelSet x = m.U[3], u1 = m.U[1], u2 = m.U[2], v1 = m.V[1], v2 = m.V[2];
  Partition7 p;
  p.X = x;
  const LabelSet a1 = v1 & v2;
  p.block[0b001] = a1;
  p.block[0b010] = v2 & ~u1;
  p.block[0b100] = x & ~u2;
  p.block[0b011] = (u1 & v2) & ~a1;
  p.block[0b101] = v1 & ~a1;
  p.block[0b110] = (u2 & ~u1) & ~p.block[0b010];
  p.block[0b111] = (u1 & ~v1) & ~p.block[0b011];
  return p;
}

MFil partition_to_flag3(const Partition7& p) {
  if (!partition7_valid(p)) throw std::invalid_argument("partition_to_flag3: blocks must partition X");
  const auto& a = p.block;
  MFil m;
  m.k = 3;
  m.U = {0, p.X & ~(a[0b010] | a[0b100] | a[0b110]), p.X & ~a[0b100], p.X};
  m.V = {0, a[0b001] | a[0b101], a[0b001] | a[0b010] | a[0b011]};
  if (!mfil_valid(m))
    throw std::logic_error("partition_to_flag3: produced an invalid flag (internal)");
  return m;
}

}  // namespace wtensor
