#include <wtensor/checks.hpp>

namespace wtensor {

Report k_subalgebra_check(const Endo<FinPoint>& baseP, const RingPoly& lam, int m, int n_trunc,
                          int trials, std::uint64_t seed) {
  Report rep;
  rep.op = "hurwitz.k_subalgebra_check";
  rep.params = {{"P", baseP.name},
                {"lambda", lam.str()},
                {"m", m},
                {"trunc", n_trunc},
                {"trials", trials},
                {"seed", seed}};
  Rng rng(seed);
  auto p = [&](const FinPoint& x) { return baseP(x); };
  auto diamond = [&](const FinPoint& a, const FinPoint& b) {
    return diamond_mul(a, b, p, lam);
  };
  auto random_member = [&]() {
    std::vector<FinPoint> entries(static_cast<size_t>(n_trunc),
                                  FinPoint::constant(m, RingPoly(0)));
    entries.back() = FinPoint::from_ints(rng.int_vec(static_cast<size_t>(m), -4, 4));
    for (int n = n_trunc - 2; n >= 0; --n)
      entries[static_cast<size_t>(n)] = baseP(entries[static_cast<size_t>(n) + 1]);
    return WSeq<FinPoint>(std::move(entries));
  };
  auto entrywise_p = [&](const WSeq<FinPoint>& a) {
    std::vector<FinPoint> out;
    out.reserve(a.trunc());
    for (size_t n = 0; n < a.trunc(); ++n) out.push_back(baseP(a(n)));
    return WSeq<FinPoint>(std::move(out));
  };

  for (int trial = 0; trial < trials && rep.pass; ++trial) {
    WSeq<FinPoint> a = random_member();
    WSeq<FinPoint> b = random_member();
    auto record = [&](const char* law, const WSeq<FinPoint>& witness, long defect) {
      ++rep.checks;
      if (defect >= 0)
        rep.fail({{"trial", trial},
                  {"law", law},
                  {"defect_index", defect},
                  {"witness", to_text(witness)}});
    };
    record("membership of constructed element", a, k_membership_defect(a, p));
    WSeq<FinPoint> h = hurwitz_mul_with(a, b, lam, diamond);
    record("closure under diamond-Hurwitz product", h, k_membership_defect(h, p));
    WSeq<FinPoint> da = shift_derivation(a);
    record("closure under shift", da, k_membership_defect(da, p));
    WSeq<FinPoint> pa = entrywise_p(a);
    record("closure under entrywise p", pa, k_membership_defect(pa, p));
    ++rep.checks;
    if (!prefix_eq(shift_derivation(pa), a))
      rep.fail({{"trial", trial}, {"law", "shift(p(a)) = a"}, {"a", to_text(a)}});
  }
  return rep;
}

}  // namespace wtensor
