#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wtensor/counts.hpp>
#include <wtensor/filtrations.hpp>
#include <wtensor/rng.hpp>
#include <wtensor/species.hpp>
#include <wtensor/species_tensor.hpp>
#include <wtensor/wseq.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace wtensor;

TEST_CASE("label set helpers") {
  CHECK(full_set(0) == 0u);
  CHECK(full_set(3) == 7u);
  CHECK(set_size(0b1011u) == 3);
  CHECK(elements(0b1010u) == std::vector<int>{1, 3});
  const auto subs = submasks_sorted(0b101u);
  CHECK(subs.size() == 4);
  CHECK(subs.front() == 0u);
  CHECK(subs.back() == 0b101u);
  LabelPerm sigma{};
  for (int i = 0; i < kMaxLabels; ++i) sigma[static_cast<size_t>(i)] = (i + 1) % kMaxLabels;
  CHECK(apply_perm(sigma, 0b1u) == 0b10u);
}

TEST_CASE("stock species cardinalities") {
  CHECK(card_of(*exponential_species(), 5) == SpeciesCard{1, 1, 1, 1, 1, 1});
  CHECK(card_of(*unit_species(), 4) == SpeciesCard{1, 0, 0, 0, 0});
  CHECK(card_of(*linear_order_species(), 5) == SpeciesCard{1, 1, 2, 6, 24, 120});
  CHECK(card_of(*ksubset_species(2), 5) == SpeciesCard{0, 0, 1, 3, 6, 10});
  CHECK(card_of(*synthetic_species({3, 1, 4, 1, 5}), 4) == SpeciesCard{3, 1, 4, 1, 5});
}

TEST_CASE("structures and transport are consistent") {
  const auto L = linear_order_species();
  const LabelSet x = 0b1011u;  // labels 0, 1, 3
  const auto structs = L->structures(x);
  CHECK(structs.size() == 6);
  // Transport along a transposition permutes the structure set bijectively.
  LabelPerm sigma{};
  for (int i = 0; i < kMaxLabels; ++i) sigma[static_cast<size_t>(i)] = i;
  sigma[0] = 1;
  sigma[1] = 0;
  std::set<Structure> image;
  for (const auto& s : structs) image.insert(L->transport(sigma, s));
  const auto target = L->structures(apply_perm(sigma, x));
  CHECK(image == std::set<Structure>(target.begin(), target.end()));
}

TEST_CASE("l_tensor_card closed form: ones x ones gives (2 + lam)^n") {
  const RingPoly lam = RingPoly::lambda();
  const SpeciesCard ones(8, 1);
  RingPoly expect(1);
  for (int n = 0; n <= 7; ++n) {
    CHECK(l_tensor_card(ones, ones, lam, n) == expect);
    expect *= RingPoly(2) + lam;
  }
}

TEST_CASE("enumeration count equals closed form on stock species") {
  for (long colors : {0L, 1L, 2L, 3L}) {
    const LWeight w = LWeight::of_colors(colors);
    for (int n = 0; n <= 4; ++n) {
      const LabelSet x = full_set(n);
      // E (x) E counts covers with colored overlap: (2 + c)^n.
      BigInt expect = 1;
      for (int i = 0; i < n; ++i) expect *= 2 + colors;
      CHECK(l_tensor_count(*exponential_species(), *exponential_species(), w, x) == expect);
      // Generic pairs against the multinomial formula.
      const auto F = ksubset_species(1);
      const auto G = linear_order_species();
      const RingPoly closed =
          l_tensor_card(card_of(*F, n), card_of(*G, n), RingPoly(colors), n);
      CHECK(RingPoly(l_tensor_count(*F, *G, w, x)) == closed);
    }
  }
}

TEST_CASE("quintuple structures are valid covers and count matches") {
  const auto F = exponential_species();
  const auto G = ksubset_species(1);
  const LWeight w = LWeight::of_colors(2);
  const LabelSet x = full_set(3);
  const auto all = l_tensor_structures(*F, *G, w, x);
  CHECK(BigInt(all.size()) == l_tensor_count(*F, *G, w, x));
  for (const Quintuple& q : all) {
    CHECK((q.U | q.V) == x);
    CHECK(q.coloring.size() == static_cast<size_t>(set_size(q.U & q.V)));
    for (int c : q.coloring) {
      CHECK(c >= 0);
      CHECK(c < 2);
    }
  }
}

TEST_CASE("transport of quintuples is functorial") {
  const auto F = linear_order_species();
  const auto G = exponential_species();
  const LWeight w = LWeight::of_colors(2);
  const LabelSet x = 0b0111u;
  LabelPerm sigma{};
  for (int i = 0; i < kMaxLabels; ++i) sigma[static_cast<size_t>(i)] = i;
  sigma[0] = 2;
  sigma[2] = 0;
  const auto source = l_tensor_structures(*F, *G, w, x);
  const auto target = l_tensor_structures(*F, *G, w, apply_perm(sigma, x));
  std::set<std::pair<std::pair<LabelSet, LabelSet>, std::vector<std::vector<int>>>> got,
      want;
  auto key = [](const Quintuple& q) {
    return std::make_pair(std::make_pair(q.U, q.V),
                          std::vector<std::vector<int>>{q.coloring, q.phi, q.gamma});
  };
  for (const auto& q : source) got.insert(key(transport_quintuple(*F, *G, sigma, q)));
  for (const auto& q : target) want.insert(key(q));
  CHECK(got == want);
}

TEST_CASE("n-fold tensor cardinality oracles") {
  const SpeciesCard ones(4, 1);
  // Three all-ones factors on two labels: every label picks a nonempty
  // subset of the three factors; at lam = 1 that is 7^2 = 49, at lam = 0
  // only singleton assignments survive, 3^2 = 9.
  CHECK(nfold_tensor_card({ones, ones, ones}, RingPoly(1), 2) == RingPoly(49));
  CHECK(nfold_tensor_card({ones, ones, ones}, RingPoly(0), 2) == RingPoly(9));
  // One factor: the cardinality itself.
  CHECK(nfold_tensor_card({SpeciesCard{2, 5, 7}}, RingPoly::lambda(), 2) == RingPoly(7));
  // Two factors reduce to the binary closed form.
  Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    SpeciesCard f, g;
    for (int k = 0; k < 5; ++k) {
      f.push_back(rng.int_in(0, 3));
      g.push_back(rng.int_in(0, 3));
    }
    for (int n = 0; n <= 4; ++n)
      CHECK(nfold_tensor_card({f, g}, RingPoly::lambda(), n) ==
            l_tensor_card(f, g, RingPoly::lambda(), n));
  }
}

TEST_CASE("modified filtration counts and weights") {
  // mfil_count(k, X) = (2^k - 1)^{|X|}: each label picks which tail of the
  // U-chain it joins and where it sits relative to the V's.
  CHECK(mfil_count(2, full_set(2)) == 9);
  CHECK(mfil_count(2, full_set(3)) == 27);
  CHECK(mfil_count(3, full_set(2)) == 49);
  CHECK(mfil_count(4, full_set(1)) == 15);
  CHECK(mfil_count(3, full_set(0)) == 1);
  // Validity of everything enumerated.
  mfil_for_each(3, full_set(3), [](const MFil& m) {
    CHECK(mfil_valid(m));
    CHECK(m.U.size() == 4);
    CHECK(m.V.size() == 3);
    CHECK(m.V[0] == 0u);
  });
  // Weighted cardinality agrees with the digit-string formula.
  Rng rng(53);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 3; ++n) {
      std::vector<SpeciesCard> fs;
      for (int i = 0; i < k; ++i) {
        SpeciesCard c;
        for (int j = 0; j <= n; ++j) c.push_back(rng.int_in(0, 3));
        fs.push_back(c);
      }
      CHECK(mfil_weighted_card(k, full_set(n), fs, RingPoly::lambda()) ==
            nfold_tensor_card(fs, RingPoly::lambda(), n));
    }
  }
}

TEST_CASE("3-flag to 7-block partition roundtrip, exhaustively on small sets") {
  for (int n = 0; n <= 4; ++n) {
    const LabelSet x = full_set(n);
    BigInt seen = 0;
    mfil_for_each(3, x, [&](const MFil& m) {
      const Partition7 p = flag3_to_partition(m);
      CHECK(partition7_valid(p));
      CHECK(p.X == x);
      // Blocks are disjoint and cover X.
      LabelSet uni = 0;
      for (int b = 1; b <= 7; ++b) {
        CHECK((uni & p.block[static_cast<size_t>(b)]) == 0u);
        uni |= p.block[static_cast<size_t>(b)];
      }
      CHECK(uni == x);
      const MFil back = partition_to_flag3(p);
      CHECK(back.k == m.k);
      CHECK(back.U == m.U);
      CHECK(back.V == m.V);
      seen += 1;
    });
    CHECK(seen == mfil_count(3, x));
  }
}

TEST_CASE("Cov census oracles and closed form") {
  CHECK(cov_enumerate(0, 0, 0) == std::map<int, BigInt>{{0, 1}});
  CHECK(cov_enumerate(1, 1, 1) == std::map<int, BigInt>{{1, 1}});
  CHECK(cov_enumerate(1, 1, 2) == std::map<int, BigInt>{{0, 2}});
  CHECK(cov_enumerate(2, 2, 3) == std::map<int, BigInt>{{1, 24}});
  // The two images cannot cover a larger target.
  CHECK(cov_enumerate(1, 1, 3).empty());
  // An injection cannot come from a larger source.
  CHECK(cov_enumerate(4, 1, 3).empty());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int n = 0; n <= 5; ++n) {
        const int c = a + b - n;
        std::map<int, BigInt> expect;
        if (a <= n && b <= n && c >= 0)
          expect[c] = multinomial(n, {a - c, b - c, c}) *
                      factorial(static_cast<unsigned long>(a)) *
                      factorial(static_cast<unsigned long>(b));
        CHECK(cov_enumerate(a, b, n) == expect);
      }
}

TEST_CASE("cov_for_each yields jointly surjective injection pairs") {
  int seen = 0;
  cov_for_each(2, 2, 3, [&](const std::vector<int>& mu, const std::vector<int>& nu, int c) {
    ++seen;
    CHECK(c == 1);
    std::set<int> im(mu.begin(), mu.end());
    CHECK(im.size() == mu.size());  // injective
    std::set<int> in(nu.begin(), nu.end());
    CHECK(in.size() == nu.size());
    im.insert(in.begin(), in.end());
    CHECK(im.size() == 3);  // jointly surjective
  });
  CHECK(seen == 24);
}

TEST_CASE("Delta weighted multiset oracles") {
  const RingPoly lam = RingPoly::lambda();
  const WeightedPairs d1 = delta_fam(1, lam);
  CHECK(d1.size() == 3);
  CHECK(d1.at({1, 0}) == RingPoly(1));
  CHECK(d1.at({0, 1}) == RingPoly(1));
  CHECK(d1.at({1, 1}) == lam);
  const WeightedPairs d2 = delta_fam(2, lam);
  CHECK(d2.at({2, 2}) == lam * lam);
  CHECK(d2.at({1, 1}) == RingPoly(2));
  CHECK(d2.at({2, 1}) == RingPoly(2) * lam);
  // Total weight at lam = 1 is 3^n: each label goes to A, B, or C.
  for (int n = 0; n <= 6; ++n) {
    BigInt total = 0;
    for (const auto& [key, w] : delta_fam(n, lam)) total += w.eval(BigInt(1));
    BigInt pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    CHECK(total == pow3);
  }
}

TEST_CASE("Delta is strong monoidal") {
  const RingPoly lam = RingPoly::lambda();
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; x + y <= 5; ++y) CHECK(delta_monoidal_check(x, y, lam).pass);
}

TEST_CASE("cardinality Leibniz rule for shifted species") {
  const RingPoly lam = RingPoly::lambda();
  CHECK(shift_leibniz_card_check(SpeciesCard(8, 1), SpeciesCard(8, 1), lam, 2, 2).pass);
  Rng rng(59);
  for (int i = 0; i < 4; ++i) {
    SpeciesCard f, g;
    for (int k = 0; k < 8; ++k) {
      f.push_back(rng.int_in(0, 3));
      g.push_back(rng.int_in(0, 3));
    }
    for (int x = 0; x <= 3; ++x)
      for (int y = 0; x + y <= 4; ++y) CHECK(shift_leibniz_card_check(f, g, lam, x, y).pass);
  }
}

TEST_CASE("Venn bijection pairs the two inclusion-exclusion sides") {
  for (LabelSet u = 0; u <= 0b111u; ++u)
    for (LabelSet v = 0; v <= 0b111u; ++v)
      for (LabelSet w = 0; w <= 0b111u; ++w) {
        const VennBijection vb = venn_bijection(u, v, w);
        const size_t lhs =
            static_cast<size_t>(set_size((u | v) & w) + set_size(u & v));
        const size_t rhs =
            static_cast<size_t>(set_size(u & (v | w)) + set_size(v & w));
        CHECK(lhs == rhs);
        CHECK(vb.lhs_size == lhs);
        CHECK(vb.rhs_size == rhs);
        CHECK(vb.pairs.size() == lhs);
        // Each side is hit exactly once per occurrence.
        std::set<std::pair<int, int>> lhs_seen, rhs_seen;
        for (const VennPair& p : vb.pairs) {
          CHECK(lhs_seen.insert({p.label, p.lhs_component}).second);
          CHECK(rhs_seen.insert({p.label, p.rhs_component}).second);
        }
      }
}
