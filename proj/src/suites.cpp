#include <wtensor/suites.hpp>

#include <wtensor/checks.hpp>
#include <wtensor/counts.hpp>
#include <wtensor/filtrations.hpp>
#include <wtensor/finpoint.hpp>
#include <wtensor/graph.hpp>
#include <wtensor/jsonio.hpp>
#include <wtensor/qtensor.hpp>
#include <wtensor/rng.hpp>
#include <wtensor/species.hpp>
#include <wtensor/species_tensor.hpp>
#include <wtensor/wseq.hpp>

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wtensor {
namespace {

WSeq<RingPoly> random_poly_seq(Rng& rng, size_t n, int max_deg, long cmax) {
  std::vector<RingPoly> e;
  e.reserve(n);
  for (size_t i = 0; i < n; ++i) e.push_back(rng.poly(max_deg, cmax));
  return WSeq<RingPoly>(std::move(e));
}

WSeq<PolyMatrix> random_mat_seq(Rng& rng, size_t n, Eigen::Index m, int max_deg, long cmax) {
  std::vector<PolyMatrix> e;
  e.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    PolyMatrix a(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c) a(r, c) = rng.poly(max_deg, cmax);
    e.push_back(std::move(a));
  }
  return WSeq<PolyMatrix>(std::move(e));
}

FinPoint random_finpoint(Rng& rng, size_t m, long cmax) {
  return FinPoint::from_ints(rng.int_vec(m, -cmax, cmax));
}

WSeq<FinPoint> random_finpoint_seq(Rng& rng, size_t n, size_t m, long cmax) {
  std::vector<FinPoint> e;
  e.reserve(n);
  for (size_t i = 0; i < n; ++i) e.push_back(random_finpoint(rng, m, cmax));
  return WSeq<FinPoint>(std::move(e));
}

SpeciesCard random_card(Rng& rng, size_t len, long cmax) { return rng.int_vec(len, 0, cmax); }

WSeq<RingPoly> card_seq(const SpeciesCard& c) {
  std::vector<RingPoly> e;
  e.reserve(c.size());
  for (long v : c) e.emplace_back(v);
  return WSeq<RingPoly>(std::move(e));
}

// --- 1. ring laws of the lam-weighted Hurwitz product ---
Report suite_hurwitz_laws(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.hurwitz_laws";
  const int trials = opt.full ? 200 : 20;
  const size_t trunc = opt.full ? 12 : 8;
  rep.params = {{"trials", trials}, {"trunc", trunc}, {"lambda", "formal"}, {"seed", opt.seed}};
  Rng rng(opt.seed + 1);
  const RingPoly lam = RingPoly::lambda();
  const WSeq<RingPoly> unit = seq_unit(trunc);
  for (int trial = 0; trial < trials && rep.pass; ++trial) {
    WSeq<RingPoly> f = random_poly_seq(rng, trunc, 2, 3);
    WSeq<RingPoly> g = random_poly_seq(rng, trunc, 2, 3);
    WSeq<RingPoly> h = random_poly_seq(rng, trunc, 2, 3);
    WSeq<RingPoly> lhs = hurwitz_mul(hurwitz_mul(f, g, lam), h, lam);
    WSeq<RingPoly> rhs = hurwitz_mul(f, hurwitz_mul(g, h, lam), lam);
    ++rep.checks;
    if (lhs != rhs) {
      rep.fail({{"law", "associativity"},
                {"trial", trial},
                {"f", to_text(f)},
                {"g", to_text(g)},
                {"h", to_text(h)},
                {"lhs (f.g).h", to_text(lhs)},
                {"rhs f.(g.h)", to_text(rhs)}});
      break;
    }
    ++rep.checks;
    if (hurwitz_mul(unit, f, lam) != f) {
      rep.fail({{"law", "left unit"}, {"trial", trial}, {"f", to_text(f)}});
      break;
    }
    ++rep.checks;
    if (hurwitz_mul(f, unit, lam) != f) {
      rep.fail({{"law", "right unit"}, {"trial", trial}, {"f", to_text(f)}});
      break;
    }
    ++rep.checks;
    WSeq<RingPoly> dist_l = hurwitz_mul(seq_add(f, g), h, lam);
    WSeq<RingPoly> dist_r = seq_add(hurwitz_mul(f, h, lam), hurwitz_mul(g, h, lam));
    if (dist_l != dist_r) {
      rep.fail({{"law", "left distributivity"},
                {"trial", trial},
                {"f", to_text(f)},
                {"g", to_text(g)},
                {"h", to_text(h)}});
      break;
    }
    ++rep.checks;
    const RingPoly c = rng.poly(1, 3);
    if (seq_scale(c, hurwitz_mul(f, g, lam)) != hurwitz_mul(seq_scale(c, f), g, lam)) {
      rep.fail({{"law", "Z[lam]-bilinearity"}, {"trial", trial}, {"c", c.str()}});
      break;
    }
  }
  return rep;
}

// --- 2. d* is an algebra morphism (generalized Leibniz) ---
Report suite_generalized_leibniz(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.generalized_leibniz";
  const int pairs = opt.full ? 100 : 15;
  rep.params = {{"pairs", pairs}, {"seed", opt.seed}};
  Rng rng(opt.seed + 2);

  // (a) cyclic-difference witness: A = Z[lam]^6 pointwise, d = cyclic
  // difference (a 1-weighted derivation), so d*(ab) = d*(a) .^1 d*(b).
  const RingPoly one(1);
  const size_t n_entries = 6;
  auto d = [](const FinPoint& x) { return cyclic_difference(x); };
  for (int trial = 0; trial < pairs && rep.pass; ++trial) {
    FinPoint a = random_finpoint(rng, 6, 5);
    FinPoint b = random_finpoint(rng, 6, 5);
    WSeq<FinPoint> da = d_star(a, d, n_entries);
    WSeq<FinPoint> db = d_star(b, d, n_entries);
    WSeq<FinPoint> lhs = d_star(a * b, d, n_entries);
    WSeq<FinPoint> rhs = hurwitz_mul(da, db, one);
    ++rep.checks;
    if (lhs != rhs) {
      rep.fail({{"witness", "cyclic difference, lam=1, m=6"},
                {"trial", trial},
                {"a", to_text(a)},
                {"b", to_text(b)},
                {"lhs d*(ab)", to_text(lhs)},
                {"rhs d*(a).d*(b)", to_text(rhs)}});
      break;
    }
    ++rep.checks;
    if (d_star(d(a), d, n_entries - 1) != shift_derivation(da)) {
      rep.fail({{"law", "d* o d = shift o d*"}, {"trial", trial}, {"a", to_text(a)}});
      break;
    }
  }

  // (b) matrix-entry sequences with the shift derivation, lam formal:
  // shift^n(f .^lam g) expanded by the generalized Leibniz rule, per n.
  const RingPoly lam = RingPoly::lambda();
  const size_t trunc = opt.full ? 6 : 5;
  for (int trial = 0; trial < pairs && rep.pass; ++trial) {
    WSeq<PolyMatrix> x = random_mat_seq(rng, trunc, 2, 1, 2);
    WSeq<PolyMatrix> y = random_mat_seq(rng, trunc, 2, 1, 2);
    rep.absorb(check_shift_generalized_leibniz(x, y, lam));
  }

  // (c) the same identity stated at the d* level with nested sequences:
  // d*(x)(m) = shift^m(x) truncated to a common window, and
  // d*(x .^lam y) = d*(x) .^lam d*(y) where the outer product multiplies
  // entries with the inner lam-Hurwitz product.
  const size_t window = 3;
  auto nested_dstar = [&](const WSeq<PolyMatrix>& x) {
    const size_t len = x.trunc() - window + 1;
    std::vector<WSeq<PolyMatrix>> out;
    WSeq<PolyMatrix> cur = x;
    for (size_t m = 0; m < window; ++m) {
      out.push_back(truncate(cur, len));
      if (m + 1 < window) cur = shift_derivation(cur);
    }
    return WSeq<WSeq<PolyMatrix>>(std::move(out));
  };
  auto inner_mul = [&lam](const WSeq<PolyMatrix>& u, const WSeq<PolyMatrix>& v) {
    return hurwitz_mul(u, v, lam);
  };
  for (int trial = 0; trial < (opt.full ? 10 : 4) && rep.pass; ++trial) {
    WSeq<PolyMatrix> x = random_mat_seq(rng, trunc, 2, 1, 2);
    WSeq<PolyMatrix> y = random_mat_seq(rng, trunc, 2, 1, 2);
    WSeq<WSeq<PolyMatrix>> lhs = nested_dstar(hurwitz_mul(x, y, lam));
    WSeq<WSeq<PolyMatrix>> rhs = hurwitz_mul_with(nested_dstar(x), nested_dstar(y), lam, inner_mul);
    ++rep.checks;
    if (lhs != rhs)
      rep.fail({{"witness", "nested d*, shift derivation, lam formal"},
                {"trial", trial},
                {"x", to_text(x)},
                {"y", to_text(y)}});
  }
  return rep;
}

// --- 3. Rota-Baxter suite: partial sums, the lift, the diamond product ---
Report suite_rota_baxter(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.rota_baxter";
  Rng rng(opt.seed + 3);
  const int n_samples = opt.full ? 11 : 6;  // check_rb_operator covers n^2 ordered pairs
  rep.params = {{"samples", n_samples}, {"seed", opt.seed}};

  // (a) partial sums are a 1-weighted RB operator of the pointwise algebra.
  {
    std::vector<WSeq<RingPoly>> samples;
    for (int i = 0; i < n_samples; ++i) samples.push_back(random_poly_seq(rng, 10, 1, 4));
    Endo<WSeq<RingPoly>> P{"partial_sums",
                           [](const WSeq<RingPoly>& f) { return partial_sums(f); }};
    auto mul = [](const WSeq<RingPoly>& a, const WSeq<RingPoly>& b) {
      return pointwise_mul(a, b);
    };
    rep.absorb(check_rb_operator(mul, P, RingPoly(1), samples));
  }

  // (b) the lift P(f) = (baseP f(0), f(0), f(1), ...) for lam in
  // {0, 1, 2, formal}: base RB law, shift o P = id, the ev_0 square, and the
  // RB law inside (A^N, .^lam). baseP = lam * strict partial sums is
  // lam-weighted because strict partial sums is 1-weighted.
  for (const RingPoly& lamv :
       {RingPoly(0), RingPoly(1), RingPoly(2), RingPoly::lambda()}) {
    const size_t m = 4;
    auto base_fn = [lamv](const FinPoint& x) { return scale(lamv, strict_partial_sums(x)); };
    Endo<FinPoint> baseP{"lam*strict_partial_sums", base_fn};
    std::vector<FinPoint> base_samples;
    for (int i = 0; i < 5; ++i) base_samples.push_back(random_finpoint(rng, m, 4));
    auto fmul = [](const FinPoint& a, const FinPoint& b) { return a * b; };
    rep.absorb(check_rb_operator(fmul, baseP, lamv, base_samples));

    std::vector<WSeq<FinPoint>> lift_samples;
    for (int i = 0; i < 5; ++i) lift_samples.push_back(random_finpoint_seq(rng, 7, m, 3));
    Endo<WSeq<FinPoint>> lifted{"lifted_rb", [base_fn](const WSeq<FinPoint>& f) {
                                  return lifted_rb(f, base_fn);
                                }};
    for (const auto& f : lift_samples) {
      WSeq<FinPoint> pf = lifted(f);
      ++rep.checks;
      if (!prefix_eq(shift_derivation(pf), f))
        rep.fail({{"law", "shift o P = id"}, {"lambda", lamv.str()}, {"f", to_text(f)}});
      ++rep.checks;
      if (!alg_eq(pf(0), base_fn(f(0))))
        rep.fail({{"law", "ev_0 square"}, {"lambda", lamv.str()}, {"f", to_text(f)}});
      if (!rep.pass) break;
    }
    auto hmul = [lamv](const WSeq<FinPoint>& a, const WSeq<FinPoint>& b) {
      return hurwitz_mul(a, b, lamv);
    };
    rep.absorb(check_rb_operator(hmul, lifted, lamv, lift_samples));
    if (!rep.pass) break;
  }

  // (c) diamond product: associativity and P(a<>b) = P(a)P(b), for the
  // 1-weighted operator and for the formal lam-scaled one.
  const int pairs = opt.full ? 100 : 20;
  for (const RingPoly& lamv : {RingPoly(1), RingPoly::lambda()}) {
    const size_t m = 5;
    auto P = [lamv](const FinPoint& x) { return scale(lamv, strict_partial_sums(x)); };
    for (int trial = 0; trial < pairs && rep.pass; ++trial) {
      FinPoint a = random_finpoint(rng, m, 4);
      FinPoint b = random_finpoint(rng, m, 4);
      FinPoint c = random_finpoint(rng, m, 4);
      auto dia = [&](const FinPoint& u, const FinPoint& v) {
        return diamond_mul(u, v, P, lamv);
      };
      ++rep.checks;
      if (!alg_eq(dia(dia(a, b), c), dia(a, dia(b, c)))) {
        rep.fail({{"law", "diamond associativity"},
                  {"lambda", lamv.str()},
                  {"trial", trial},
                  {"a", to_text(a)},
                  {"b", to_text(b)},
                  {"c", to_text(c)}});
        break;
      }
      ++rep.checks;
      if (!alg_eq(P(dia(a, b)), P(a) * P(b)))
        rep.fail({{"law", "P(a<>b) = P(a)P(b)"},
                  {"lambda", lamv.str()},
                  {"trial", trial},
                  {"a", to_text(a)},
                  {"b", to_text(b)}});
    }
  }
  return rep;
}

// --- 4. species tensor counts match the Hurwitz product of cardinalities ---
Report suite_species_tensor_counts(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.species_tensor_counts";
  Rng rng(opt.seed + 4);
  const int pairs = opt.full ? 20 : 6;
  const int n_max = opt.full ? 7 : 5;
  const int n_materialize = opt.full ? 4 : 3;
  rep.params = {{"pairs", pairs},
                {"n_max", n_max},
                {"n_materialize", n_materialize},
                {"colors", "0..3"},
                {"seed", opt.seed}};
  for (int p = 0; p < pairs && rep.pass; ++p) {
    SpeciesCard fc = random_card(rng, static_cast<size_t>(n_max) + 1, 3);
    SpeciesCard gc = random_card(rng, static_cast<size_t>(n_max) + 1, 3);
    auto F = synthetic_species(fc, "F");
    auto G = synthetic_species(gc, "G");
    for (long colors = 0; colors <= 3 && rep.pass; ++colors) {
      const LWeight weight = LWeight::of_colors(colors);
      WSeq<RingPoly> prod = hurwitz_mul(card_seq(fc), card_seq(gc), RingPoly(colors));
      for (int n = 0; n <= n_max && rep.pass; ++n) {
        const BigInt expected = prod(static_cast<size_t>(n)).coeff(0);
        const BigInt counted = l_tensor_count(*F, *G, weight, full_set(n));
        ++rep.checks;
        if (counted != expected) {
          rep.fail({{"route", "cover iteration"},
                    {"pair", p},
                    {"colors", colors},
                    {"n", n},
                    {"f", Json(fc)},
                    {"g", Json(gc)},
                    {"counted", bigint_to_json(counted)},
                    {"hurwitz", bigint_to_json(expected)}});
          break;
        }
        if (n <= n_materialize) {
          const BigInt listed(
              static_cast<unsigned long>(l_tensor_structures(*F, *G, weight, full_set(n)).size()));
          ++rep.checks;
          if (listed != expected)
            rep.fail({{"route", "structure materialization"},
                      {"pair", p},
                      {"colors", colors},
                      {"n", n},
                      {"listed", bigint_to_json(listed)},
                      {"hurwitz", bigint_to_json(expected)}});
        }
      }
    }
  }
  return rep;
}

// --- 5. n-fold formula vs iterated binary vs modified filtrations ---
Report suite_formula_concordance(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.formula_concordance";
  Rng rng(opt.seed + 5);
  const RingPoly lam = RingPoly::lambda();
  struct Setting {
    int k, sets, n_max;
  };
  const std::vector<Setting> settings = opt.full
                                            ? std::vector<Setting>{{3, 4, 5}, {4, 3, 4}}
                                            : std::vector<Setting>{{3, 2, 4}, {4, 1, 3}};
  rep.params = {{"lambda", "formal"}, {"seed", opt.seed}};
  for (const Setting& st : settings) {
    for (int rep_i = 0; rep_i < st.sets && rep.pass; ++rep_i) {
      std::vector<SpeciesCard> fs;
      for (int i = 0; i < st.k; ++i)
        fs.push_back(random_card(rng, static_cast<size_t>(st.n_max) + 1, 3));
      // left-iterated binary product of the cardinality sequences
      WSeq<RingPoly> iter = card_seq(fs[0]);
      for (int i = 1; i < st.k; ++i) iter = hurwitz_mul(iter, card_seq(fs[static_cast<size_t>(i)]), lam);
      for (int n = 0; n <= st.n_max && rep.pass; ++n) {
        const RingPoly digits = nfold_tensor_card(fs, lam, n);
        const RingPoly filtr = mfil_weighted_card(st.k, full_set(n), fs, lam);
        const RingPoly& binary = iter(static_cast<size_t>(n));
        ++rep.checks;
        if (!(digits == binary && digits == filtr)) {
          rep.fail({{"k", st.k},
                    {"n", n},
                    {"n_fold", digits.str()},
                    {"iterated_binary", binary.str()},
                    {"m_filtration", filtr.str()}});
          break;
        }
        if (st.k == 4) {
          // every bracketing of four factors agrees (insertion invariance)
          const WSeq<RingPoly> f1 = card_seq(fs[0]), f2 = card_seq(fs[1]), f3 = card_seq(fs[2]),
                               f4 = card_seq(fs[3]);
          const WSeq<RingPoly> b12 = hurwitz_mul(f1, f2, lam);
          const WSeq<RingPoly> b23 = hurwitz_mul(f2, f3, lam);
          const WSeq<RingPoly> b34 = hurwitz_mul(f3, f4, lam);
          const std::vector<WSeq<RingPoly>> brackets = {
              hurwitz_mul(hurwitz_mul(b12, f3, lam), f4, lam),
              hurwitz_mul(hurwitz_mul(f1, b23, lam), f4, lam),
              hurwitz_mul(f1, hurwitz_mul(b23, f4, lam), lam),
              hurwitz_mul(f1, hurwitz_mul(f2, b34, lam), lam),
              hurwitz_mul(b12, b34, lam)};
          for (size_t bi = 0; bi < brackets.size() && rep.pass; ++bi) {
            ++rep.checks;
            if (!(brackets[bi](static_cast<size_t>(n)) == digits))
              rep.fail({{"law", "bracketing invariance"},
                        {"bracketing", bi},
                        {"n", n},
                        {"value", brackets[bi](static_cast<size_t>(n)).str()},
                        {"n_fold", digits.str()}});
          }
        }
      }
    }
  }
  return rep;
}

// --- 6. 3-flags <-> 7-block partitions, both roundtrips, exhaustive ---
Report suite_flag3_bijection(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.flag3_bijection";
  const int n_max = opt.full ? 5 : 4;
  rep.params = {{"n_max", n_max}};
  for (int n = 0; n <= n_max && rep.pass; ++n) {
    const LabelSet x = full_set(n);
    BigInt forward = 0;
    mfil_for_each(3, x, [&](const MFil& m) {
      if (!rep.pass) return;
      const Partition7 p = flag3_to_partition(m);
      ++rep.checks;
      if (!partition7_valid(p)) {
        rep.fail({{"direction", "flag -> partition"}, {"n", n}, {"U", Json(m.U)}, {"V", Json(m.V)}});
        return;
      }
      const MFil back = partition_to_flag3(p);
      ++rep.checks;
      if (back.k != m.k || back.U != m.U || back.V != m.V) {
        rep.fail({{"direction", "roundtrip flag -> partition -> flag"},
                  {"n", n},
                  {"U", Json(m.U)},
                  {"V", Json(m.V)},
                  {"back_U", Json(back.U)},
                  {"back_V", Json(back.V)}});
        return;
      }
      forward += 1;
    });
    if (!rep.pass) break;

    // reverse direction: every block assignment X -> {1..7} is a partition;
    // roundtrip through the flag and count both ways ((#mFil_3 = 7^n)).
    BigInt reverse = 0;
    std::vector<int> assign(static_cast<size_t>(n), 1);
    bool done = (n < 0);
    while (!done && rep.pass) {
      Partition7 p;
      p.X = x;
      for (int i = 0; i < n; ++i)
        p.block[static_cast<size_t>(assign[static_cast<size_t>(i)])] |= (1u << i);
      const MFil flag = partition_to_flag3(p);
      ++rep.checks;
      if (!mfil_valid(flag)) {
        rep.fail({{"direction", "partition -> flag"}, {"n", n}, {"assignment", Json(assign)}});
        break;
      }
      const Partition7 back = flag3_to_partition(flag);
      ++rep.checks;
      if (back.X != p.X || back.block != p.block) {
        rep.fail({{"direction", "roundtrip partition -> flag -> partition"},
                  {"n", n},
                  {"assignment", Json(assign)}});
        break;
      }
      reverse += 1;
      // odometer over {1..7}^n
      done = true;
      for (size_t i = 0; i < assign.size(); ++i) {
        if (assign[i] < 7) {
          ++assign[i];
          for (size_t j = 0; j < i; ++j) assign[j] = 1;
          done = false;
          break;
        }
      }
    }
    if (!rep.pass) break;
    ++rep.checks;
    const BigInt total = mfil_count(3, x);
    if (forward != total || reverse != total)
      rep.fail({{"law", "bijection counts"},
                {"n", n},
                {"flags", bigint_to_json(forward)},
                {"partitions", bigint_to_json(reverse)},
                {"mfil_count", bigint_to_json(total)}});
  }
  return rep;
}

// --- 7. Cov census closed form plus weighted contraction ---
Report suite_cov_census(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.cov_census";
  rep.params = {{"a_b_max", 4}, {"n_max", 6}, {"seed", opt.seed}};
  for (int n = 0; n <= 6 && rep.pass; ++n)
    for (int a = 0; a <= 4 && rep.pass; ++a)
      for (int b = 0; b <= 4 && rep.pass; ++b) {
        const std::map<int, BigInt> census = cov_enumerate(a, b, n);
        std::map<int, BigInt> expected;
        const int c = a + b - n;
        if (a <= n && b <= n && c >= 0)
          expected[c] = multinomial(n, {a - c, b - c, c}) * factorial(static_cast<unsigned long>(a)) *
                        factorial(static_cast<unsigned long>(b));
        ++rep.checks;
        if (census != expected)
          rep.fail({{"a", a},
                    {"b", b},
                    {"n", n},
                    {"census", census_to_json(census)},
                    {"closed_form", census_to_json(expected)}});
      }

  // weighted contraction: sum_{a,b,c} lam^c census(a,b,n)[c]/(a! b!) f(a) g(b)
  // reproduces the closed-form tensor cardinality.
  Rng rng(opt.seed + 7);
  const int pairs = opt.full ? 3 : 2;
  const int n_top = opt.full ? 6 : 5;
  const RingPoly lam = RingPoly::lambda();
  for (int p = 0; p < pairs && rep.pass; ++p) {
    SpeciesCard f = random_card(rng, static_cast<size_t>(n_top) + 1, 4);
    SpeciesCard g = random_card(rng, static_cast<size_t>(n_top) + 1, 4);
    for (int n = 0; n <= n_top && rep.pass; ++n) {
      const RingPoly direct = l_tensor_card(f, g, lam, n);
      RingPoly contracted;
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          BigInt denom = factorial(static_cast<unsigned long>(a));
          denom *= factorial(static_cast<unsigned long>(b));
          for (const auto& [c, cnt] : cov_enumerate(a, b, n)) {
            BigInt coeff;
            mpz_divexact(coeff.get_mpz_t(), cnt.get_mpz_t(), denom.get_mpz_t());
            coeff *= f[static_cast<size_t>(a)] * g[static_cast<size_t>(b)];
            contracted += RingPoly(coeff) * lam.pow(static_cast<unsigned>(c));
          }
        }
      ++rep.checks;
      if (!(contracted == direct))
        rep.fail({{"pair", p},
                  {"n", n},
                  {"f", Json(f)},
                  {"g", Json(g)},
                  {"contracted", contracted.str()},
                  {"l_tensor_card", direct.str()}});
    }
  }
  return rep;
}

// --- 8. Delta strong monoidality on weighted multisets ---
Report suite_delta_monoidal(const VerifyOptions&) {
  Report rep;
  rep.op = "suite.delta_monoidal";
  rep.params = {{"x_plus_y_max", 6}, {"lambda", "formal"}};
  const RingPoly lam = RingPoly::lambda();
  for (int x = 0; x <= 6 && rep.pass; ++x)
    for (int y = 0; x + y <= 6 && rep.pass; ++y) rep.absorb(delta_monoidal_check(x, y, lam));
  return rep;
}

// --- 9. cardinality Leibniz rule for shifted species ---
Report suite_shift_leibniz(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.shift_leibniz";
  Rng rng(opt.seed + 9);
  const int pairs = opt.full ? 5 : 2;
  rep.params = {{"pairs", pairs}, {"x_plus_y_max", 5}, {"lambda", "formal"}, {"seed", opt.seed}};
  const RingPoly lam = RingPoly::lambda();
  for (int p = 0; p < pairs && rep.pass; ++p) {
    SpeciesCard f = random_card(rng, 8, 3);
    SpeciesCard g = random_card(rng, 8, 3);
    for (int x = 0; x <= 5 && rep.pass; ++x)
      for (int y = 0; x + y <= 5 && rep.pass; ++y)
        rep.absorb(shift_leibniz_card_check(f, g, lam, x, y));
  }
  return rep;
}

// --- 10. graph tensor coherence and the monoid witnesses ---
Report suite_graph_coherence(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.graph_coherence";
  Rng rng(opt.seed + 10);
  const int trials = opt.full ? 100 : 20;
  rep.params = {{"trials", trials}, {"dims", "<=2"}, {"lambda", "formal"}, {"seed", opt.seed}};
  const RingPoly lam = RingPoly::lambda();

  auto random_graph = [&rng]() {
    const Eigen::Index dim_a = rng.int_in(1, 2);
    const Eigen::Index dim_e = rng.int_in(1, 2);
    PolyMatrix s(dim_a, dim_e), t(dim_a, dim_e);
    for (Eigen::Index r = 0; r < dim_a; ++r)
      for (Eigen::Index c = 0; c < dim_e; ++c) {
        s(r, c) = rng.poly(1, 2);
        t(r, c) = rng.poly(1, 2);
      }
    return make_graph(std::move(s), std::move(t));
  };

  for (int trial = 0; trial < trials && rep.pass; ++trial) {
    const MatGraph g1 = random_graph(), g2 = random_graph(), g3 = random_graph();
    const MatGraph left = graph_tensor(graph_tensor(g1, g2, lam), g3, lam);
    const MatGraph right = graph_tensor(g1, graph_tensor(g2, g3, lam), lam);
    const MatGraph flat = graph_tensor_n({g1, g2, g3}, lam);
    ++rep.checks;
    if (!graph_eq(left, flat)) {
      rep.fail({{"law", "left bracketing = 3-fold"}, {"trial", trial}});
      break;
    }
    ++rep.checks;
    if (!graph_eq(right, flat)) {
      rep.fail({{"law", "right bracketing = 3-fold"}, {"trial", trial}});
      break;
    }
    ++rep.checks;
    if (!graph_eq(graph_tensor(g1, unit_graph(), lam), g1)) {
      rep.fail({{"law", "right unit"}, {"trial", trial}});
      break;
    }
    ++rep.checks;
    if (!graph_eq(graph_tensor(unit_graph(), g1, lam), g1)) {
      rep.fail({{"law", "left unit"}, {"trial", trial}});
      break;
    }
  }

  auto expect_pass = [&rep](const Report& sub, const char* what) {
    ++rep.checks;
    if (!sub.pass)
      rep.fail({{"expected", "PASS"}, {"witness", what}, {"sub", sub.to_json()}});
  };
  auto expect_fail = [&rep](const Report& sub, const char* what) {
    ++rep.checks;
    if (sub.pass || sub.counterexample.is_null())
      rep.fail({{"expected", "FAIL with counterexample"}, {"witness", what}, {"sub", sub.to_json()}});
  };

  const int m = 4;
  const PolyMatrix mul = diag_algebra_mul(m);
  const PolyVector eta = ones_vec(m);
  const PolyMatrix d = cyclic_difference_matrix(m);
  const PolyMatrix p = strict_partial_sum_matrix(m);
  const PolyMatrix zero = PolyMatrix::Zero(m, m);

  expect_pass(check_derivational_monoid(mul, eta, d, RingPoly(1)),
              "cyclic difference is a 1-weighted derivation");
  expect_fail(check_derivational_monoid(mul, eta, d, RingPoly(0)),
              "cyclic difference is not a 0-weighted derivation");
  expect_pass(check_rb_monoid(mul, eta, p, RingPoly(1)),
              "strict partial sums are a 1-weighted RB operator");
  expect_fail(check_rb_monoid(mul, eta, p, RingPoly(0)),
              "strict partial sums are not a 0-weighted RB operator");
  expect_pass(check_derivational_monoid(mul, eta, zero, lam),
              "the zero map is a derivation of every weight");
  expect_pass(check_rb_monoid(mul, eta, zero, lam),
              "the zero map is an RB operator of every weight");

  // multimorphism shadow: n=2 with f = mu, p_i = p is the RB law itself;
  // n=1 is the plain intertwining square.
  expect_pass(multimorphism_check(mul, {p, p}, p, RingPoly(1)),
              "RB law as a binary multimorphism");
  expect_fail(multimorphism_check(mul, {p, p}, p, RingPoly(0)),
              "weight-0 binary multimorphism must fail for a 1-weighted operator");
  expect_pass(multimorphism_check(p, {p}, p, RingPoly(1)), "unary multimorphism square");

  // R(A,B) carries a monoid structure over the projection graph.
  rep.absorb(graph_mono_check(
      r_monoid(diag_algebra_mul(2), ones_vec(2), diag_algebra_mul(1), ones_vec(1), lam)));

  // K(J(A,p)^op): members built from a free tail satisfy the equalizer
  // constraint, and the lam-Hurwitz/diamond closure holds.
  {
    Endo<FinPoint> baseP{"strict_partial_sums",
                         [](const FinPoint& x) { return strict_partial_sums(x); }};
    rep.absorb(k_subalgebra_check(baseP, RingPoly(1), m, 5, opt.full ? 6 : 3, opt.seed + 100));
    const MatGraph jop = graph_op(j_embed(p));
    const WSeq<FinPoint> member =
        k_member_from_tail(jop, random_finpoint(rng, static_cast<size_t>(m), 4), 6);
    ++rep.checks;
    if (k_member_defect(jop, member) != -1)
      rep.fail({{"law", "K membership from free tail"}, {"member", to_text(member)}});
  }
  return rep;
}

// --- 11. subspace-chain tensor equals the q-Hurwitz product ---
Report suite_q_dim_concordance(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.q_dim_concordance";
  Rng rng(opt.seed + 11);
  const int pairs = opt.full ? 20 : 5;
  const int n_max = opt.full ? 4 : 3;
  rep.params = {{"q", Json::array({2, 3})},
                {"pairs", pairs},
                {"n_max", n_max},
                {"lambda", "formal"},
                {"seed", opt.seed}};
  const RingPoly lam = RingPoly::lambda();
  for (long qv : {2L, 3L}) {
    const QParam qp = QParam::make(qv);
    const auto lats = lattice_tower(qp, n_max);
    for (int p = 0; p < pairs && rep.pass; ++p) {
      DimSeq f = rng.int_vec(static_cast<size_t>(n_max) + 1, 0, 5);
      DimSeq g = rng.int_vec(static_cast<size_t>(n_max) + 1, 0, 5);
      const WSeq<RingPoly> viaq = q_hurwitz_mul(seq_from_dims(f), seq_from_dims(g), lam, qp);
      for (int n = 0; n <= n_max && rep.pass; ++n) {
        const RingPoly structural = q_tensor_dim(f, g, lam, lats[static_cast<size_t>(n)]);
        ++rep.checks;
        if (!(structural == viaq(static_cast<size_t>(n))))
          rep.fail({{"q", qv},
                    {"n", n},
                    {"f", Json(f)},
                    {"g", Json(g)},
                    {"chain_sum", structural.str()},
                    {"q_hurwitz", viaq(static_cast<size_t>(n)).str()}});
      }
    }

    // chain-count identity: #{V <= U : dim U = u, dim V = v} equals the
    // product of Gaussian binomials, by direct lattice scan.
    for (int n = 0; n <= std::min(n_max, 3) && rep.pass; ++n) {
      const SubspaceLattice& lat = lats[static_cast<size_t>(n)];
      for (int u = 0; u <= n && rep.pass; ++u)
        for (int v = 0; v <= u && rep.pass; ++v) {
          BigInt chains = 0;
          for (size_t ui = 0; ui < lat.size(); ++ui) {
            if (lat[ui].dim != u) continue;
            for (size_t vi = 0; vi < lat.size(); ++vi)
              if (lat[vi].dim == v && lat.leq(vi, ui)) chains += 1;
          }
          const BigInt formula =
              gauss_multinomial(n, {u, n - u}, qp) * gauss_multinomial(u, {v, u - v}, qp);
          ++rep.checks;
          if (chains != formula)
            rep.fail({{"law", "chain counts"},
                      {"q", qv},
                      {"n", n},
                      {"dim_u", u},
                      {"dim_v", v},
                      {"scan", bigint_to_json(chains)},
                      {"gauss", bigint_to_json(formula)}});
        }
    }

    // modified flags: weighted count equals the left-bracketed iterate, and
    // the 3-flag block dimensions satisfy the direct-sum bookkeeping.
    for (int n = 0; n <= std::min(n_max, 3) && rep.pass; ++n) {
      const SubspaceLattice& lat = lats[static_cast<size_t>(n)];
      std::vector<DimSeq> fs;
      for (int i = 0; i < 3; ++i) fs.push_back(rng.int_vec(static_cast<size_t>(n) + 1, 0, 4));
      const std::vector<RingPoly> f1(seq_from_dims(fs[0]).entries());
      const std::vector<RingPoly> f2(seq_from_dims(fs[1]).entries());
      const std::vector<RingPoly> f3(seq_from_dims(fs[2]).entries());
      std::vector<SubspaceLattice> sub_lats;
      for (int i = 0; i <= n; ++i) sub_lats.push_back(lats[static_cast<size_t>(i)]);
      ++rep.checks;
      const RingPoly two_flag = mflg_weighted_card(2, {fs[0], fs[1]}, lam, lat);
      const RingPoly two_iter = q_tensor_dim(fs[0], fs[1], lam, lat);
      if (!(two_flag == two_iter)) {
        rep.fail({{"law", "2-flag = binary tensor"},
                  {"q", qv},
                  {"n", n},
                  {"flags", two_flag.str()},
                  {"tensor", two_iter.str()}});
        break;
      }
      ++rep.checks;
      const RingPoly three_flag = mflg_weighted_card(3, fs, lam, lat);
      const RingPoly three_iter =
          q_tensor_dim(q_tensor_seq(f1, f2, lam, sub_lats), f3, lam, lat);
      if (!(three_flag == three_iter)) {
        rep.fail({{"law", "3-flag = left-bracketed tensor"},
                  {"q", qv},
                  {"n", n},
                  {"flags", three_flag.str()},
                  {"tensor", three_iter.str()}});
        break;
      }
      for (const MFlg& flag : mflg_enumerate(3, lat)) {
        const Flag3Dims dims = flag3_block_dims(flag, lat);
        const int u1 = lat[flag.U[1]].dim, u2 = lat[flag.U[2]].dim;
        const int v1 = lat[flag.V[1]].dim, v2 = lat[flag.V[2]].dim;
        const bool nonneg = dims.a1 >= 0 && dims.a2 >= 0 && dims.a3 >= 0 && dims.a12 >= 0 &&
                            dims.a13 >= 0 && dims.a23 >= 0 && dims.a123 >= 0;
        const bool identities =
            dims.sum() == n && u1 - v1 == dims.a12 + dims.a123 &&
            u2 - v2 == dims.a13 + dims.a23 + dims.a123 &&
            u1 == dims.a1 + dims.a12 + dims.a13 + dims.a123 &&
            u2 - v1 == dims.a2 + dims.a12 + dims.a23 + dims.a123 &&
            n - v2 == dims.a3 + dims.a13 + dims.a23 + dims.a123;
        ++rep.checks;
        if (!nonneg || !identities) {
          rep.fail({{"law", "3-flag block dimensions"},
                    {"q", qv},
                    {"n", n},
                    {"dims", Json::array({dims.a1, dims.a2, dims.a3, dims.a12, dims.a13,
                                          dims.a23, dims.a123})},
                    {"u1", u1},
                    {"u2", u2},
                    {"v1", v1},
                    {"v2", v2}});
          break;
        }
      }
    }
  }

  // spot anchors: all-ones inputs over F_2 give chain totals 3 (n=1) and 12 (n=2).
  if (rep.pass) {
    const QParam q2 = QParam::make(2);
    const auto lats = lattice_tower(q2, 2);
    const DimSeq ones{1, 1, 1};
    const RingPoly v1 = q_tensor_dim(ones, ones, RingPoly(1), lats[1]);
    const RingPoly v2 = q_tensor_dim(ones, ones, RingPoly(1), lats[2]);
    ++rep.checks;
    if (!(v1 == RingPoly(3) && v2 == RingPoly(12)))
      rep.fail({{"law", "spot anchors"},
                {"n1", v1.str()},
                {"n2", v2.str()},
                {"expected", Json::array({3, 12})}});
  }
  return rep;
}

// --- 12. associativity evidence for the q-weighted Hurwitz product ---
// The suite passes when the evidence-gathering behaved correctly: every
// trial computed exactly, the unit law held, the lam = 0 control held, the
// structural route agreed with the algebraic one, and the recorded defect
// matches the independently derived closed form. The mathematical outcome
// itself (associativity fails for lam != 0 once q >= 2) is reported as a
// finding in the details, never masked.
Report suite_conjecture_evidence(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.conjecture_evidence";
  const int trials = opt.full ? 100 : 10;
  rep.params = {{"q", Json::array({2, 3, 5, 6})},
                {"trunc", 8},
                {"trials", trials},
                {"lambda", "formal"},
                {"seed", opt.seed}};
  const RingPoly lam = RingPoly::lambda();
  Json findings = Json::array();
  for (long qv : {2L, 3L, 5L, 6L}) {
    const Report ev =
        conjecture_evidence(lam, qv, 8, trials, opt.seed + static_cast<std::uint64_t>(qv));
    const Report ctrl = conjecture_evidence(RingPoly(0), qv, 8, opt.full ? 25 : 5,
                                            opt.seed + 1000 + static_cast<std::uint64_t>(qv));
    const bool defect_found = ev.details.value("assoc", true) == false;
    const bool unit_ok = ev.details.value("unit", false);
    const bool lam_zero_ok = ev.details.value("assoc_at_lambda_zero", false) && ctrl.pass;
    bool structural_ok = true;
    if (qv <= 3) {
      const std::string route = ev.details.value("structural_route", std::string());
      structural_ok = route.rfind("agrees", 0) == 0;
    }
    // cross-validate the defect against the closed form on a fixed triple:
    // f = iota, g = h = ones gives (f.g).h - f.(g.h) = lam^2 (q^2 - 1) at n = 2.
    const QParam qp = QParam::make(qv);
    const WSeq<RingPoly> f = seq_iota(8), g = seq_ones(8), h = seq_ones(8);
    const WSeq<RingPoly> lhs = q_hurwitz_mul(q_hurwitz_mul(f, g, lam, qp), h, lam, qp);
    const WSeq<RingPoly> rhs = q_hurwitz_mul(f, q_hurwitz_mul(g, h, lam, qp), lam, qp);
    const RingPoly defect = lhs(2) - rhs(2);
    const RingPoly closed_form = RingPoly::monomial(BigInt(qv * qv - 1), 2);
    const bool defect_matches = (defect == closed_form);
    rep.checks += ev.checks + ctrl.checks + 1;
    Json finding = {{"q", qv},
                    {"assoc_defect_found", defect_found},
                    {"unit", unit_ok},
                    {"lambda_zero_control", lam_zero_ok},
                    {"structural_route", ev.details.value("structural_route", std::string())},
                    {"n2_defect_fixed_triple", defect.str()},
                    {"n2_defect_matches_closed_form", defect_matches},
                    {"first_defect", ev.counterexample}};
    findings.push_back(finding);
    if (!(defect_found && unit_ok && lam_zero_ok && structural_ok && defect_matches))
      rep.fail({{"q", qv}, {"finding", finding}});
  }
  rep.details = {
      {"finding",
       "the q-weighted Hurwitz product with Gaussian multinomial coefficients is associative "
       "only at lam = 0 once q >= 2; at n = 2 the bracketing difference equals "
       "lam^2 (q^2-1) g(1) (f(2)h(1) - f(1)h(2))"},
      {"per_q", findings}};
  return rep;
}

// --- 13. mutation sensitivity: dropped lam-cross-terms are detected ---
Report suite_mutation_sensitivity(const VerifyOptions& opt) {
  Report rep;
  rep.op = "suite.mutation_sensitivity";
  Rng rng(opt.seed + 13);
  rep.params = {{"seed", opt.seed}};
  Json demonstrations = Json::array();

  auto expect_pass = [&rep](const Report& sub, const char* what) {
    ++rep.checks;
    if (!sub.pass)
      rep.fail({{"expected", "PASS"}, {"witness", what}, {"sub", sub.to_json()}});
  };
  auto expect_fail = [&rep, &demonstrations](const Report& sub, const char* what) {
    ++rep.checks;
    if (sub.pass || sub.counterexample.is_null())
      rep.fail(
          {{"expected", "FAIL with counterexample"}, {"witness", what}, {"sub", sub.to_json()}});
    else
      demonstrations.push_back(Json{{"mutation", what}, {"counterexample", sub.counterexample}});
  };

  // (a) derivation law without the lam d(a)d(b) term: run the checker at
  // lam = 0 against the genuinely 1-weighted cyclic-difference witness.
  {
    std::vector<FinPoint> samples{FinPoint::from_ints({0, 1, 4, 9, 16, 25})};
    for (int i = 0; i < 3; ++i) samples.push_back(random_finpoint(rng, 6, 4));
    Endo<FinPoint> d{"cyclic_difference", [](const FinPoint& x) { return cyclic_difference(x); }};
    auto mul = [](const FinPoint& a, const FinPoint& b) { return a * b; };
    expect_pass(check_weighted_derivation(mul, d, RingPoly(1), samples),
                "derivation law with the lam-term present");
    expect_fail(check_weighted_derivation(mul, d, RingPoly(0), samples),
                "derivation law with the lam-term dropped");
  }

  // (b) RB law without the lam ab term.
  {
    std::vector<WSeq<RingPoly>> samples{seq_ones(8)};
    for (int i = 0; i < 3; ++i) samples.push_back(random_poly_seq(rng, 8, 1, 3));
    Endo<WSeq<RingPoly>> P{"partial_sums",
                           [](const WSeq<RingPoly>& f) { return partial_sums(f); }};
    auto mul = [](const WSeq<RingPoly>& a, const WSeq<RingPoly>& b) {
      return pointwise_mul(a, b);
    };
    expect_pass(check_rb_operator(mul, P, RingPoly(1), samples),
                "RB law with the lam-term present");
    expect_fail(check_rb_operator(mul, P, RingPoly(0), samples),
                "RB law with the lam-term dropped");
  }

  // (c) graph tensor with the lam s(x)s term dropped from the source: the
  // derivation square for J(A,d)(x)J(A,d) -> J(A,d) must stop commuting.
  {
    const int m = 4;
    const RingPoly one(1);
    const PolyMatrix mul = diag_algebra_mul(m);
    const PolyMatrix d = cyclic_difference_matrix(m);
    const MatGraph j = j_embed(d);
    const MatGraph correct = graph_tensor(j, j, one);
    MatGraph mutated = correct;
    mutated.s = kron(j.s, j.t) + kron(j.t, j.s);  // lam s(x)s dropped
    ++rep.checks;
    if (!is_graph_morphism(correct, j, mul, mul))
      rep.fail({{"expected", "PASS"}, {"witness", "correct tensor source"}});
    ++rep.checks;
    const PolyMatrix lhs = mul * mutated.s;
    const PolyMatrix rhs = j.s * mul;
    if (is_graph_morphism(mutated, j, mul, mul)) {
      rep.fail({{"expected", "FAIL"}, {"witness", "mutated tensor source went undetected"}});
    } else {
      Json ce;
      for (Eigen::Index r = 0; r < lhs.rows() && ce.is_null(); ++r)
        for (Eigen::Index c = 0; c < lhs.cols() && ce.is_null(); ++c)
          if (!(lhs(r, c) == rhs(r, c)))
            ce = Json{{"row", r},
                      {"col", c},
                      {"mu o s_mutated", lhs(r, c).str()},
                      {"s o mu", rhs(r, c).str()}};
      demonstrations.push_back(
          Json{{"mutation", "graph tensor source without lam s(x)s"}, {"counterexample", ce}});
    }
  }

  rep.details = {{"demonstrations", demonstrations}};
  return rep;
}

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = {
      {"hurwitz.laws", "associativity and unit of the lam-weighted Hurwitz product",
       suite_hurwitz_laws},
      {"hurwitz.generalized_leibniz", "d* is an algebra morphism (generalized Leibniz rule)",
       suite_generalized_leibniz},
      {"hurwitz.rota_baxter", "partial sums, the sequence lift, and the diamond product",
       suite_rota_baxter},
      {"species.tensor_counts", "structure enumeration matches the Hurwitz product of cardinalities",
       suite_species_tensor_counts},
      {"species.formula_concordance", "n-fold digit formula vs iterated binary vs filtrations",
       suite_formula_concordance},
      {"species.flag3_bijection", "3-flags correspond to 7-block partitions, both roundtrips",
       suite_flag3_bijection},
      {"species.cov_census", "Cov census closed form and weighted contraction",
       suite_cov_census},
      {"species.delta_monoidal", "Delta is strong monoidal on weighted multisets",
       suite_delta_monoidal},
      {"species.shift_leibniz", "cardinality Leibniz rule for shifted species",
       suite_shift_leibniz},
      {"gph.tensor_coherence", "graph tensor coherence and the monoid witnesses",
       suite_graph_coherence},
      {"qcharade.dim_concordance", "subspace-chain tensor equals the q-Hurwitz product",
       suite_q_dim_concordance},
      {"qcharade.conjecture_evidence", "associativity evidence for the q-weighted product",
       suite_conjecture_evidence},
      {"meta.mutation_sensitivity", "dropped lam-cross-terms are detected with counterexamples",
       suite_mutation_sensitivity},
  };
  return registry;
}

VerifyOutcome verify_all(const VerifyOptions& opt) {
  VerifyOutcome out;
  out.reports.reserve(suite_registry().size());
  for (const Suite& suite : suite_registry()) {
    Report rep = suite.run(opt);
    rep.params["level"] = opt.full ? "full" : "quick";
    out.all_pass = out.all_pass && rep.pass;
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace wtensor
