#include <wtensor/counts.hpp>
#include <wtensor/species_tensor.hpp>

#include <algorithm>
#include <stdexcept>

namespace wtensor {

void l_tensor_for_each(const SetSpecies& f, const SetSpecies& g, const LWeight& l, LabelSet x,
                       const std::function<void(const Quintuple&)>& fn) {
  if (l.is_formal())
    throw std::invalid_argument("l_tensor enumeration requires a finite color set");
  const long colors = l.colors();
  for (LabelSet u : submasks_sorted(x)) {
    const LabelSet rest = x & ~u;
    std::vector<Structure> fu = f.structures(u);
    if (fu.empty()) continue;
    for (LabelSet w : submasks_sorted(u)) {
      const LabelSet v = rest | w;  // covers: V must contain X \ U
      std::vector<Structure> gv = g.structures(v);
      if (gv.empty()) continue;
      const LabelSet overlap = u & v;
      const size_t k = static_cast<size_t>(set_size(overlap));
      if (k > 0 && colors == 0) continue;
      // Odometer over colorings of the overlap.
      std::vector<int> coloring(k, 0);
      while (true) {
        for (const Structure& phi : fu)
          for (const Structure& gamma : gv) fn(Quintuple{u, v, coloring, phi, gamma});
        size_t pos = 0;
        while (pos < k && ++coloring[pos] == colors) coloring[pos++] = 0;
        if (pos == k) break;
      }
    }
  }
}

std::vector<Quintuple> l_tensor_structures(const SetSpecies& f, const SetSpecies& g,
                                           const LWeight& l, LabelSet x) {
  if (set_size(x) > kMaxLabels) throw std::invalid_argument("l_tensor: label set too large");
  constexpr size_t kCap = 5'000'000;
  std::vector<Quintuple> out;
  l_tensor_for_each(f, g, l, x, [&](const Quintuple& q) {
    if (out.size() >= kCap) throw std::length_error("l_tensor_structures: enumeration budget");
    out.push_back(q);
  });
  return out;
}

BigInt l_tensor_count(const SetSpecies& f, const SetSpecies& g, const LWeight& l, LabelSet x) {
  if (l.is_formal())
    throw std::invalid_argument("l_tensor_count requires a finite color set");
  BigInt total(0);
  const BigInt colors(l.colors());
  for (LabelSet u : submasks_sorted(x)) {
    const LabelSet rest = x & ~u;
    const BigInt cf = f.count(set_size(u));
    if (cf == 0) continue;
    for (LabelSet w : submasks_sorted(u)) {
      const LabelSet v = rest | w;
      const BigInt cg = g.count(set_size(v));
      if (cg == 0) continue;
      total += int_pow(colors, static_cast<unsigned long>(set_size(u & v))) * cf * cg;
    }
  }
  return total;
}

RingPoly l_tensor_card(const SpeciesCard& f, const SpeciesCard& g, const RingPoly& lam, int n) {
  if (n < 0 || static_cast<size_t>(n) >= f.size() || static_cast<size_t>(n) >= g.size())
    throw std::out_of_range("l_tensor_card: n out of range of the cardinality sequences");
  RingPoly acc;
  for (long r = 0; r <= n; ++r)
    for (long t = 0; r + t <= n; ++t) {
      const long s = n - r - t;
      RingPoly c = RingPoly(multinomial(n, {r, s, t})) * lam.pow(static_cast<unsigned>(t));
      acc += c * RingPoly(BigInt(f[static_cast<size_t>(r + t)]) * g[static_cast<size_t>(s + t)]);
    }
  return acc;
}

RingPoly nfold_tensor_card(const std::vector<SpeciesCard>& fs, const RingPoly& lam,
                           int n_labels) {
  const int k = static_cast<int>(fs.size());
  if (k < 1) throw std::invalid_argument("nfold_tensor_card: need at least one factor");
  if (n_labels < 0) throw std::invalid_argument("nfold_tensor_card: negative label count");
  for (const auto& f : fs)
    if (static_cast<size_t>(n_labels) >= f.size())
      throw std::out_of_range("nfold_tensor_card: cardinality sequence too short");
  const unsigned long digits = (1ul << k) - 1ul;  // nonempty subsets of <k>
  double budget = 1.0;
  for (int i = 0; i < n_labels; ++i) budget *= static_cast<double>(digits);
  if (budget > 200000.0)
    throw std::length_error("nfold_tensor_card: enumeration budget exceeded");

  RingPoly total;
  std::vector<unsigned> assign(static_cast<size_t>(n_labels), 1);  // digit per label, 1..digits
  std::vector<int> block_size(digits + 1, 0);
  while (true) {
    std::fill(block_size.begin(), block_size.end(), 0);
    for (unsigned d : assign) ++block_size[d];
    long lam_exp = 0;
    for (unsigned d = 1; d <= digits; ++d)
      lam_exp += static_cast<long>(std::popcount(d) - 1) * block_size[d];
    BigInt prod(1);
    for (int i = 0; i < k && prod != 0; ++i) {
      int ni = 0;
      for (unsigned d = 1; d <= digits; ++d)
        if (d & (1u << i)) ni += block_size[d];
      prod *= fs[static_cast<size_t>(i)][static_cast<size_t>(ni)];
    }
    if (prod != 0)
      total += RingPoly(prod) * lam.pow(static_cast<unsigned>(lam_exp));
    // odometer; for n_labels = 0 the body ran once on the empty assignment
    size_t pos = 0;
    while (pos < assign.size() && ++assign[pos] > digits) assign[pos++] = 1;
    if (pos == assign.size()) break;
  }
  return total;
}

Quintuple transport_quintuple(const SetSpecies& f, const SetSpecies& g, const LabelPerm& sigma,
                              const Quintuple& q) {
  Quintuple out;
  out.U = apply_perm(sigma, q.U);
  out.V = apply_perm(sigma, q.V);
  // The coloring is indexed by ascending labels of the overlap; re-index it.
  std::vector<int> src = elements(q.U & q.V);
  std::vector<int> dst = elements(out.U & out.V);
  out.coloring.resize(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    int moved = sigma[static_cast<size_t>(src[i])];
    size_t j = static_cast<size_t>(
        std::lower_bound(dst.begin(), dst.end(), moved) - dst.begin());
    out.coloring[j] = q.coloring[i];
  }
  out.phi = f.transport(sigma, q.phi);
  out.gamma = g.transport(sigma, q.gamma);
  return out;
}

void cov_for_each(int a, int b, int n,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                           int)>& fn) {
  if (a < 0 || b < 0 || n < 0 || a > 6 || b > 6 || n > 6)
    throw std::length_error("cov_enumerate: budget is a,b,n <= 6");
  std::vector<std::vector<int>> injections;
  std::vector<int> cur;
  unsigned used = 0;
  std::function<void(int, int)> gen = [&](int len, int target) {
    if (len == target) {
      injections.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v)
      if (!(used & (1u << v))) {
        used |= (1u << v);
        cur.push_back(v);
        gen(len + 1, target);
        cur.pop_back();
        used &= ~(1u << v);
      }
  };
  gen(0, a);
  std::vector<std::vector<int>> mu_list = std::move(injections);
  injections.clear();
  gen(0, b);
  const std::vector<std::vector<int>>& nu_list = injections;

  const unsigned full = n ? ((1u << n) - 1u) : 0u;
  for (const auto& mu : mu_list) {
    unsigned im_mu = 0;
    for (int v : mu) im_mu |= (1u << v);
    for (const auto& nu : nu_list) {
      unsigned im_nu = 0;
      for (int v : nu) im_nu |= (1u << v);
      if ((im_mu | im_nu) != full) continue;
      fn(mu, nu, std::popcount(im_mu & im_nu));
    }
  }
}

std::map<int, BigInt> cov_enumerate(int a, int b, int n) {
  std::map<int, BigInt> census;
  cov_for_each(a, b, n, [&](const std::vector<int>&, const std::vector<int>&, int c) {
    auto [it, inserted] = census.emplace(c, 1);
    if (!inserted) it->second += 1;
  });
  return census;
}

WeightedPairs delta_fam(int n_labels, const RingPoly& lam) {
  if (n_labels < 0 || n_labels > 6) throw std::length_error("delta_fam: budget is |X| <= 6");
  WeightedPairs out;
  std::vector<int> assign(static_cast<size_t>(n_labels), 0);  // 0 -> A, 1 -> B, 2 -> C
  while (true) {
    int na = 0, nb = 0, nc = 0;
    for (int d : assign) (d == 0 ? na : d == 1 ? nb : nc)++;
    out[{na + nc, nb + nc}] += lam.pow(static_cast<unsigned>(nc));
    size_t pos = 0;
    while (pos < assign.size() && ++assign[pos] == 3) assign[pos++] = 0;
    if (pos == assign.size()) break;
  }
  // Drop zero weights for canonical comparison (possible when lam = 0).
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Report delta_monoidal_check(int x, int y, const RingPoly& lam) {
  Report rep;
  rep.op = "species.delta_monoidal_check";
  rep.params = {{"x", x}, {"y", y}, {"lambda", lam.str()}};
  WeightedPairs whole = delta_fam(x + y, lam);
  WeightedPairs dx = delta_fam(x, lam);
  WeightedPairs dy = delta_fam(y, lam);
  WeightedPairs conv;
  for (const auto& [k1, w1] : dx)
    for (const auto& [k2, w2] : dy) {
      RingPoly prod = w1 * w2;
      if (!prod.is_zero()) conv[{k1.first + k2.first, k1.second + k2.second}] += prod;
    }
  for (auto it = conv.begin(); it != conv.end();)
    it = it->second.is_zero() ? conv.erase(it) : std::next(it);
  ++rep.checks;
  if (whole != conv) {
    // Locate the first differing key for the counterexample.
    Json diff = Json::array();
    auto dump = [](const WeightedPairs& m) {
      Json j = Json::array();
      for (const auto& [k, w] : m)
        j.push_back({{"u", k.first}, {"v", k.second}, {"weight", w.str()}});
      return j;
    };
    diff.push_back({{"delta(X+Y)", dump(whole)}, {"conv(delta X, delta Y)", dump(conv)}});
    rep.fail(diff);
  }
  return rep;
}

Report shift_leibniz_card_check(const SpeciesCard& f, const SpeciesCard& g, const RingPoly& lam,
                                int x, int y) {
  Report rep;
  rep.op = "species.shift_leibniz_card_check";
  rep.params = {{"x", x}, {"y", y}, {"lambda", lam.str()}};
  if (x < 0 || y < 0 || static_cast<size_t>(x + y) >= std::min(f.size(), g.size()))
    throw std::out_of_range("shift_leibniz_card_check: x + y outside truncation");
  RingPoly lhs = l_tensor_card(f, g, lam, x + y);
  RingPoly rhs;
  for (long r = 0; r <= x; ++r)
    for (long t = 0; r + t <= x; ++t) {
      const long s = x - r - t;
      SpeciesCard fshift(f.begin() + (r + t), f.end());
      SpeciesCard gshift(g.begin() + (s + t), g.end());
      RingPoly c = RingPoly(multinomial(x, {r, s, t})) * lam.pow(static_cast<unsigned>(t));
      rhs += c * l_tensor_card(fshift, gshift, lam, y);
    }
  ++rep.checks;
  if (lhs != rhs) rep.fail({{"lhs", lhs.str()}, {"rhs", rhs.str()}});
  rep.details = {{"value", lhs.str()}};
  return rep;
}

VennBijection venn_bijection(LabelSet u, LabelSet v, LabelSet w) {
  VennBijection out;
  LabelSet all = u | v | w;
  for (int e : elements(all)) {
    const bool in_u = u & (1u << e), in_v = v & (1u << e), in_w = w & (1u << e);
    std::vector<int> lhs, rhs;  // components in which e occurs, in order
    if ((in_u || in_v) && in_w) lhs.push_back(0);
    if (in_u && in_v) lhs.push_back(1);
    if (in_u && (in_v || in_w)) rhs.push_back(0);
    if (in_v && in_w) rhs.push_back(1);
    // Pointwise the two occurrence lists have equal length (8-case Venn
    // check); pair them in component order.
    out.lhs_size += lhs.size();
    out.rhs_size += rhs.size();
    if (lhs.size() != rhs.size())
      throw std::logic_error("venn_bijection: occurrence counts differ (internal)");
    for (size_t i = 0; i < lhs.size(); ++i) out.pairs.push_back(VennPair{e, lhs[i], rhs[i]});
  }
  return out;
}

}  // namespace wtensor
