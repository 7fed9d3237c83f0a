#include <wtensor/graph.hpp>

#include <bit>
#include <stdexcept>
#include <utility>

namespace wtensor {

namespace {

PolyMatrix identity(int m) { return PolyMatrix::Identity(m, m); }

// Left-to-right Kronecker chain.
PolyMatrix kron_chain(const std::vector<const PolyMatrix*>& ms) {
  PolyMatrix out = *ms.front();
  for (size_t i = 1; i < ms.size(); ++i) out = kron(out, *ms[i]);
  return out;
}

// First differing entry of two equal-shaped matrices.
Json mat_diff_json(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j)))
        return Json{{"row", i}, {"col", j}, {"lhs", lhs(i, j).str()}, {"rhs", rhs(i, j).str()}};
  return Json();
}

void require_structure_shapes(const PolyMatrix& mul, const PolyVector& eta) {
  const Eigen::Index m = mul.rows();
  if (mul.cols() != m * m || eta.rows() != m)
    throw std::invalid_argument("monoid structure: mul must be m x m^2, eta m x 1");
}

}  // namespace

MatGraph make_graph(PolyMatrix s, PolyMatrix t) {
  if (s.rows() != t.rows() || s.cols() != t.cols())
    throw std::invalid_argument("make_graph: s and t must be parallel (same shape)");
  MatGraph g;
  g.dimA = static_cast<int>(s.rows());
  g.dimE = static_cast<int>(s.cols());
  g.s = std::move(s);
  g.t = std::move(t);
  return g;
}

MatGraph unit_graph() {
  PolyMatrix s(1, 1), t(1, 1);
  s(0, 0) = RingPoly(0);
  t(0, 0) = RingPoly(1);
  return make_graph(std::move(s), std::move(t));
}

bool graph_eq(const MatGraph& a, const MatGraph& b) {
  return a.dimA == b.dimA && a.dimE == b.dimE && mat_eq(a.s, b.s) && mat_eq(a.t, b.t);
}

MatGraph graph_tensor(const MatGraph& g1, const MatGraph& g2, const RingPoly& lam) {
  PolyMatrix s = kron(g1.s, g2.s) * lam + kron(g1.s, g2.t) + kron(g1.t, g2.s);
  PolyMatrix t = kron(g1.t, g2.t);
  return make_graph(std::move(s), std::move(t));
}

MatGraph graph_tensor_n(const std::vector<MatGraph>& gs, const RingPoly& lam) {
  const int n = static_cast<int>(gs.size());
  if (n < 1 || n > 4) throw std::length_error("graph_tensor_n: budget is 1 <= n <= 4");
  std::vector<const PolyMatrix*> ts;
  ts.reserve(gs.size());
  for (const MatGraph& g : gs) ts.push_back(&g.t);
  PolyMatrix t = kron_chain(ts);
  PolyMatrix s = PolyMatrix::Zero(t.rows(), t.cols());
  for (unsigned r = 1; r < (1u << n); ++r) {
    std::vector<const PolyMatrix*> factors;
    factors.reserve(gs.size());
    for (int i = 0; i < n; ++i)
      factors.push_back((r >> i) & 1u ? &gs[static_cast<size_t>(i)].s
                                      : &gs[static_cast<size_t>(i)].t);
    s += kron_chain(factors) * lam.pow(static_cast<unsigned>(std::popcount(r)) - 1);
  }
  return make_graph(std::move(s), std::move(t));
}

MatGraph graph_op(const MatGraph& g) {
  MatGraph out = g;
  std::swap(out.s, out.t);
  return out;
}

MatGraph j_embed(const PolyMatrix& e) {
  if (e.rows() != e.cols()) throw std::invalid_argument("j_embed: endomorphism must be square");
  return make_graph(e, identity(static_cast<int>(e.rows())));
}

bool is_graph_morphism(const MatGraph& src, const MatGraph& dst, const PolyMatrix& f,
                       const PolyMatrix& phi) {
  if (f.rows() != dst.dimA || f.cols() != src.dimA || phi.rows() != dst.dimE ||
      phi.cols() != src.dimE)
    throw std::invalid_argument("is_graph_morphism: component shapes do not match the graphs");
  return mat_eq(PolyMatrix(f * src.s), PolyMatrix(dst.s * phi)) &&
         mat_eq(PolyMatrix(f * src.t), PolyMatrix(dst.t * phi));
}

bool monoid_axioms_hold(const PolyMatrix& mul, const PolyVector& eta) {
  require_structure_shapes(mul, eta);
  const int m = static_cast<int>(mul.rows());
  PolyMatrix id = identity(m);
  bool assoc = mat_eq(PolyMatrix(mul * kron(mul, id)), PolyMatrix(mul * kron(id, mul)));
  bool left_unit = mat_eq(PolyMatrix(mul * kron(PolyMatrix(eta), id)), id);
  bool right_unit = mat_eq(PolyMatrix(mul * kron(id, PolyMatrix(eta))), id);
  return assoc && left_unit && right_unit;
}

Report check_derivational_monoid(const PolyMatrix& mulA, const PolyVector& etaA,
                                 const PolyMatrix& d, const RingPoly& lam) {
  require_structure_shapes(mulA, etaA);
  const int m = static_cast<int>(mulA.rows());
  if (d.rows() != m || d.cols() != m)
    throw std::invalid_argument("check_derivational_monoid: d must be m x m");
  Report rep;
  rep.op = "gph.check_derivational_monoid";
  rep.params = {{"dimA", m}, {"lambda", lam.str()}};

  const bool monoid = monoid_axioms_hold(mulA, etaA);
  PolyMatrix id = identity(m);
  PolyMatrix lhs = d * mulA;
  PolyMatrix rhs = mulA * PolyMatrix(kron(d, d) * lam + kron(d, id) + kron(id, d));
  const bool eq_mul = mat_eq(lhs, rhs);
  const bool eq_unit = mat_eq(PolyVector(d * etaA), PolyVector(PolyVector::Zero(m)));

  // Independent route: the same data as a monoid on J(A,d) under the
  // weighted tensor.
  MatGraph j = j_embed(d);
  PolyMatrix eta_m = etaA;
  const bool square_mul = is_graph_morphism(graph_tensor(j, j, lam), j, mulA, mulA);
  const bool square_unit = is_graph_morphism(unit_graph(), j, eta_m, eta_m);
  const bool routes_agree = (eq_mul == square_mul) && (eq_unit == square_unit);

  rep.checks = 5;
  rep.details = {{"monoid_axioms", monoid},
                 {"derivation_equation", eq_mul},
                 {"unit_equation", eq_unit},
                 {"graph_route_mul_square", square_mul},
                 {"graph_route_unit_square", square_unit},
                 {"routes_agree", routes_agree}};
  if (!(monoid && eq_mul && eq_unit && routes_agree)) {
    Json ce{{"mulA", mat_to_strings(mulA)}, {"d", mat_to_strings(d)}};
    if (!eq_mul) ce["derivation_equation_diff"] = mat_diff_json(lhs, rhs);
    if (!eq_unit) ce["d_eta"] = mat_to_strings(PolyMatrix(d * etaA));
    rep.fail(std::move(ce));
  }
  return rep;
}

Report check_rb_monoid(const PolyMatrix& mulA, const PolyVector& etaA, const PolyMatrix& p,
                       const RingPoly& lam) {
  require_structure_shapes(mulA, etaA);
  const int m = static_cast<int>(mulA.rows());
  if (p.rows() != m || p.cols() != m)
    throw std::invalid_argument("check_rb_monoid: p must be m x m");
  Report rep;
  rep.op = "gph.check_rb_monoid";
  rep.params = {{"dimA", m}, {"lambda", lam.str()}};

  const bool monoid = monoid_axioms_hold(mulA, etaA);
  PolyMatrix id = identity(m);
  PolyMatrix twist = kron(id, id) * lam + kron(id, p) + kron(p, id);
  PolyMatrix lhs = mulA * kron(p, p);
  PolyMatrix rhs = p * mulA * twist;
  const bool rb = mat_eq(lhs, rhs);

  // Independent route: a semigroup structure on J^op(A,p). The edge
  // multiplication is forced to phi = mu twist (the diamond product).
  MatGraph jop = graph_op(j_embed(p));
  MatGraph square = graph_tensor(jop, jop, lam);
  PolyMatrix phi = mulA * twist;
  const bool morph = is_graph_morphism(square, jop, mulA, phi);
  const bool diamond_assoc =
      mat_eq(PolyMatrix(phi * kron(phi, id)), PolyMatrix(phi * kron(id, phi)));
  const bool routes_agree = (rb == morph);
  const bool consistent = !rb || diamond_assoc;

  rep.checks = 5;
  rep.details = {{"monoid_axioms", monoid},
                 {"rb_equation", rb},
                 {"graph_route_morphism", morph},
                 {"diamond_associative", diamond_assoc},
                 {"routes_agree", routes_agree}};
  if (!(monoid && rb && routes_agree && consistent)) {
    Json ce{{"mulA", mat_to_strings(mulA)}, {"p", mat_to_strings(p)}};
    if (!rb) ce["rb_equation_diff"] = mat_diff_json(lhs, rhs);
    rep.fail(std::move(ce));
  }
  return rep;
}

Report multimorphism_check(const PolyMatrix& f, const std::vector<PolyMatrix>& ps,
                           const PolyMatrix& p, const RingPoly& lam) {
  const int n = static_cast<int>(ps.size());
  if (n < 1 || n > 3) throw std::length_error("multimorphism_check: budget is 1 <= n <= 3");
  Eigen::Index cols = 1;
  for (const PolyMatrix& pi : ps) {
    if (pi.rows() != pi.cols()) throw std::invalid_argument("multimorphism_check: p_i not square");
    cols *= pi.rows();
  }
  if (p.rows() != p.cols() || f.rows() != p.rows() || f.cols() != cols)
    throw std::invalid_argument("multimorphism_check: f must be dim(B) x prod dim(A_i)");
  Report rep;
  rep.op = "gph.multimorphism_check";
  rep.params = {{"n", n}, {"lambda", lam.str()}};

  std::vector<const PolyMatrix*> all_ps;
  for (const PolyMatrix& pi : ps) all_ps.push_back(&pi);
  PolyMatrix lhs = f * kron_chain(all_ps);

  std::vector<PolyMatrix> ids;
  ids.reserve(ps.size());
  for (const PolyMatrix& pi : ps) ids.push_back(identity(static_cast<int>(pi.rows())));
  PolyMatrix sum = PolyMatrix::Zero(cols, cols);
  for (unsigned r = 1; r < (1u << n); ++r) {
    std::vector<const PolyMatrix*> factors;
    for (int i = 0; i < n; ++i)
      factors.push_back((r >> i) & 1u ? &ids[static_cast<size_t>(i)]
                                      : &ps[static_cast<size_t>(i)]);
    sum += kron_chain(factors) * lam.pow(static_cast<unsigned>(std::popcount(r)) - 1);
  }
  PolyMatrix rhs = p * f * sum;

  rep.checks = 1;
  if (!mat_eq(lhs, rhs))
    rep.fail(Json{{"f", mat_to_strings(f)},
                  {"p", mat_to_strings(p)},
                  {"diff", mat_diff_json(lhs, rhs)}});
  return rep;
}

GraphMono r_monoid(const PolyMatrix& mulA, const PolyVector& etaA, const PolyMatrix& mulB,
                   const PolyVector& etaB, const RingPoly& lam) {
  require_structure_shapes(mulA, etaA);
  require_structure_shapes(mulB, etaB);
  const int a = static_cast<int>(mulA.rows());
  const int b = static_cast<int>(mulB.rows());
  const int e = 2 * a + b;

  PolyMatrix pr1 = PolyMatrix::Zero(a, e), pr2 = PolyMatrix::Zero(a, e),
             prb = PolyMatrix::Zero(b, e);
  pr1.block(0, 0, a, a) = identity(a);
  pr2.block(0, a, a, a) = identity(a);
  prb.block(0, 2 * a, b, b) = identity(b);
  PolyMatrix ins1 = PolyMatrix::Zero(e, a), ins2 = PolyMatrix::Zero(e, a),
             insb = PolyMatrix::Zero(e, b);
  ins1.block(0, 0, a, a) = identity(a);
  ins2.block(a, 0, a, a) = identity(a);
  insb.block(2 * a, 0, b, b) = identity(b);

  GraphMono mono;
  mono.lam = lam;
  mono.base = make_graph(pr1, pr2);
  mono.mulA = mulA;
  mono.etaA = etaA;
  mono.mulE = ins1 * mulA * PolyMatrix(kron(pr1, pr1) * lam + kron(pr1, pr2) + kron(pr2, pr1)) +
              ins2 * mulA * kron(pr2, pr2) + insb * mulB * kron(prb, prb);
  mono.etaE = ins2 * etaA + insb * etaB;
  return mono;
}

Report graph_mono_check(const GraphMono& m) {
  Report rep;
  rep.op = "gph.graph_mono_check";
  rep.params = {{"dimA", m.base.dimA}, {"dimE", m.base.dimE}, {"lambda", m.lam.str()}};
  const bool vertices = monoid_axioms_hold(m.mulA, m.etaA);
  const bool edges = monoid_axioms_hold(m.mulE, m.etaE);
  const bool mul_square =
      is_graph_morphism(graph_tensor(m.base, m.base, m.lam), m.base, m.mulA, m.mulE);
  const bool unit_square =
      is_graph_morphism(unit_graph(), m.base, PolyMatrix(m.etaA), PolyMatrix(m.etaE));
  rep.checks = 4;
  rep.details = {{"vertex_monoid", vertices},
                 {"edge_monoid", edges},
                 {"mul_square", mul_square},
                 {"unit_square", unit_square}};
  if (!(vertices && edges && mul_square && unit_square))
    rep.fail(Json{{"mulE", mat_to_strings(m.mulE)},
                  {"etaE", mat_to_strings(PolyMatrix(m.etaE))}});
  return rep;
}

long k_member_defect(const MatGraph& g, const WSeq<FinPoint>& e) {
  for (size_t n = 0; n < e.trunc(); ++n)
    if (e(n).size() != g.dimE)
      throw std::invalid_argument("k_member_defect: entries must live in E");
  for (size_t n = 0; n + 1 < e.trunc(); ++n) {
    PolyVector lhs = g.s * e(n).vec();
    PolyVector rhs = g.t * e(n + 1).vec();
    if (!mat_eq(lhs, rhs)) return static_cast<long>(n);
  }
  return -1;
}

WSeq<FinPoint> k_member_from_tail(const MatGraph& g, const FinPoint& tail, int n_entries) {
  if (n_entries < 1 || n_entries > 8)
    throw std::length_error("k_member_from_tail: budget is 1 <= n_entries <= 8");
  if (g.dimA != g.dimE || !mat_eq(g.s, identity(g.dimA)))
    throw std::invalid_argument("k_member_from_tail: needs s = identity (a J^op graph)");
  if (tail.size() != g.dimE)
    throw std::invalid_argument("k_member_from_tail: tail must live in E");
  std::vector<FinPoint> e(static_cast<size_t>(n_entries), tail);
  for (int n = n_entries - 2; n >= 0; --n)
    e[static_cast<size_t>(n)] =
        FinPoint(PolyVector(g.t * e[static_cast<size_t>(n) + 1].vec()));
  return WSeq<FinPoint>(std::move(e));
}

PolyMatrix diag_algebra_mul(int m) {
  PolyMatrix mul = PolyMatrix::Zero(m, m * m);
  for (int i = 0; i < m; ++i) mul(i, i * m + i) = RingPoly(1);
  return mul;
}

PolyVector ones_vec(int m) { return PolyVector::Constant(m, RingPoly(1)); }

PolyMatrix cyclic_difference_matrix(int m) {
  PolyMatrix d = PolyMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    d(i, (i + 1) % m) += RingPoly(1);
    d(i, i) -= RingPoly(1);
  }
  return d;
}

PolyMatrix strict_partial_sum_matrix(int m) {
  PolyMatrix p = PolyMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) p(i, j) = RingPoly(1);
  return p;
}

}  // namespace wtensor
