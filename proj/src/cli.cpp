#include <wtensor/cli.hpp>

#include <CLI11.hpp>

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
#include <wtensor/suites.hpp>
#include <wtensor/wseq.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wtensor {
namespace {

// Report/values sink: every line goes to stdout and, when --json is given,
// to the file as well. FAIL lines flip the process exit code to 1.
struct Ctx {
  std::ostream& out;
  std::ostream& err;
  std::string json_path;
  std::ofstream json_file;
  bool file_open = false;
  bool any_fail = false;

  void emit(const Json& j) {
    const std::string line = j.dump();
    out << line << "\n";
    if (!json_path.empty()) {
      if (!file_open) {
        json_file.open(json_path);
        file_open = true;
        if (!json_file) throw std::invalid_argument("cannot open --json file: " + json_path);
      }
      json_file << line << "\n";
    }
  }
  void report(const Report& r) {
    emit(r.to_json());
    if (!r.pass) any_fail = true;
  }
};

long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (...) {
    throw std::invalid_argument("not an integer: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

RingPoly parse_lambda(const std::string& s) {
  if (s == "formal") return RingPoly::lambda();
  try {
    return RingPoly(parse_long(s));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("--lambda must be \"formal\" or an integer, got: " + s);
  }
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
  return out;
}

// Sequence literal: a built-in generator name or a JSON array of polynomial
// strings / integers; must supply at least `trunc` entries.
WSeq<RingPoly> parse_seq(const std::string& s, size_t trunc) {
  if (s == "ones") return seq_ones(trunc);
  if (s == "zeros") return seq_zeros(trunc);
  if (s == "unit") return seq_unit(trunc);
  if (s == "squares") return seq_squares(trunc);
  if (s == "iota") return seq_iota(trunc);
  Json j;
  try {
    j = Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("sequence literal is neither a generator name nor JSON: " +
                                std::string(e.what()));
  }
  if (!j.is_array()) throw std::invalid_argument("sequence literal must be a JSON array");
  std::vector<RingPoly> entries;
  for (const auto& v : j) {
    if (v.is_number_integer())
      entries.emplace_back(v.get<long>());
    else if (v.is_string())
      entries.push_back(RingPoly::parse(v.get<std::string>()));
    else
      throw std::invalid_argument("sequence entries must be integers or polynomial strings");
  }
  if (entries.size() < trunc)
    throw std::invalid_argument("sequence literal has fewer entries than --trunc");
  entries.resize(trunc);
  return WSeq<RingPoly>(std::move(entries));
}

// Species literal: E | J | L | ksubset:K | card:c0,c1,...
std::unique_ptr<SetSpecies> parse_species(const std::string& s) {
  if (s == "E") return exponential_species();
  if (s == "J") return unit_species();
  if (s == "L") return linear_order_species();
  if (s.rfind("ksubset:", 0) == 0)
    return ksubset_species(static_cast<int>(parse_long(s.substr(8))));
  if (s.rfind("card:", 0) == 0) return synthetic_species(parse_longs(s.substr(5)));
  throw std::invalid_argument("unknown species literal (want E, J, L, ksubset:K, card:...): " + s);
}

std::vector<std::string> json_strings(const Json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  return out;
}

MatGraph parse_graph(const std::string& s) {
  Json j;
  try {
    j = Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("graph literal is not JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("dimA") || !j.contains("dimE") || !j.contains("s") ||
      !j.contains("t"))
    throw std::invalid_argument(
        R"(graph literal must look like {"dimA":1,"dimE":1,"s":["lam"],"t":["1"]})");
  const int dim_a = j["dimA"].get<int>();
  const int dim_e = j["dimE"].get<int>();
  return make_graph(mat_from_strings(json_strings(j["s"], "s"), dim_a, dim_e),
                    mat_from_strings(json_strings(j["t"], "t"), dim_a, dim_e));
}

Json graph_to_json(const MatGraph& g) {
  return {{"dimA", g.dimA},
          {"dimE", g.dimE},
          {"s", Json(mat_to_strings(g.s))},
          {"t", Json(mat_to_strings(g.t))}};
}

Json finpoint_to_json(const FinPoint& x) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(poly_to_json(x[i]));
  return arr;
}

Json finseq_to_json(const WSeq<FinPoint>& f) {
  Json arr = Json::array();
  for (size_t n = 0; n < f.trunc(); ++n) arr.push_back(finpoint_to_json(f(n)));
  return arr;
}

QParam checked_lattice_q(long q, int n) {
  const QParam qp = QParam::make(q);
  if (!qp.prime) throw std::invalid_argument("q must be prime for enumeration");
  if (q > 5) throw std::invalid_argument("q must be <= 5 for enumeration");
  if (n < 0 || n > 4) throw std::invalid_argument("n must be in 0..4 for enumeration");
  return qp;
}

FinPoint finpoint_arg(const std::string& csv, long m, const char* what) {
  const std::vector<long> xs = parse_longs(csv);
  if (static_cast<long>(xs.size()) != m)
    throw std::invalid_argument(std::string(what) + " must list exactly m=" + std::to_string(m) +
                                " integers");
  return FinPoint::from_ints(xs);
}

// ----- hurwitz subcommands -----

void add_hurwitz(CLI::App& app, Ctx& ctx) {
  auto* hur = app.add_subcommand("hurwitz", "lam-weighted Hurwitz products on sequences");
  hur->require_subcommand(1);
  hur->fallthrough();

  {
    struct O {
      size_t trunc = 8;
      std::string lambda = "formal", f, g;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand("mul", "product of two sequences");
    sub->fallthrough();
    sub->add_option("--trunc", o->trunc, "truncation length");
    sub->add_option("--lambda", o->lambda, "weight: \"formal\" or an integer");
    sub->add_option("--f", o->f, "first sequence literal")->required();
    sub->add_option("--g", o->g, "second sequence literal")->required();
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const WSeq<RingPoly> prod =
          hurwitz_mul(parse_seq(o->f, o->trunc), parse_seq(o->g, o->trunc), lam);
      ctx.emit({{"op", "hurwitz.mul"},
                {"params",
                 {{"trunc", o->trunc}, {"lambda", o->lambda}, {"f", o->f}, {"g", o->g}}},
                {"values", seq_to_json(prod)}});
    });
  }

  {
    struct O {
      long m = 5;
      std::string a = "0,1,4,9,16", b, lambda = "1";
      size_t trunc = 5;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "dstar", "d*(a)(n) = d^n(a) for the cyclic difference, plus the morphism law");
    sub->fallthrough();
    sub->add_option("--m", o->m, "cyclic algebra size");
    sub->add_option("--a", o->a, "first vector (comma integers)");
    sub->add_option("--b", o->b, "second vector (default: all ones)");
    sub->add_option("--trunc", o->trunc, "number of d* entries");
    sub->add_option("--lambda", o->lambda, "weight (the witness is 1-weighted)");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const FinPoint a = finpoint_arg(o->a, o->m, "--a");
      const FinPoint b = o->b.empty() ? FinPoint::constant(o->m, RingPoly(1))
                                      : finpoint_arg(o->b, o->m, "--b");
      auto d = [](const FinPoint& x) { return cyclic_difference(x); };
      const WSeq<FinPoint> da = d_star(a, d, o->trunc);
      const WSeq<FinPoint> db = d_star(b, d, o->trunc);
      ctx.emit({{"op", "hurwitz.dstar"},
                {"params", {{"m", o->m}, {"trunc", o->trunc}, {"lambda", o->lambda}}},
                {"values", finseq_to_json(da)}});
      Report rep;
      rep.op = "hurwitz.dstar_morphism";
      rep.params = {{"m", o->m}, {"trunc", o->trunc}, {"lambda", o->lambda}};
      const WSeq<FinPoint> lhs = d_star(a * b, d, o->trunc);
      const WSeq<FinPoint> rhs = hurwitz_mul(da, db, lam);
      ++rep.checks;
      if (lhs != rhs)
        rep.fail({{"a", to_text(a)},
                  {"b", to_text(b)},
                  {"lhs d*(ab)", to_text(lhs)},
                  {"rhs d*(a).d*(b)", to_text(rhs)}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      std::string lambda = "1";
      long m = 6;
      int samples = 5;
      std::uint64_t seed = 42;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "check-der", "weighted-derivation law for the cyclic difference (passes at lambda=1)");
    sub->fallthrough();
    sub->add_option("--lambda", o->lambda, "weight to check");
    sub->add_option("--m", o->m, "cyclic algebra size");
    sub->add_option("--samples", o->samples, "random samples");
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      Rng rng(o->seed);
      std::vector<FinPoint> samples;
      for (int i = 0; i < o->samples; ++i)
        samples.push_back(FinPoint::from_ints(rng.int_vec(static_cast<size_t>(o->m), -5, 5)));
      Endo<FinPoint> d{"cyclic_difference",
                       [](const FinPoint& x) { return cyclic_difference(x); }};
      auto mul = [](const FinPoint& a, const FinPoint& b) { return a * b; };
      const FinPoint unit = FinPoint::constant(o->m, RingPoly(1));
      Report rep = check_weighted_derivation(mul, d, lam, samples, &unit);
      rep.params["seed"] = o->seed;
      rep.params["m"] = o->m;
      ctx.report(rep);
    });
  }

  {
    struct O {
      std::string lambda = "1";
      size_t trunc = 8;
      int samples = 5;
      std::uint64_t seed = 42;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "check-rb", "Rota-Baxter law for partial sums on the pointwise algebra (passes at lambda=1)");
    sub->fallthrough();
    sub->add_option("--lambda", o->lambda, "weight to check");
    sub->add_option("--trunc", o->trunc, "sequence truncation");
    sub->add_option("--samples", o->samples, "random samples");
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      Rng rng(o->seed);
      std::vector<WSeq<RingPoly>> samples;
      for (int i = 0; i < o->samples; ++i) {
        std::vector<RingPoly> e;
        for (size_t k = 0; k < o->trunc; ++k) e.push_back(rng.poly(1, 4));
        samples.emplace_back(std::move(e));
      }
      Endo<WSeq<RingPoly>> P{"partial_sums",
                             [](const WSeq<RingPoly>& f) { return partial_sums(f); }};
      auto mul = [](const WSeq<RingPoly>& a, const WSeq<RingPoly>& b) {
        return pointwise_mul(a, b);
      };
      Report rep = check_rb_operator(mul, P, lam, samples);
      rep.params["seed"] = o->seed;
      rep.params["trunc"] = o->trunc;
      ctx.report(rep);
    });
  }

  {
    struct O {
      size_t trunc = 8;
      std::string lambda = "1", f, g;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "diamond", "a<>b = P(a)b + aP(b) + lam ab for P = partial sums, with the RB square");
    sub->fallthrough();
    sub->add_option("--trunc", o->trunc, "truncation length");
    sub->add_option("--lambda", o->lambda, "weight (P is 1-weighted)");
    sub->add_option("--f", o->f, "first sequence literal")->required();
    sub->add_option("--g", o->g, "second sequence literal")->required();
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const WSeq<RingPoly> f = parse_seq(o->f, o->trunc);
      const WSeq<RingPoly> g = parse_seq(o->g, o->trunc);
      const WSeq<RingPoly> dia =
          seq_add(seq_add(pointwise_mul(partial_sums(f), g), pointwise_mul(f, partial_sums(g))),
                  seq_scale(lam, pointwise_mul(f, g)));
      ctx.emit({{"op", "hurwitz.diamond"},
                {"params", {{"trunc", o->trunc}, {"lambda", o->lambda}, {"f", o->f}, {"g", o->g}}},
                {"values", seq_to_json(dia)}});
      Report rep;
      rep.op = "hurwitz.diamond_rb_square";
      rep.params = {{"trunc", o->trunc}, {"lambda", o->lambda}};
      ++rep.checks;
      const WSeq<RingPoly> lhs = partial_sums(dia);
      const WSeq<RingPoly> rhs = pointwise_mul(partial_sums(f), partial_sums(g));
      if (lhs != rhs)
        rep.fail({{"f", to_text(f)},
                  {"g", to_text(g)},
                  {"lhs P(f<>g)", to_text(lhs)},
                  {"rhs P(f)P(g)", to_text(rhs)}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      size_t trunc = 8;
      std::string lambda = "formal", f;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "lift", "zero-base Rota-Baxter lift (0, f(0), f(1), ...) and its laws in (A^N, .^lam)");
    sub->fallthrough();
    sub->add_option("--trunc", o->trunc, "truncation length");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--f", o->f, "sequence literal")->required();
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const WSeq<RingPoly> f = parse_seq(o->f, o->trunc);
      auto base = [](const RingPoly&) { return RingPoly(0); };
      Endo<WSeq<RingPoly>> P{"lifted_rb(zero)", [base](const WSeq<RingPoly>& x) {
                               return lifted_rb(x, base);
                             }};
      const WSeq<RingPoly> pf = P(f);
      ctx.emit({{"op", "hurwitz.lift"},
                {"params", {{"trunc", o->trunc}, {"lambda", o->lambda}, {"f", o->f}}},
                {"values", seq_to_json(pf)}});
      Report rep;
      rep.op = "hurwitz.lift_laws";
      rep.params = {{"trunc", o->trunc}, {"lambda", o->lambda}};
      ++rep.checks;
      if (!prefix_eq(shift_derivation(pf), f))
        rep.fail({{"law", "shift o P = id"}, {"f", to_text(f)}});
      ++rep.checks;
      if (!(pf(0) == RingPoly(0))) rep.fail({{"law", "ev_0 square"}, {"P(f)(0)", pf(0).str()}});
      auto mul = [&lam](const WSeq<RingPoly>& a, const WSeq<RingPoly>& b) {
        return hurwitz_mul(a, b, lam);
      };
      rep.absorb(check_rb_operator(mul, P, lam, {f, pf, seq_ones(o->trunc)}));
      ctx.report(rep);
    });
  }

  {
    struct O {
      size_t trunc = 8;
      std::string lambda = "formal", f, g;
    };
    auto o = std::make_shared<O>();
    auto* sub = hur->add_subcommand(
        "bialg", "convolution through the bialgebra comultiplication vs the Hurwitz product");
    sub->fallthrough();
    sub->add_option("--trunc", o->trunc, "truncation length");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--f", o->f, "first sequence literal")->required();
    sub->add_option("--g", o->g, "second sequence literal")->required();
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const WSeq<RingPoly> f = parse_seq(o->f, o->trunc);
      const WSeq<RingPoly> g = parse_seq(o->g, o->trunc);
      const WSeq<RingPoly> conv = convolution_via_bialgebra(f, g, lam);
      ctx.emit({{"op", "hurwitz.bialg"},
                {"params", {{"trunc", o->trunc}, {"lambda", o->lambda}, {"f", o->f}, {"g", o->g}}},
                {"values", seq_to_json(conv)}});
      Report rep;
      rep.op = "hurwitz.bialg_concordance";
      rep.params = {{"trunc", o->trunc}, {"lambda", o->lambda}};
      ++rep.checks;
      const WSeq<RingPoly> direct = hurwitz_mul(f, g, lam);
      if (conv != direct)
        rep.fail({{"f", to_text(f)},
                  {"g", to_text(g)},
                  {"convolution", to_text(conv)},
                  {"hurwitz", to_text(direct)}});
      ctx.report(rep);
    });
  }
}

// ----- species subcommands -----

void add_species(CLI::App& app, Ctx& ctx) {
  auto* spc = app.add_subcommand("species", "L-weighted tensor of set species");
  spc->require_subcommand(1);
  spc->fallthrough();

  {
    struct O {
      std::string f = "E", g = "E", lambda = "formal";
      long colors = -1;
      int labels = 3;
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand(
        "tensor", "tensor cardinality; with --colors also the enumeration cross-check");
    sub->fallthrough();
    sub->add_option("--F", o->f, "species literal (E, J, L, ksubset:K, card:...)");
    sub->add_option("--G", o->g, "species literal");
    sub->add_option("--labels", o->labels, "label count n (<= 7)");
    sub->add_option("--lambda", o->lambda, "formal weight (used when --colors is absent)");
    sub->add_option("--colors", o->colors, "finite color count (enables enumeration mode)");
    sub->callback([o, &ctx] {
      auto F = parse_species(o->f);
      auto G = parse_species(o->g);
      if (o->labels < 0 || o->labels > 7)
        throw std::invalid_argument("--labels must be in 0..7");
      const SpeciesCard fc = card_of(*F, o->labels);
      const SpeciesCard gc = card_of(*G, o->labels);
      if (o->colors >= 0) {
        const LWeight weight = LWeight::of_colors(o->colors);
        const BigInt counted = l_tensor_count(*F, *G, weight, full_set(o->labels));
        ctx.emit({{"op", "species.tensor"},
                  {"params",
                   {{"F", o->f}, {"G", o->g}, {"labels", o->labels}, {"colors", o->colors}}},
                  {"count", bigint_to_json(counted)}});
        Report rep;
        rep.op = "species.tensor_concordance";
        rep.params = {{"F", o->f}, {"G", o->g}, {"labels", o->labels}, {"colors", o->colors}};
        ++rep.checks;
        const RingPoly closed = l_tensor_card(fc, gc, RingPoly(o->colors), o->labels);
        if (!(RingPoly(counted) == closed))
          rep.fail({{"enumerated", bigint_to_json(counted)}, {"closed_form", closed.str()}});
        ctx.report(rep);
      } else {
        const RingPoly lam = parse_lambda(o->lambda);
        ctx.emit({{"op", "species.tensor"},
                  {"params",
                   {{"F", o->f}, {"G", o->g}, {"labels", o->labels}, {"lambda", o->lambda}}},
                  {"value", poly_to_json(l_tensor_card(fc, gc, lam, o->labels))}});
      }
    });
  }

  {
    struct O {
      std::string f = "E", g = "E";
      long colors = 1;
      int labels = 2;
      size_t limit = 20;
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("enum", "list tensor structures (cover, coloring, phi, gamma)");
    sub->fallthrough();
    sub->add_option("--F", o->f, "species literal");
    sub->add_option("--G", o->g, "species literal");
    sub->add_option("--labels", o->labels, "label count n (<= 7)");
    sub->add_option("--colors", o->colors, "finite color count");
    sub->add_option("--limit", o->limit, "max structures to print");
    sub->callback([o, &ctx] {
      auto F = parse_species(o->f);
      auto G = parse_species(o->g);
      if (o->labels < 0 || o->labels > 7)
        throw std::invalid_argument("--labels must be in 0..7");
      const auto all =
          l_tensor_structures(*F, *G, LWeight::of_colors(o->colors), full_set(o->labels));
      Json shown = Json::array();
      for (size_t i = 0; i < all.size() && i < o->limit; ++i) {
        const Quintuple& q = all[i];
        shown.push_back({{"U", Json(elements(q.U))},
                         {"V", Json(elements(q.V))},
                         {"coloring", Json(q.coloring)},
                         {"phi", Json(q.phi)},
                         {"gamma", Json(q.gamma)}});
      }
      ctx.emit({{"op", "species.enum"},
                {"params",
                 {{"F", o->f}, {"G", o->g}, {"labels", o->labels}, {"colors", o->colors}}},
                {"count", all.size()},
                {"structures", shown}});
    });
  }

  {
    struct O {
      std::vector<std::string> cards;
      std::string lambda = "formal";
      int labels = 3;
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("nfold", "n-fold tensor cardinality (digit-string formula)");
    sub->fallthrough();
    sub->add_option("--card", o->cards, "cardinality list c0,c1,... (repeat per factor)")
        ->required();
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--labels", o->labels, "label count n");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      std::vector<SpeciesCard> fs;
      for (const auto& c : o->cards) {
        fs.push_back(parse_longs(c));
        if (static_cast<int>(fs.back().size()) <= o->labels)
          throw std::invalid_argument("each --card needs at least labels+1 entries");
      }
      ctx.emit({{"op", "species.nfold"},
                {"params",
                 {{"k", fs.size()}, {"labels", o->labels}, {"lambda", o->lambda}}},
                {"value", poly_to_json(nfold_tensor_card(fs, lam, o->labels))}});
    });
  }

  {
    struct O {
      int k = 3, labels = 3;
      std::vector<std::string> cards;
      std::string lambda = "formal";
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand(
        "mfil", "modified k-filtration count and weighted cardinality, with concordance");
    sub->fallthrough();
    sub->add_option("--k", o->k, "number of factors (1..4)");
    sub->add_option("--labels", o->labels, "label count n (<= 6)");
    sub->add_option("--card", o->cards, "cardinality list per factor (default all ones)");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      if (o->k < 1 || o->k > 4) throw std::invalid_argument("--k must be in 1..4");
      if (o->labels < 0 || o->labels > 6)
        throw std::invalid_argument("--labels must be in 0..6");
      std::vector<SpeciesCard> fs;
      if (o->cards.empty()) {
        fs.assign(static_cast<size_t>(o->k),
                  SpeciesCard(static_cast<size_t>(o->labels) + 1, 1));
      } else {
        if (static_cast<int>(o->cards.size()) != o->k)
          throw std::invalid_argument("--card must be given once per factor");
        for (const auto& c : o->cards) {
          fs.push_back(parse_longs(c));
          if (static_cast<int>(fs.back().size()) <= o->labels)
            throw std::invalid_argument("each --card needs at least labels+1 entries");
        }
      }
      const LabelSet x = full_set(o->labels);
      const RingPoly weighted = mfil_weighted_card(o->k, x, fs, lam);
      ctx.emit({{"op", "species.mfil"},
                {"params", {{"k", o->k}, {"labels", o->labels}, {"lambda", o->lambda}}},
                {"count", bigint_to_json(mfil_count(o->k, x))},
                {"weighted_card", poly_to_json(weighted)}});
      Report rep;
      rep.op = "species.mfil_concordance";
      rep.params = {{"k", o->k}, {"labels", o->labels}, {"lambda", o->lambda}};
      ++rep.checks;
      const RingPoly digits = nfold_tensor_card(fs, lam, o->labels);
      if (!(weighted == digits))
        rep.fail({{"m_filtration", weighted.str()}, {"n_fold", digits.str()}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      int labels = 3;
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("flag3", "3-flag <-> 7-block-partition roundtrip");
    sub->fallthrough();
    sub->add_option("--labels", o->labels, "label count n (<= 6)");
    sub->callback([o, &ctx] {
      if (o->labels < 0 || o->labels > 6)
        throw std::invalid_argument("--labels must be in 0..6");
      Report rep;
      rep.op = "species.flag3_roundtrip";
      rep.params = {{"labels", o->labels}};
      const LabelSet x = full_set(o->labels);
      BigInt seen = 0;
      mfil_for_each(3, x, [&](const MFil& m) {
        if (!rep.pass) return;
        const Partition7 p = flag3_to_partition(m);
        ++rep.checks;
        if (!partition7_valid(p)) {
          rep.fail({{"stage", "partition validity"}, {"U", Json(m.U)}, {"V", Json(m.V)}});
          return;
        }
        const MFil back = partition_to_flag3(p);
        ++rep.checks;
        if (back.U != m.U || back.V != m.V)
          rep.fail({{"stage", "roundtrip"}, {"U", Json(m.U)}, {"V", Json(m.V)}});
        seen += 1;
      });
      ++rep.checks;
      if (rep.pass && seen != mfil_count(3, x))
        rep.fail({{"stage", "count"},
                  {"seen", bigint_to_json(seen)},
                  {"mfil_count", bigint_to_json(mfil_count(3, x))}});
      rep.details = {{"flags", bigint_to_json(seen)}};
      ctx.report(rep);
    });
  }

  {
    struct O {
      int a = 2, b = 2, n = 3;
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("cov", "census of jointly surjective injection pairs");
    sub->fallthrough();
    sub->add_option("--a", o->a, "source size of the first injection (<= 6)");
    sub->add_option("--b", o->b, "source size of the second injection (<= 6)");
    sub->add_option("--n", o->n, "target size (<= 6)");
    sub->callback([o, &ctx] {
      if (o->a < 0 || o->b < 0 || o->n < 0 || o->a > 6 || o->b > 6 || o->n > 6)
        throw std::invalid_argument("--a, --b, --n must be in 0..6");
      const auto census = cov_enumerate(o->a, o->b, o->n);
      ctx.emit({{"op", "species.cov"},
                {"params", {{"a", o->a}, {"b", o->b}, {"n", o->n}}},
                {"census", census_to_json(census)}});
      Report rep;
      rep.op = "species.cov_closed_form";
      rep.params = {{"a", o->a}, {"b", o->b}, {"n", o->n}};
      std::map<int, BigInt> expected;
      const int c = o->a + o->b - o->n;
      if (o->a <= o->n && o->b <= o->n && c >= 0)
        expected[c] = multinomial(o->n, {o->a - c, o->b - c, c}) *
                      factorial(static_cast<unsigned long>(o->a)) *
                      factorial(static_cast<unsigned long>(o->b));
      ++rep.checks;
      if (census != expected)
        rep.fail({{"census", census_to_json(census)}, {"closed_form", census_to_json(expected)}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      int x = 2, y = 2;
      std::string lambda = "formal";
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("delta", "Delta weighted multiset and strong monoidality");
    sub->fallthrough();
    sub->add_option("--x", o->x, "first label count");
    sub->add_option("--y", o->y, "second label count");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      if (o->x < 0 || o->y < 0 || o->x + o->y > 7)
        throw std::invalid_argument("--x + --y must be in 0..7");
      Json multiset = Json::object();
      for (const auto& [key, weight] : delta_fam(o->x + o->y, lam))
        multiset[std::to_string(key.first) + "," + std::to_string(key.second)] =
            poly_to_json(weight);
      ctx.emit({{"op", "species.delta"},
                {"params", {{"x", o->x}, {"y", o->y}, {"lambda", o->lambda}}},
                {"multiset", multiset}});
      ctx.report(delta_monoidal_check(o->x, o->y, lam));
    });
  }

  {
    struct O {
      int x = 2, y = 2;
      std::string lambda = "formal", f = "ones", g = "ones";
    };
    auto o = std::make_shared<O>();
    auto* sub = spc->add_subcommand("leibniz", "cardinality Leibniz rule for shifted species");
    sub->fallthrough();
    sub->add_option("--x", o->x, "outer label count");
    sub->add_option("--y", o->y, "inner label count");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--F", o->f, "cardinality list (or \"ones\")");
    sub->add_option("--G", o->g, "cardinality list (or \"ones\")");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      if (o->x < 0 || o->y < 0 || o->x + o->y > 6)
        throw std::invalid_argument("--x + --y must be in 0..6");
      const size_t need = static_cast<size_t>(o->x + o->y) + 1;
      auto card = [&](const std::string& s) {
        if (s == "ones") return SpeciesCard(need, 1);
        SpeciesCard c = parse_longs(s);
        if (c.size() < need)
          throw std::invalid_argument("cardinality list needs at least x+y+1 entries");
        return c;
      };
      ctx.report(shift_leibniz_card_check(card(o->f), card(o->g), lam, o->x, o->y));
    });
  }
}

// ----- qcharade subcommands -----

void add_qcharade(CLI::App& app, Ctx& ctx) {
  auto* qc = app.add_subcommand("qcharade", "charade tensor over F_q and its q-Hurwitz shadow");
  qc->require_subcommand(1);
  qc->fallthrough();

  {
    struct O {
      long q = 2;
      int n = 2;
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand("subspaces", "enumerate the subspace lattice of F_q^n");
    sub->fallthrough();
    sub->add_option("--q", o->q, "field order (prime <= 5)");
    sub->add_option("--n", o->n, "ambient dimension (<= 4)");
    sub->callback([o, &ctx] {
      const QParam qp = checked_lattice_q(o->q, o->n);
      const SubspaceLattice lat(qp, o->n);
      Json by_dim = Json::array();
      for (int d = 0; d <= o->n; ++d) by_dim.push_back(lat.by_dim(d).size());
      ctx.emit({{"op", "qcharade.subspaces"},
                {"params", {{"q", o->q}, {"n", o->n}}},
                {"count", lat.size()},
                {"by_dim", by_dim}});
    });
  }

  {
    struct O {
      long q = 2;
      int n = 3;
      std::string lambda = "formal";
      int trials = 10;
      std::uint64_t seed = 42;
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand(
        "dim-check", "subspace-chain tensor vs the q-Hurwitz product on random dimension pairs");
    sub->fallthrough();
    sub->add_option("--q", o->q, "field order (prime <= 5)");
    sub->add_option("--n", o->n, "max ambient dimension (<= 4)");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--trials", o->trials, "random dimension-sequence pairs");
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->callback([o, &ctx] {
      const QParam qp = checked_lattice_q(o->q, o->n);
      const RingPoly lam = parse_lambda(o->lambda);
      const auto lats = lattice_tower(qp, o->n);
      Rng rng(o->seed);
      Report rep;
      rep.op = "qcharade.dim_check";
      rep.params = {{"q", o->q},
                    {"n", o->n},
                    {"lambda", o->lambda},
                    {"trials", o->trials},
                    {"seed", o->seed}};
      for (int trial = 0; trial < o->trials && rep.pass; ++trial) {
        const DimSeq f = rng.int_vec(static_cast<size_t>(o->n) + 1, 0, 5);
        const DimSeq g = rng.int_vec(static_cast<size_t>(o->n) + 1, 0, 5);
        const WSeq<RingPoly> viaq =
            q_hurwitz_mul(seq_from_dims(f), seq_from_dims(g), lam, qp);
        for (int n = 0; n <= o->n && rep.pass; ++n) {
          ++rep.checks;
          const RingPoly chain = q_tensor_dim(f, g, lam, lats[static_cast<size_t>(n)]);
          if (!(chain == viaq(static_cast<size_t>(n))))
            rep.fail({{"trial", trial},
                      {"n", n},
                      {"f", Json(f)},
                      {"g", Json(g)},
                      {"chain_sum", chain.str()},
                      {"q_hurwitz", viaq(static_cast<size_t>(n)).str()}});
        }
      }
      if (o->q == 2 && o->n >= 2 && rep.pass) {
        const DimSeq ones(static_cast<size_t>(o->n) + 1, 1);
        ++rep.checks;
        const RingPoly v1 = q_tensor_dim(ones, ones, RingPoly(1), lats[1]);
        const RingPoly v2 = q_tensor_dim(ones, ones, RingPoly(1), lats[2]);
        if (!(v1 == RingPoly(3) && v2 == RingPoly(12)))
          rep.fail({{"anchor", "all-ones chain totals"},
                    {"n1", v1.str()},
                    {"n2", v2.str()},
                    {"expected", Json::array({3, 12})}});
        rep.details = {{"anchors", "all-ones chain totals 3 (n=1) and 12 (n=2) verified"}};
      }
      ctx.report(rep);
    });
  }

  {
    struct O {
      long q = 2;
      size_t trunc = 6;
      std::string lambda = "formal", f, g;
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand("qmul", "q-weighted Hurwitz product (any integer q >= 2)");
    sub->fallthrough();
    sub->add_option("--q", o->q, "q parameter (any integer >= 2)");
    sub->add_option("--trunc", o->trunc, "truncation length");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--f", o->f, "first sequence literal")->required();
    sub->add_option("--g", o->g, "second sequence literal")->required();
    sub->callback([o, &ctx] {
      const QParam qp = QParam::make(o->q);
      const RingPoly lam = parse_lambda(o->lambda);
      const WSeq<RingPoly> prod =
          q_hurwitz_mul(parse_seq(o->f, o->trunc), parse_seq(o->g, o->trunc), lam, qp);
      ctx.emit({{"op", "qcharade.qmul"},
                {"params",
                 {{"q", o->q}, {"trunc", o->trunc}, {"lambda", o->lambda}, {"f", o->f},
                  {"g", o->g}}},
                {"values", seq_to_json(prod)}});
    });
  }

  {
    struct O {
      long q = 2;
      int n = 2, k = 2;
      std::vector<std::string> dims;
      std::string lambda = "formal";
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand(
        "mflg", "modified k-flag count and weighted cardinality, with concordance");
    sub->fallthrough();
    sub->add_option("--q", o->q, "field order (prime <= 5)");
    sub->add_option("--n", o->n, "ambient dimension (<= 3)");
    sub->add_option("--k", o->k, "number of factors (1..3)");
    sub->add_option("--dims", o->dims, "dimension list per factor (default all ones)");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      if (o->n > 3) throw std::invalid_argument("--n must be <= 3 for flag enumeration");
      if (o->k < 1 || o->k > 3) throw std::invalid_argument("--k must be in 1..3");
      const QParam qp = checked_lattice_q(o->q, o->n);
      const RingPoly lam = parse_lambda(o->lambda);
      const auto lats = lattice_tower(qp, o->n);
      const SubspaceLattice& lat = lats.back();
      std::vector<DimSeq> fs;
      if (o->dims.empty()) {
        fs.assign(static_cast<size_t>(o->k), DimSeq(static_cast<size_t>(o->n) + 1, 1));
      } else {
        if (static_cast<int>(o->dims.size()) != o->k)
          throw std::invalid_argument("--dims must be given once per factor");
        for (const auto& d : o->dims) {
          fs.push_back(parse_longs(d));
          if (static_cast<int>(fs.back().size()) <= o->n)
            throw std::invalid_argument("each --dims needs at least n+1 entries");
        }
      }
      const RingPoly weighted = mflg_weighted_card(o->k, fs, lam, lat);
      ctx.emit({{"op", "qcharade.mflg"},
                {"params",
                 {{"q", o->q}, {"n", o->n}, {"k", o->k}, {"lambda", o->lambda}}},
                {"count", bigint_to_json(mflg_count(o->k, lat))},
                {"weighted_card", poly_to_json(weighted)}});
      Report rep;
      rep.op = "qcharade.mflg_concordance";
      rep.params = {{"q", o->q}, {"n", o->n}, {"k", o->k}, {"lambda", o->lambda}};
      ++rep.checks;
      RingPoly iterated;
      if (o->k == 1) {
        iterated = RingPoly(fs[0][static_cast<size_t>(o->n)]);
      } else if (o->k == 2) {
        iterated = q_tensor_dim(fs[0], fs[1], lam, lat);
      } else {
        const auto f1 = seq_from_dims(fs[0]).entries();
        const auto f2 = seq_from_dims(fs[1]).entries();
        const auto f3 = seq_from_dims(fs[2]).entries();
        iterated = q_tensor_dim(q_tensor_seq(f1, f2, lam, lats), f3, lam, lat);
      }
      if (!(weighted == iterated))
        rep.fail({{"flags", weighted.str()}, {"left_bracketed_tensor", iterated.str()}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      long q = 2;
      int n = 2, a = 1, b = 1;
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand(
        "spes", "census of short pre-exact sequences, enumeration vs chain formula");
    sub->fallthrough();
    sub->add_option("--q", o->q, "field order (2 or 3)");
    sub->add_option("--n", o->n, "ambient dimension (<= 3)");
    sub->add_option("--a", o->a, "mono source dimension (<= 3)");
    sub->add_option("--b", o->b, "epi target dimension (<= 3)");
    sub->callback([o, &ctx] {
      if (o->n > 3) throw std::invalid_argument("--n must be <= 3 for enumeration");
      const QParam qp = checked_lattice_q(o->q, o->n);
      if (o->q > 3) throw std::invalid_argument("--q must be 2 or 3 for map enumeration");
      const SubspaceLattice lat(qp, o->n);
      const auto census = spes_census(lat, o->a, o->b);
      ctx.emit({{"op", "qcharade.spes"},
                {"params", {{"q", o->q}, {"n", o->n}, {"a", o->a}, {"b", o->b}}},
                {"census", census_to_json(census)}});
      Report rep;
      rep.op = "qcharade.spes_concordance";
      rep.params = {{"q", o->q}, {"n", o->n}, {"a", o->a}, {"b", o->b}};
      ++rep.checks;
      const auto formula = spes_census_formula(lat, o->a, o->b);
      if (census != formula)
        rep.fail({{"enumerated", census_to_json(census)},
                  {"chain_formula", census_to_json(formula)}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      long q = 2;
      int trunc = 8, trials = 100;
      std::string lambda = "formal";
      std::uint64_t seed = 42;
    };
    auto o = std::make_shared<O>();
    auto* sub = qc->add_subcommand(
        "conjecture", "associativity evidence for the q-weighted Hurwitz product");
    sub->fallthrough();
    sub->add_option("--q", o->q, "q parameter (any integer >= 2)");
    sub->add_option("--trunc", o->trunc, "truncation length (1..10)");
    sub->add_option("--trials", o->trials, "random triples");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      ctx.report(conjecture_evidence(lam, o->q, o->trunc, o->trials, o->seed));
    });
  }
}

// ----- gph subcommands -----

void add_gph(CLI::App& app, Ctx& ctx) {
  auto* gph = app.add_subcommand("gph", "weighted tensor of graphs on the matrix backend");
  gph->require_subcommand(1);
  gph->fallthrough();

  {
    struct O {
      std::string g1, g2, g3, lambda = "formal";
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand("tensor", "weighted tensor of two or three graphs");
    sub->fallthrough();
    sub->add_option("--g1", o->g1, "graph literal")->required();
    sub->add_option("--g2", o->g2, "graph literal")->required();
    sub->add_option("--g3", o->g3, "optional third graph (adds the coherence report)");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      const MatGraph g1 = parse_graph(o->g1);
      const MatGraph g2 = parse_graph(o->g2);
      if (o->g3.empty()) {
        ctx.emit({{"op", "gph.tensor"},
                  {"params", {{"lambda", o->lambda}}},
                  {"graph", graph_to_json(graph_tensor(g1, g2, lam))}});
        return;
      }
      const MatGraph g3 = parse_graph(o->g3);
      const MatGraph flat = graph_tensor_n({g1, g2, g3}, lam);
      ctx.emit({{"op", "gph.tensor"},
                {"params", {{"lambda", o->lambda}, {"factors", 3}}},
                {"graph", graph_to_json(flat)}});
      Report rep;
      rep.op = "gph.tensor_coherence";
      rep.params = {{"lambda", o->lambda}};
      ++rep.checks;
      if (!graph_eq(graph_tensor(graph_tensor(g1, g2, lam), g3, lam), flat))
        rep.fail({{"law", "left bracketing = 3-fold"}});
      ++rep.checks;
      if (rep.pass && !graph_eq(graph_tensor(g1, graph_tensor(g2, g3, lam), lam), flat))
        rep.fail({{"law", "right bracketing = 3-fold"}});
      ctx.report(rep);
    });
  }

  {
    struct O {
      std::string g;
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand("op", "swap source and target");
    sub->fallthrough();
    sub->add_option("--g", o->g, "graph literal")->required();
    sub->callback([o, &ctx] {
      ctx.emit({{"op", "gph.op"}, {"graph", graph_to_json(graph_op(parse_graph(o->g)))}});
    });
  }

  {
    struct O {
      std::string e;
      int m = 2;
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand("j", "J(A,e): the graph (e, identity) of an endomorphism");
    sub->fallthrough();
    sub->add_option("--e", o->e, "endomorphism matrix: JSON array of m*m polynomial strings")
        ->required();
    sub->add_option("--m", o->m, "dimension");
    sub->callback([o, &ctx] {
      Json j;
      try {
        j = Json::parse(o->e);
      } catch (const Json::parse_error& ex) {
        throw std::invalid_argument("matrix literal is not JSON: " + std::string(ex.what()));
      }
      const auto flat = json_strings(j, "--e");
      if (static_cast<int>(flat.size()) != o->m * o->m)
        throw std::invalid_argument("--e must list exactly m*m entries");
      ctx.emit({{"op", "gph.j"},
                {"graph", graph_to_json(j_embed(mat_from_strings(flat, o->m, o->m)))}});
    });
  }

  {
    struct O {
      int m = 4;
      std::string lambda = "1", d = "cyclic";
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand(
        "check-dermonoid", "derivational monoid check (equations and graph route)");
    sub->fallthrough();
    sub->add_option("--m", o->m, "algebra dimension");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--d", o->d, "derivation witness: cyclic | zero");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      PolyMatrix d;
      if (o->d == "cyclic")
        d = cyclic_difference_matrix(o->m);
      else if (o->d == "zero")
        d = PolyMatrix::Zero(o->m, o->m);
      else
        throw std::invalid_argument("--d must be cyclic or zero");
      ctx.report(check_derivational_monoid(diag_algebra_mul(o->m), ones_vec(o->m), d, lam));
    });
  }

  {
    struct O {
      int m = 4;
      std::string lambda = "1", p = "partial";
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand(
        "check-rbmonoid", "Rota-Baxter monoid check (equation and J^op semigroup route)");
    sub->fallthrough();
    sub->add_option("--m", o->m, "algebra dimension");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->add_option("--p", o->p, "operator witness: partial | zero");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      PolyMatrix p;
      if (o->p == "partial")
        p = strict_partial_sum_matrix(o->m);
      else if (o->p == "zero")
        p = PolyMatrix::Zero(o->m, o->m);
      else
        throw std::invalid_argument("--p must be partial or zero");
      ctx.report(check_rb_monoid(diag_algebra_mul(o->m), ones_vec(o->m), p, lam));
    });
  }

  {
    struct O {
      int m = 4, n = 2;
      std::string lambda = "1";
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand(
        "check-multi", "n-ary multimorphism condition for the partial-sum operator");
    sub->fallthrough();
    sub->add_option("--m", o->m, "algebra dimension");
    sub->add_option("--n", o->n, "arity (1..3)");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      if (o->n < 1 || o->n > 3) throw std::invalid_argument("--n must be in 1..3");
      const PolyMatrix mul = diag_algebra_mul(o->m);
      const PolyMatrix p = strict_partial_sum_matrix(o->m);
      const PolyMatrix id = PolyMatrix::Identity(o->m, o->m);
      PolyMatrix f;
      if (o->n == 1)
        f = p;
      else if (o->n == 2)
        f = mul;
      else
        f = PolyMatrix(mul * kron(mul, id));
      ctx.report(multimorphism_check(
          f, std::vector<PolyMatrix>(static_cast<size_t>(o->n), p), p, lam));
    });
  }

  {
    struct O {
      int a_dim = 2, b_dim = 1;
      std::string lambda = "formal";
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand(
        "rmonoid", "R(A,B): monoid structure over the projection graph A(+)A(+)B");
    sub->fallthrough();
    sub->add_option("--a-dim", o->a_dim, "dimension of A");
    sub->add_option("--b-dim", o->b_dim, "dimension of B");
    sub->add_option("--lambda", o->lambda, "weight");
    sub->callback([o, &ctx] {
      const RingPoly lam = parse_lambda(o->lambda);
      if (o->a_dim < 1 || o->a_dim > 3 || o->b_dim < 1 || o->b_dim > 3)
        throw std::invalid_argument("--a-dim and --b-dim must be in 1..3");
      const GraphMono rm = r_monoid(diag_algebra_mul(o->a_dim), ones_vec(o->a_dim),
                                    diag_algebra_mul(o->b_dim), ones_vec(o->b_dim), lam);
      Report rep = graph_mono_check(rm);
      rep.params["a_dim"] = o->a_dim;
      rep.params["b_dim"] = o->b_dim;
      rep.params["lambda"] = o->lambda;
      ctx.report(rep);
    });
  }

  {
    struct O {
      int m = 4, trunc = 6;
      std::uint64_t seed = 42;
    };
    auto o = std::make_shared<O>();
    auto* sub = gph->add_subcommand(
        "k", "members of the truncated equalizer K(J(A,p)^op) built from a free tail");
    sub->fallthrough();
    sub->add_option("--m", o->m, "algebra dimension");
    sub->add_option("--trunc", o->trunc, "member length (<= 8)");
    sub->add_option("--seed", o->seed, "RNG seed");
    sub->callback([o, &ctx] {
      if (o->trunc < 1 || o->trunc > 8)
        throw std::invalid_argument("--trunc must be in 1..8");
      Rng rng(o->seed);
      const MatGraph jop = graph_op(j_embed(strict_partial_sum_matrix(o->m)));
      const FinPoint tail =
          FinPoint::from_ints(rng.int_vec(static_cast<size_t>(o->m), -4, 4));
      const WSeq<FinPoint> member = k_member_from_tail(jop, tail, o->trunc);
      ctx.emit({{"op", "gph.k"},
                {"params", {{"m", o->m}, {"trunc", o->trunc}, {"seed", o->seed}}},
                {"member", finseq_to_json(member)}});
      Report rep;
      rep.op = "gph.k_membership";
      rep.params = {{"m", o->m}, {"trunc", o->trunc}, {"seed", o->seed}};
      ++rep.checks;
      const long defect = k_member_defect(jop, member);
      if (defect != -1) rep.fail({{"first_defect_index", defect}});
      Endo<FinPoint> baseP{"strict_partial_sums",
                           [](const FinPoint& x) { return strict_partial_sums(x); }};
      rep.absorb(k_subalgebra_check(baseP, RingPoly(1), o->m, std::min(o->trunc, 5), 3, o->seed));
      ctx.report(rep);
    });
  }
}

void add_verify(CLI::App& app, Ctx& ctx) {
  auto* ver = app.add_subcommand("verify", "run curated verification suites");
  ver->require_subcommand(1);
  ver->fallthrough();

  struct O {
    std::string level = "quick";
    std::uint64_t seed = 42;
  };
  auto o = std::make_shared<O>();
  auto* sub = ver->add_subcommand("all", "every suite, in registry order");
  sub->fallthrough();
  sub->add_option("--level", o->level, "quick | full");
  sub->add_option("--seed", o->seed, "RNG seed for all randomized suites");
  sub->callback([o, &ctx] {
    if (o->level != "quick" && o->level != "full")
      throw std::invalid_argument("--level must be quick or full");
    VerifyOptions opt;
    opt.full = (o->level == "full");
    opt.seed = o->seed;
    const VerifyOutcome outcome = verify_all(opt);
    for (const Report& rep : outcome.reports) ctx.report(rep);
    ctx.emit({{"op", "verify.summary"},
              {"params", {{"level", o->level}, {"seed", o->seed}}},
              {"pass", outcome.all_pass},
              {"suites", outcome.reports.size()}});
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err, {}, {}, false, false};
  CLI::App app{"exact verification CLI for weighted tensor products"};
  app.name("wtensor");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json", ctx.json_path, "also append reports to this JSON-lines file");

  add_hurwitz(app, ctx);
  add_species(app, ctx);
  add_qcharade(app, ctx);
  add_gph(app, ctx);
  add_verify(app, ctx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Json::parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // invalid_argument, length_error, out_of_range: parameter/usage errors
    err << e.what() << "\n";
    return 2;
  }
  return ctx.any_fail ? 1 : 0;
}

}  // namespace wtensor
