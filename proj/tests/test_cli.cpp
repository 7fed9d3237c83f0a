#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wtensor/cli.hpp>
#include <wtensor/suites.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace wtensor;
using Json = nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(Json::parse(line));
  return lines;
}

}  // namespace

TEST_CASE("hurwitz mul example: ones times ones at weight 1 is 3^n") {
  const CliResult r =
      run({"hurwitz", "mul", "--trunc", "6", "--lambda", "1", "--f", "ones", "--g", "ones"});
  CHECK(r.code == 0);
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["op"] == "hurwitz.mul");
  CHECK(lines[0]["values"] == Json::array({1, 3, 9, 27, 81, 243}));
}

TEST_CASE("output is byte-deterministic for a fixed command line") {
  const std::vector<std::string> args = {"verify", "all", "--seed", "42", "--level", "quick"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("verify all quick: one JSON line per suite, registry order, then summary") {
  const CliResult r = run({"verify", "all", "--seed", "42", "--level", "quick"});
  CHECK(r.code == 0);
  const auto lines = parse_lines(r.out);
  const auto& reg = suite_registry();
  REQUIRE(lines.size() == reg.size() + 1);  // suites + summary
  for (size_t i = 0; i < reg.size(); ++i) {
    CHECK(lines[i]["pass"] == true);
    CHECK(lines[i].contains("op"));
    CHECK(lines[i].contains("checks"));
    CHECK(lines[i]["counterexample"].is_null());
  }
  CHECK(lines.back()["op"] == "verify.summary");
  CHECK(lines.back()["pass"] == true);
  // Per-suite order is fixed by the registry.
  CHECK(lines[0]["op"] == "suite.hurwitz_laws");
}

TEST_CASE("usage errors exit 2 with a message on stderr") {
  const CliResult bad_q = run({"qcharade", "dim-check", "--q", "4"});
  CHECK(bad_q.code == 2);
  CHECK(bad_q.err.find("q must be prime for enumeration") != std::string::npos);
  CHECK(bad_q.out.empty());

  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"hurwitz"}).code == 2);  // missing subcommand
  CHECK(run({"hurwitz", "mul", "--f", "ones"}).code == 2);  // missing --g
  CHECK(run({"hurwitz", "mul", "--f", "ones", "--g", "ones", "--lambda", "abc"}).code == 2);
  CHECK(run({"hurwitz", "mul", "--f", "[1,2]", "--g", "ones", "--trunc", "6"}).code == 2);
  CHECK(run({"hurwitz", "mul", "--f", "{", "--g", "ones"}).code == 2);
  CHECK(run({"verify", "all", "--level", "medium"}).code == 2);
  CHECK(run({"species", "tensor", "--labels", "9"}).code == 2);
  CHECK(run({"qcharade", "subspaces", "--q", "7"}).code == 2);
  CHECK(run({"qcharade", "subspaces", "--n", "5"}).code == 2);
}

TEST_CASE("help exits 0 and prints usage") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage:") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
  const CliResult sub = run({"hurwitz", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("mul") != std::string::npos);
}

TEST_CASE("a failing law exits 1 and reports the counterexample") {
  // cyclic difference is 1-weighted, so the 0-weighted check must fail.
  const CliResult r = run({"gph", "check-dermonoid", "--lambda", "0"});
  CHECK(r.code == 1);
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["pass"] == false);
  CHECK_FALSE(lines[0]["counterexample"].is_null());
  // And the same command at weight 1 passes.
  CHECK(run({"gph", "check-dermonoid", "--lambda", "1"}).code == 0);
}

TEST_CASE("conjecture evidence is reported, not masked") {
  const CliResult formal = run({"qcharade", "conjecture", "--q", "2", "--trials", "5",
                                "--trunc", "5"});
  CHECK(formal.code == 1);
  const auto lines = parse_lines(formal.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["pass"] == false);
  CHECK(lines[0]["details"]["assoc"] == false);
  CHECK(lines[0]["details"]["unit"] == true);
  CHECK_FALSE(lines[0]["counterexample"].is_null());
  const CliResult at0 = run({"qcharade", "conjecture", "--q", "2", "--trials", "5",
                             "--trunc", "5", "--lambda", "0"});
  CHECK(at0.code == 0);
}

TEST_CASE("sequence literals: JSON arrays with polynomial strings") {
  const CliResult r = run({"hurwitz", "mul", "--trunc", "3", "--lambda", "formal", "--f",
                           R"([1, "lam", "2 + lam^2"])", "--g", "unit"});
  CHECK(r.code == 0);
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["values"] == Json::array({1, "lam", "2 + lam^2"}));
}

TEST_CASE("species commands emit census plus concordance reports") {
  const CliResult cov = run({"species", "cov", "--a", "2", "--b", "2", "--n", "3"});
  CHECK(cov.code == 0);
  const auto cov_lines = parse_lines(cov.out);
  REQUIRE(cov_lines.size() == 2);
  CHECK(cov_lines[0]["census"] == Json{{"1", 24}});
  CHECK(cov_lines[1]["pass"] == true);

  const CliResult delta = run({"species", "delta", "--x", "1", "--y", "0"});
  CHECK(delta.code == 0);
  const auto d_lines = parse_lines(delta.out);
  REQUIRE(d_lines.size() == 2);
  CHECK(d_lines[0]["multiset"] == Json{{"0,1", 1}, {"1,0", 1}, {"1,1", "lam"}});

  const CliResult tensor =
      run({"species", "tensor", "--F", "E", "--G", "E", "--labels", "2", "--colors", "1"});
  CHECK(tensor.code == 0);
  const auto t_lines = parse_lines(tensor.out);
  REQUIRE(t_lines.size() == 2);
  CHECK(t_lines[0]["count"] == 9);
  CHECK(t_lines[1]["pass"] == true);
}

TEST_CASE("qcharade commands: subspaces and dim-check") {
  const CliResult sub = run({"qcharade", "subspaces", "--q", "2", "--n", "3"});
  CHECK(sub.code == 0);
  const auto s_lines = parse_lines(sub.out);
  REQUIRE(s_lines.size() == 1);
  CHECK(s_lines[0]["count"] == 16);
  CHECK(s_lines[0]["by_dim"] == Json::array({1, 7, 7, 1}));

  const CliResult dc =
      run({"qcharade", "dim-check", "--q", "2", "--n", "2", "--trials", "4", "--seed", "7"});
  CHECK(dc.code == 0);
  const auto d_lines = parse_lines(dc.out);
  REQUIRE(d_lines.size() == 1);
  CHECK(d_lines[0]["pass"] == true);
  CHECK(d_lines[0]["details"]["anchors"].is_string());
}

TEST_CASE("gph tensor with three factors adds the coherence report") {
  const std::string g = R"({"dimA":1,"dimE":1,"s":["lam"],"t":[1]})";
  const CliResult r = run({"gph", "tensor", "--g1", g, "--g2", g, "--g3", g});
  CHECK(r.code == 0);
  const auto lines = parse_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["graph"]["dimA"] == 1);
  CHECK(lines[1]["op"] == "gph.tensor_coherence");
  CHECK(lines[1]["pass"] == true);
  // Bad graph literals are usage errors.
  CHECK(run({"gph", "tensor", "--g1", "{}", "--g2", g}).code == 2);
}

TEST_CASE("--json mirrors stdout lines into a file") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "wtensor_cli_test.jsonl";
  std::filesystem::remove(path);
  const CliResult r = run({"--json", path.string(), "species", "cov", "--a", "1", "--b", "1",
                           "--n", "1"});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("every stdout line of every probe is valid single-line JSON") {
  const std::vector<std::vector<std::string>> probes = {
      {"hurwitz", "dstar"},
      {"hurwitz", "check-der"},
      {"hurwitz", "check-rb"},
      {"hurwitz", "diamond", "--f", "iota", "--g", "ones"},
      {"hurwitz", "lift", "--f", "squares"},
      {"hurwitz", "bialg", "--f", "iota", "--g", "iota"},
      {"species", "enum", "--F", "E", "--G", "E", "--labels", "2", "--colors", "1"},
      {"species", "nfold", "--card", "1,1,1", "--card", "1,1,1", "--labels", "2"},
      {"species", "mfil", "--k", "2", "--labels", "2"},
      {"species", "flag3", "--labels", "3"},
      {"species", "leibniz", "--x", "1", "--y", "1"},
      {"qcharade", "qmul", "--q", "6", "--f", "ones", "--g", "ones"},
      {"qcharade", "mflg", "--q", "2", "--n", "2", "--k", "2"},
      {"qcharade", "spes", "--q", "2", "--n", "2", "--a", "1", "--b", "1"},
      {"gph", "op", "--g", R"({"dimA":1,"dimE":1,"s":[0],"t":[1]})"},
      {"gph", "j", "--e", R"(["lam","0","0","1"])", "--m", "2"},
      {"gph", "check-rbmonoid"},
      {"gph", "check-multi", "--n", "2"},
      {"gph", "rmonoid"},
      {"gph", "k"},
  };
  for (const auto& probe : probes) {
    CAPTURE(probe.front());
    const CliResult r = run(probe);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
    for (const Json& line : parse_lines(r.out)) CHECK_FALSE(line.is_discarded());
  }
}
