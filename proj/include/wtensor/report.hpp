#pragma once

#include <json.hpp>

#include <string>
#include <utility>

namespace wtensor {

using Json = nlohmann::json;

// Outcome of one verification op. FAIL always carries a replayable
// counterexample (inputs plus both sides of the failed identity). Wall-clock
// timing is reported on stderr by the CLI, never inside the JSON, so that a
// fixed RunConfig produces byte-identical report streams.
struct Report {
  std::string op;
  Json params = Json::object();
  bool pass = true;
  Json counterexample;  // null while passing
  Json details = Json::object();
  long checks = 0;  // number of identities evaluated

  // Records the first counterexample only (lowest sample index wins).
  void fail(Json ce) {
    if (pass) {
      pass = false;
      counterexample = std::move(ce);
    }
  }

  // Fold a sub-report into this one, keeping the earliest failure.
  void absorb(const Report& sub) {
    checks += sub.checks;
    if (!sub.pass && pass) {
      pass = false;
      counterexample = Json{{"op", sub.op}, {"counterexample", sub.counterexample}};
    }
  }

  Json to_json() const {
    Json j;
    j["op"] = op;
    j["params"] = params;
    j["pass"] = pass;
    j["counterexample"] = pass ? Json() : counterexample;
    j["checks"] = checks;
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace wtensor
