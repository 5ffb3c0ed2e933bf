#include <string>

#include "doctest.h"
#include "galring/cli/runner.hpp"

using namespace galring::cli;

namespace {

RunResult run(const std::string& text, RunOptions options = {}) { return run_scenario_text(text, options); }

bool invalid(const std::string& text) {
  try {
    run(text);
  } catch (const ScenarioError&) {
    return true;
  }
  return false;
}

std::string scenario(const std::string& algebra, const std::string& jobs) {
  return R"({"name": "t", "algebra": )" + algebra + R"(, "jobs": [)" + jobs + "]}";
}

const std::string kWeyl = R"({"kind": "shift_algebra", "n": 1, "m": 1})";

}  // namespace

TEST_CASE("built-in suites") {
  const auto names = builtin_suite_names();
  CHECK(names == std::vector<std::string>{"gwa-ww", "gt-2", "gt-3", "nilhecke-s3", "center-ww", "ore-shift", "pi-witness",
                                          "growth-weyl", "lattice-gt3"});
  for (const auto& n : names) {
    INFO(n);
    auto text = builtin_suite(n);
    REQUIRE(text);
    const RunResult r = run(std::string(*text));
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["status"] == "pass");
    CHECK(r.report["scenario"] == n);
  }
  CHECK_FALSE(builtin_suite("gt-4"));
}

TEST_CASE("report structure and aggregate status") {
  const RunResult r = run(scenario(kWeyl, R"({"id": "ok", "op": "evaluate", "expr": "eps1*x1 - x1*eps1", "expect": {"zero": false}},
      {"id": "bad", "op": "evaluate", "expr": "eps1", "expect": {"zero": true}})"));
  CHECK(r.exit_code == kExitFail);
  CHECK(r.report["status"] == "fail");
  CHECK(r.report["summary"]["passed"] == 1);
  CHECK(r.report["summary"]["failed"] == 1);
  const Json& bad = r.report["jobs"][1];
  CHECK(bad["status"] == "fail");
  CHECK(bad["checks"][0]["status"] == "fail");
  CHECK(bad["checks"][0]["residual"] == "1 ⊗ [1]");
  CHECK(r.report["engine_version"] == engine_version());
  CHECK(r.report["scenario_hash"].get<std::string>().size() == 16);
}

TEST_CASE("runtime errors fail the job without aborting the run") {
  // x1 - x1 is a zero scalar divisor; caught at evaluation time.
  const RunResult r = run(scenario(kWeyl, R"j({"id": "div", "op": "evaluate", "expr": "eps1/(x1 - x1)"},
      {"id": "ok", "op": "evaluate", "expr": "1", "expect": {"zero": false}})j"));
  CHECK(r.exit_code == kExitFail);
  CHECK(r.report["jobs"][0]["status"] == "error");
  CHECK(r.report["jobs"][0].contains("error"));
  CHECK(r.report["jobs"][1]["status"] == "pass");
}

TEST_CASE("validation errors are scenario errors") {
  CHECK(invalid("{"));
  CHECK(invalid("[]"));
  CHECK(invalid(R"({"jobs": []})"));
  CHECK(invalid(scenario(R"({"kind": "nope"})", "")));
  CHECK(invalid(scenario(R"({"kind": "gt", "n": 9})", "")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "frobnicate"})")));
  CHECK(invalid(scenario(kWeyl, R"({"op": "evaluate", "expr": "1"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "evaluate", "expr": "eps7"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "evaluate", "expr": "eps1 +"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "evaluate", "expr": "1", "expect": {"zero": "yes"}})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "evaluate", "expr": "1"}, {"id": "a", "op": "evaluate", "expr": "1"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "verify_gwa"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "verify_relations", "relations": "gl"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "hecke_check", "element": "eps1"})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "growth_profile", "frame": ["1"], "k_max": 1})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "op": "jacobian_rank", "point": ["1", "2"]})")));
  CHECK(invalid(scenario(kWeyl, R"({"id": "a", "algebra": "other", "op": "evaluate", "expr": "1"})")));
  CHECK(invalid(scenario(R"({"kind": "gwa", "variables": ["h"], "sigma": [{"kind": "shift", "offsets": ["1"]}], "a": ["0"]})", "")));
  CHECK(invalid(scenario(R"({"kind": "custom", "variables": ["x", "y"], "group": [[0, 0]]})", "")));
}

TEST_CASE("resource caps") {
  RunOptions small;
  small.cap_dim = 20;
  const RunResult g = run(scenario(kWeyl, R"({"id": "f", "op": "growth_profile", "frame": ["1", "x1", "eps1"], "k_max": 12})"), small);
  CHECK(g.exit_code == kExitResource);
  CHECK(g.report["status"] == "resource");
  CHECK(g.report["jobs"][0]["observed"]["partial_dims"] == Json::array({3, 6, 10, 15}));

  RunOptions tiny_group;
  tiny_group.cap_group = 2;
  const RunResult s = run(std::string(*builtin_suite("gt-3")), tiny_group);
  CHECK(s.exit_code == kExitResource);
  CHECK(s.report.contains("error"));
}

TEST_CASE("determinism and parallel runs") {
  for (const auto& n : builtin_suite_names()) {
    INFO(n);
    const std::string text(*builtin_suite(n));
    const Json a = strip_timings(run(text).report);
    const Json b = strip_timings(run(text).report);
    CHECK(a.dump() == b.dump());
    RunOptions parallel;
    parallel.jobs = 4;
    CHECK(strip_timings(run(text, parallel).report).dump() == a.dump());
    CHECK(a.dump().find("timing_ms") == std::string::npos);
  }
}

TEST_CASE("scenario hash") {
  const Json a = Json::parse(scenario(kWeyl, ""));
  const Json b = Json::parse(scenario(kWeyl, R"({"id": "a", "op": "evaluate", "expr": "1"})"));
  CHECK(scenario_hash(a) == scenario_hash(Json::parse(a.dump())));
  CHECK(scenario_hash(a) != scenario_hash(b));
  // Reference value: FNV-1a of the empty object's dump "{}".
  CHECK(scenario_hash(Json::object()) == "08f44b07b5901a25");
}

TEST_CASE("broken Hecke element fails condition 3") {
  const RunResult r = run(R"j({"name": "b", "algebra": {"kind": "nilhecke", "n": 2},
      "jobs": [{"id": "b", "op": "hecke_check", "element": "1/(x1 - x2)*s1 + 1/(x1 - x2)"}]})j");
  CHECK(r.exit_code == kExitFail);
  bool cond3 = false;
  for (const auto& c : r.report["jobs"][0]["checks"]) {
    if (c["status"] == "fail") {
      CHECK(c["name"].get<std::string>().starts_with("condition 3"));
      cond3 = true;
    }
  }
  CHECK(cond3);
}

TEST_CASE("text rendering") {
  const RunResult r = run(std::string(*builtin_suite("pi-witness")));
  const std::string text = render_text(r.report);
  CHECK(text.find("[pass] s2-nonzero") != std::string::npos);
  CHECK(text.find("pass: 3/3 jobs passed") != std::string::npos);
}
