#include <atomic>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "galring/analysis/growth.hpp"
#include "galring/error.hpp"
#include "internal.hpp"

#ifndef GALRING_VERSION
#define GALRING_VERSION "0.0.0"
#endif

namespace galring::cli {

namespace {

struct JobResult {
  Json json;
  bool failed = false;
  bool resource = false;
};

Json check_json(const Check& c) {
  Json j = Json::object();
  j["name"] = c.name;
  j["status"] = c.passed ? "pass" : "fail";
  if (c.residual) j["residual"] = *c.residual;
  if (!c.witness.empty()) {
    Json w = Json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    j["witness"] = w;
  }
  j["timing_ms"] = c.timing_ms;
  return j;
}

JobResult execute(const PreparedJob& job) {
  JobResult r;
  Json& j = r.json;
  j["id"] = job.id;
  j["op"] = job.op;
  Stopwatch clock;
  try {
    JobOutput out = job.run();
    j["status"] = out.report.passed() ? "pass" : "fail";
    r.failed = !out.report.passed();
    j["checks"] = Json::array();
    for (const auto& c : out.report.checks) j["checks"].push_back(check_json(c));
    j["observed"] = std::move(out.observed);
  } catch (const GrowthCapExceeded& e) {
    r.resource = true;
    j["status"] = "resource";
    j["checks"] = Json::array();
    j["observed"] = {{"partial_dims", e.partial()}};
    j["error"] = e.what();
  } catch (const Error& e) {
    r.resource = e.kind() == ErrorKind::Resource;
    r.failed = !r.resource;
    j["status"] = r.resource ? "resource" : "error";
    j["checks"] = Json::array();
    j["observed"] = Json::object();
    j["error"] = e.what();
  }
  j["timing_ms"] = clock.elapsed_ms();
  return r;
}

std::vector<JobResult> execute_all(const std::vector<PreparedJob>& jobs, std::size_t workers) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = execute(jobs[i]);
  };
  workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
  if (workers == 1) {
    work();
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

Json header(const Json& scenario) {
  Json report = Json::object();
  report["engine_version"] = engine_version();
  report["scenario"] = scenario.contains("name") && scenario["name"].is_string() ? scenario["name"] : Json("unnamed");
  report["scenario_hash"] = scenario_hash(scenario);
  return report;
}

}  // namespace

std::string engine_version() { return GALRING_VERSION; }

std::string scenario_hash(const Json& scenario) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : Json(scenario).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunResult run_scenario(const Json& scenario, const RunOptions& options) {
  if (!scenario.is_object()) throw ScenarioError("scenario: expected a JSON object");
  Stopwatch clock;
  RunResult result;
  result.report = header(scenario);

  // Either one "algebra" block or named "algebras"; jobs pick one with "algebra".
  std::map<std::string, BuiltAlgebra> algebras;
  std::string default_algebra;
  try {
    if (scenario.contains("algebras")) {
      const Json& blocks = scenario.at("algebras");
      if (!blocks.is_object() || blocks.empty()) throw ScenarioError("scenario.algebras: expected a non-empty object");
      if (scenario.contains("algebra")) throw ScenarioError("scenario: give either algebra or algebras, not both");
      for (const auto& [name, block] : blocks.items()) algebras.emplace(name, build_algebra(block, options));
      default_algebra = blocks.begin().key();
    } else {
      algebras.emplace("", build_algebra(require(scenario, "algebra", "scenario"), options));
    }
  } catch (const Error& e) {
    result.report["status"] = "resource";
    result.report["error"] = e.what();
    result.report["summary"] = {{"jobs", 0}, {"passed", 0}, {"failed", 0}, {"resource", 0}};
    result.report["jobs"] = Json::array();
    result.report["timing_ms"] = clock.elapsed_ms();
    result.exit_code = kExitResource;
    return result;
  }

  const Json& jobs = require(scenario, "jobs", "scenario");
  if (!jobs.is_array()) throw ScenarioError("scenario.jobs: expected an array");
  std::vector<PreparedJob> prepared;
  std::set<std::string> ids;
  for (const auto& job : jobs) {
    std::string name = default_algebra;
    if (job.is_object() && job.contains("algebra")) name = string_of(job.at("algebra"), "job.algebra");
    const auto it = algebras.find(name);
    if (it == algebras.end()) throw ScenarioError("job.algebra: unknown algebra '" + name + "'");
    prepared.push_back(prepare_job(job, it->second, options));
    if (!ids.insert(prepared.back().id).second) throw ScenarioError("jobs: duplicate id '" + prepared.back().id + "'");
  }

  const auto results = execute_all(prepared, options.jobs);
  std::size_t passed = 0, failed = 0, resource = 0;
  Json out = Json::array();
  for (const auto& r : results) {
    if (r.resource) {
      ++resource;
    } else if (r.failed) {
      ++failed;
    } else {
      ++passed;
    }
    out.push_back(r.json);
  }
  result.report["status"] = resource ? "resource" : failed ? "fail" : "pass";
  result.report["summary"] = {{"jobs", results.size()}, {"passed", passed}, {"failed", failed}, {"resource", resource}};
  result.report["jobs"] = std::move(out);
  result.report["timing_ms"] = clock.elapsed_ms();
  result.exit_code = resource ? kExitResource : failed ? kExitFail : kExitPass;
  return result;
}

RunResult run_scenario_text(std::string_view text, const RunOptions& options) {
  Json scenario;
  try {
    scenario = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
  return run_scenario(scenario, options);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  const auto ms = [](const Json& j) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << (j.contains("timing_ms") ? j["timing_ms"].get<double>() : 0.0) << " ms";
    return t.str();
  };
  os << "galring " << report["engine_version"].get<std::string>() << "  scenario " << report["scenario"].get<std::string>()
     << " (" << report["scenario_hash"].get<std::string>() << ")\n";
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
  for (const auto& job : report["jobs"]) {
    os << "\n[" << job["status"].get<std::string>() << "] " << job["id"].get<std::string>() << " (" << job["op"].get<std::string>()
       << ", " << ms(job) << ")\n";
    if (job.contains("error")) os << "    error: " << job["error"].get<std::string>() << "\n";
    for (const auto& c : job["checks"]) {
      os << "    " << (c["status"] == "pass" ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "\n";
      if (c.contains("residual")) os << "         residual: " << c["residual"].get<std::string>() << "\n";
    }
    for (const auto& [k, v] : job["observed"].items()) os << "    " << k << " = " << v.dump() << "\n";
  }
  const Json& s = report["summary"];
  os << "\n" << report["status"].get<std::string>() << ": " << s["passed"] << "/" << s["jobs"] << " jobs passed";
  if (s["failed"] != 0) os << ", " << s["failed"] << " failed";
  if (s["resource"] != 0) os << ", " << s["resource"] << " over a resource cap";
  os << " (" << ms(report) << ")\n";
  return os.str();
}

Json strip_timings(Json report) {
  if (report.is_object()) {
    report.erase("timing_ms");
    for (auto& [k, v] : report.items()) v = strip_timings(std::move(v));
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_timings(std::move(v));
  }
  return report;
}

}  // namespace galring::cli
