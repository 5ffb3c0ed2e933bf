#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace galring::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

// Malformed or inconsistent scenario (exit code 2).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::size_t jobs = 1;
  std::size_t cap_dim = 5000;
  std::size_t cap_group = 10080;
};

struct RunResult {
  Json report;
  int exit_code = kExitPass;
};

std::string engine_version();

// FNV-1a 64-bit hash of the canonical JSON dump, as 16 hex digits.
std::string scenario_hash(const Json& scenario);

// Validates the whole scenario (algebra, expressions, job parameters) before
// any job runs; ScenarioError on failure.
RunResult run_scenario(const Json& scenario, const RunOptions& options);
// Parses then runs; JSON syntax errors become ScenarioError.
RunResult run_scenario_text(std::string_view text, const RunOptions& options);

std::string render_text(const Json& report);

// Removes every "timing_ms" field, recursively.
Json strip_timings(Json report);

std::vector<std::string> builtin_suite_names();
std::optional<std::string_view> builtin_suite(std::string_view name);

}  // namespace galring::cli
