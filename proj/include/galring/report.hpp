#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace galring {

struct Check {
  std::string name;
  bool passed = false;
  // Nonzero residual or failure reason, in canonical text form.
  std::optional<std::string> residual;
  // Supporting values (witness elements, computed quantities) as key/value text.
  std::vector<std::pair<std::string, std::string>> witness;
  double timing_ms = 0;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void append(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace galring
