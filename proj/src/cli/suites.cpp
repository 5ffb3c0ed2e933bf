#include <span>

#include "galring/cli/runner.hpp"

namespace galring::cli {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kSuites[];
extern const std::size_t kSuiteCount;

std::span<const std::pair<std::string_view, std::string_view>> suites() { return {kSuites, kSuiteCount}; }
}  // namespace detail

std::vector<std::string> builtin_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::suites()) out.emplace_back(name);
  return out;
}

std::optional<std::string_view> builtin_suite(std::string_view name) {
  for (const auto& [n, text] : detail::suites()) {
    if (n == name) return text;
  }
  return std::nullopt;
}

}  // namespace galring::cli
