#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "galring/cli/runner.hpp"

namespace cli = galring::cli;

namespace {

// A path that exists wins over a suite of the same name.
std::optional<std::string> load(const std::string& target) {
  std::ifstream in(target);
  if (in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  if (auto suite = cli::builtin_suite(target)) return std::string(*suite);
  return std::nullopt;
}

int run(const std::string& target, const cli::RunOptions& options, const std::string& format, const std::string& out_path) {
  const auto text = load(target);
  if (!text) {
    std::cerr << "galring: cannot read scenario '" << target << "'\n";
    return cli::kExitInvalid;
  }
  cli::RunResult result;
  try {
    result = cli::run_scenario_text(*text, options);
  } catch (const cli::ScenarioError& e) {
    std::cerr << "galring: invalid scenario: " << e.what() << "\n";
    return cli::kExitInvalid;
  }
  const std::string rendered = format == "json" ? result.report.dump(2) + "\n" : cli::render_text(result.report);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!(out << rendered)) {
      std::cerr << "galring: cannot write '" << out_path << "'\n";
      return cli::kExitInvalid;
    }
    std::cerr << result.report["status"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for skew monoid rings"};
  app.set_version_flag("--version", "galring " + cli::engine_version());
  app.require_subcommand(1);

  cli::RunOptions options;
  std::string target, format = "text", out_path;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario file or a built-in suite");
  run_cmd->add_option("scenario", target, "Scenario path or suite name")->required();
  run_cmd->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--out", out_path, "Write the report to this path");
  run_cmd->add_option("--cap-dim", options.cap_dim, "Dimension cap for growth profiles")->check(CLI::PositiveNumber);
  run_cmd->add_option("--cap-group", options.cap_group, "Cap on enumerated group orders")->check(CLI::PositiveNumber);

  auto* list_cmd = app.add_subcommand("list-suites", "List built-in suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInvalid;
  }

  if (list_cmd->parsed()) {
    for (const auto& name : cli::builtin_suite_names()) std::cout << name << "\n";
    return 0;
  }
  return run(target, options, format, out_path);
}
