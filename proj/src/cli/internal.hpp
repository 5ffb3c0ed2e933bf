#pragma once

#include <functional>
#include <optional>
#include <string>

#include "galring/analysis/expression.hpp"
#include "galring/cli/runner.hpp"
#include "galring/constructors/algebras.hpp"

namespace galring::cli {

struct BuiltAlgebra {
  std::string kind;
  AlgebraSpec spec;
  std::optional<GWASpec> gwa;
  std::size_t gl_rank = 0;  // gt algebras
};

struct JobOutput {
  Report report;
  Json observed = Json::object();
};

struct PreparedJob {
  std::string id;
  std::string op;
  std::function<JobOutput()> run;
};

BuiltAlgebra build_algebra(const Json& block, const RunOptions& options);
PreparedJob prepare_job(const Json& job, const BuiltAlgebra& algebra, const RunOptions& options);

// Parameter access; every failure is a ScenarioError naming the field.
const Json& require(const Json& obj, const char* key, const std::string& where);
std::size_t count_of(const Json& v, const std::string& where);
std::int64_t integer_of(const Json& v, const std::string& where);
BigRational rational_of(const Json& v, const std::string& where);
std::string string_of(const Json& v, const std::string& where);
// Parses and checks that every name resolves in the algebra.
Expression expression_of(const Json& v, const AlgebraSpec& spec, const std::string& where);
RatFunc scalar_of(const SkewElement& u, const std::string& where);

}  // namespace galring::cli
