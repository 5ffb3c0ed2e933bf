#include <map>

#include "galring/arith/parse.hpp"
#include "galring/error.hpp"
#include "internal.hpp"

namespace galring::cli {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ScenarioError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::int64_t integer_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t used = 0;
      const long long x = std::stoll(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
  }
  throw ScenarioError(where + ": expected an integer");
}

std::size_t count_of(const Json& v, const std::string& where) {
  const std::int64_t x = integer_of(v, where);
  if (x < 0) throw ScenarioError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(x);
}

BigRational rational_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return BigRational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ScenarioError(where + ": expected an exact rational (integer or \"p/q\" string)");
}

std::string string_of(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ScenarioError(where + ": expected a string");
  return v.get<std::string>();
}

Expression expression_of(const Json& v, const AlgebraSpec& spec, const std::string& where) {
  const std::string text = v.is_number_integer() ? std::to_string(v.get<std::int64_t>()) : string_of(v, where);
  try {
    Expression e = Expression::parse(text);
    for (const auto& name : e.names()) {
      if (!spec.has_generator(name) && !spec.context->table()->index_of(name)) {
        throw ScenarioError(where + ": unresolved name '" + name + "' in '" + text + "'");
      }
    }
    return e;
  } catch (const Error& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

RatFunc scalar_of(const SkewElement& u, const std::string& where) {
  for (const auto& [mu, a] : u.terms()) {
    if (mu != u.context()->identity()) throw ScenarioError(where + ": expected a scalar (coefficient) expression");
  }
  return u.kpart();
}

namespace {

VariableRole role_of(const std::string& s, const std::string& where) {
  if (s == "acted") return VariableRole::Acted;
  if (s == "fixed") return VariableRole::Fixed;
  if (s == "parameter") return VariableRole::Parameter;
  throw ScenarioError(where + ": unknown variable role '" + s + "'");
}

Permutation permutation_of(const Json& v, std::size_t degree, const std::string& where) {
  if (!v.is_array()) throw ScenarioError(where + ": expected a permutation in one-line notation");
  Permutation p;
  for (const auto& x : v) p.push_back(count_of(x, where));
  if (p.size() != degree || !is_permutation(p)) throw ScenarioError(where + ": not a permutation of " + std::to_string(degree) + " points");
  return p;
}

TablePtr table_of(const Json& block, const std::string& where) {
  const Json& vars = require(block, "variables", where);
  if (!vars.is_array()) throw ScenarioError(where + ".variables: expected an array");
  std::vector<VariableTable::Entry> entries;
  for (const auto& v : vars) {
    const std::string w = where + ".variables";
    if (v.is_string()) {
      entries.push_back({v.get<std::string>(), VariableRole::Acted});
    } else {
      entries.push_back({string_of(require(v, "name", w), w), role_of(string_of(require(v, "role", w), w), w)});
    }
  }
  return make_table(std::move(entries));
}

RatFunc ratfunc_of(const Json& v, const TablePtr& table, const std::string& where) {
  const std::string text = v.is_number_integer() ? std::to_string(v.get<std::int64_t>()) : string_of(v, where);
  try {
    return parse_ratfunc(text, table);
  } catch (const Error& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

Automorphism automorphism_of(const Json& v, const TablePtr& table, const std::string& where) {
  const std::string kind = string_of(require(v, "kind", where), where);
  if (kind == "identity") return Automorphism::identity(table);
  if (kind == "shift") {
    std::vector<BigRational> offsets;
    for (const auto& x : require(v, "offsets", where)) offsets.push_back(rational_of(x, where + ".offsets"));
    return Automorphism::shift(table, offsets);
  }
  if (kind == "scaling") {
    std::vector<RatFunc> mult;
    for (const auto& x : require(v, "multipliers", where)) mult.push_back(ratfunc_of(x, table, where + ".multipliers"));
    return Automorphism::scaling(table, mult);
  }
  if (kind == "permutation") return Automorphism::permutation(table, permutation_of(require(v, "perm", where), table->size(), where));
  if (kind == "general") {
    std::vector<RatFunc> images, inverse_images;
    for (const auto& x : require(v, "images", where)) images.push_back(ratfunc_of(x, table, where + ".images"));
    for (const auto& x : require(v, "inverse_images", where)) inverse_images.push_back(ratfunc_of(x, table, where + ".inverse_images"));
    return Automorphism::general(table, images, inverse_images);
  }
  throw ScenarioError(where + ": unknown automorphism kind '" + kind + "'");
}

PermutationGroup group_of(const Json& block, const char* key, std::size_t degree, std::size_t cap, const std::string& where) {
  if (!block.contains(key)) return PermutationGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (const auto& g : block.at(key)) gens.push_back(permutation_of(g, degree, where + "." + key));
  if (gens.empty()) return PermutationGroup::trivial(degree);
  return PermutationGroup::generate(degree, gens, cap);
}

AlgebraSpec shift_like(ContextPtr ctx) {
  AlgebraSpec spec;
  spec.context = ctx;
  for (std::size_t i = 0; i < ctx->lattice_rank(); ++i) {
    spec.generators.emplace_back("eps" + std::to_string(i + 1), SkewElement::key(ctx, ctx->generator(i)));
  }
  for (std::size_t v : ctx->table()->non_parameters()) spec.gamma.push_back(ctx->variable(v));
  return spec;
}

BuiltAlgebra build(const Json& block, const RunOptions& options) {
  const std::string where = "algebra";
  BuiltAlgebra out;
  out.kind = string_of(require(block, "kind", where), where + ".kind");
  if (out.kind == "shift_algebra" || out.kind == "qshift_algebra") {
    const std::size_t n = count_of(require(block, "n", where), where + ".n");
    const std::size_t m = count_of(require(block, "m", where), where + ".m");
    out.spec = shift_like(out.kind == "shift_algebra" ? build_shift_algebra(n, m) : build_qshift_algebra(n, m));
  } else if (out.kind == "gwa") {
    if (block.contains("preset")) {
      const std::string preset = string_of(block.at("preset"), where + ".preset");
      if (preset != "witten-woronowicz") throw ScenarioError(where + ": unknown GWA preset '" + preset + "'");
      out.gwa = witten_woronowicz_spec();
    } else {
      TablePtr table = table_of(block, where);
      std::vector<Automorphism> sigma;
      std::vector<RatFunc> a;
      for (const auto& s : require(block, "sigma", where)) sigma.push_back(automorphism_of(s, table, where + ".sigma"));
      for (const auto& x : require(block, "a", where)) a.push_back(ratfunc_of(x, table, where + ".a"));
      out.gwa = GWASpec::make(table, std::move(sigma), std::move(a));
    }
    out.spec = gwa_embed(*out.gwa);
  } else if (out.kind == "gt") {
    out.gl_rank = count_of(require(block, "n", where), where + ".n");
    out.spec = gt_embedding(out.gl_rank, options.cap_group);
  } else if (out.kind == "nilhecke") {
    out.spec = nilhecke_algebra(count_of(require(block, "n", where), where + ".n"), options.cap_group);
  } else if (out.kind == "custom") {
    TablePtr table = table_of(block, where);
    const std::string mode = block.contains("mode") ? string_of(block.at("mode"), where + ".mode") : "lattice";
    PermutationGroup group = group_of(block, "group", table->size(), options.cap_group, where);
    ContextPtr ctx;
    if (mode == "lattice") {
      std::vector<Automorphism> gens;
      if (block.contains("lattice")) {
        for (const auto& g : block.at("lattice")) gens.push_back(automorphism_of(g, table, where + ".lattice"));
      }
      const bool monoid_only = block.value("monoid_only", false);
      ctx = Context::lattice(table, std::move(gens), std::move(group), monoid_only);
    } else if (mode == "finite_group") {
      ctx = Context::finite_group(table, group_of(block, "keys", table->size(), options.cap_group, where), std::move(group));
    } else {
      throw ScenarioError(where + ".mode: unknown mode '" + mode + "'");
    }
    out.spec.context = ctx;
    for (std::size_t v : table->non_parameters()) out.spec.gamma.push_back(ctx->variable(v));
  } else {
    throw ScenarioError(where + ".kind: unknown algebra '" + out.kind + "'");
  }

  // Extra named generators, each defined by an expression over the earlier ones.
  if (block.contains("generators")) {
    for (const auto& g : block.at("generators")) {
      const std::string w = where + ".generators";
      const std::string name = string_of(require(g, "name", w), w + ".name");
      if (out.spec.has_generator(name) || out.spec.context->table()->index_of(name)) {
        throw ScenarioError(w + ": name '" + name + "' is already defined");
      }
      const Expression e = expression_of(require(g, "expr", w), out.spec, w + "." + name);
      out.spec.generators.emplace_back(name, e.evaluate(out.spec));
    }
  }
  if (block.contains("gamma")) {
    out.spec.gamma.clear();
    for (const auto& g : block.at("gamma")) {
      const Expression e = expression_of(g, out.spec, where + ".gamma");
      out.spec.gamma.push_back(scalar_of(e.evaluate(out.spec), where + ".gamma"));
    }
  }
  return out;
}

}  // namespace

BuiltAlgebra build_algebra(const Json& block, const RunOptions& options) {
  try {
    return build(block, options);
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Resource) throw;
    throw ScenarioError(std::string("algebra: ") + e.what());
  } catch (const Json::exception& e) {
    throw ScenarioError(std::string("algebra: ") + e.what());
  }
}

}  // namespace galring::cli
