#include <map>

#include "galring/analysis/center.hpp"
#include "galring/analysis/growth.hpp"
#include "galring/analysis/lattice.hpp"
#include "galring/analysis/relations.hpp"
#include "galring/arith/parse.hpp"
#include "galring/arith/sampler.hpp"
#include "galring/error.hpp"
#include "internal.hpp"

namespace galring::cli {

namespace {

Check make_check(std::string name, bool passed, std::optional<std::string> residual = std::nullopt,
                 std::vector<std::pair<std::string, std::string>> witness = {}) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  if (!passed) c.residual = std::move(residual);
  c.witness = std::move(witness);
  return c;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<std::string> strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

struct Params {
  const Json& job;
  std::string where;

  bool has(const char* key) const { return job.contains(key); }
  const Json& at(const char* key) const { return require(job, key, where); }
  std::string field(const char* key) const { return where + "." + key; }
  const Json* expect(const char* key) const {
    if (!job.contains("expect") || !job.at("expect").is_object() || !job.at("expect").contains(key)) return nullptr;
    return &job.at("expect").at(key);
  }
};

std::vector<Expression> expression_list(const Params& p, const char* key, const AlgebraSpec& spec) {
  const Json& list = p.at(key);
  if (!list.is_array()) throw ScenarioError(p.field(key) + ": expected an array of expressions");
  std::vector<Expression> out;
  for (const auto& x : list) out.push_back(expression_of(x, spec, p.field(key)));
  return out;
}

// Named elements for jobs defaulting to "all generators".
std::vector<std::pair<std::string, Expression>> element_list(const Params& p, const char* key, const AlgebraSpec& spec) {
  std::vector<std::pair<std::string, Expression>> out;
  if (p.has(key)) {
    for (auto& e : expression_list(p, key, spec)) out.emplace_back(e.source(), e);
  } else {
    for (const auto& [name, u] : spec.generators) out.emplace_back(name, Expression::parse(name));
  }
  return out;
}

std::pair<BigRational, BigRational> interval_of(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ScenarioError(where + ": expected [low, high]");
  return {rational_of(v[0], where), rational_of(v[1], where)};
}

std::vector<std::size_t> counts_of(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ScenarioError(where + ": expected an array of integers");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(count_of(x, where));
  return out;
}

std::uint64_t seed_of(const Json& random, const std::string& where) {
  return random.contains("seed") ? count_of(random.at("seed"), where + ".seed") : 1;
}

MonoidElement random_key(Sampler& gen, const Context& ctx, long bound) {
  if (ctx.mode() == KeyMode::FiniteGroup) {
    const auto& keys = ctx.key_group();
    const auto& p = keys.element(static_cast<std::size_t>(gen.range(0, static_cast<long>(keys.size()) - 1)));
    return MonoidElement{std::vector<std::int64_t>(p.begin(), p.end())};
  }
  MonoidElement mu = ctx.identity();
  for (auto& c : mu.coords) c = gen.range(ctx.monoid_only() ? 0 : -bound, bound);
  return mu;
}

std::vector<std::size_t> all_variables(const Context& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ctx.table()->size(); ++v) out.push_back(v);
  return out;
}

SkewElement random_element(Sampler& gen, const ContextPtr& ctx, int terms, bool rational) {
  SkewElement u(ctx);
  const auto vars = all_variables(*ctx);
  const int n = static_cast<int>(gen.range(1, terms));
  for (int i = 0; i < n; ++i) {
    const RatFunc a = rational ? gen.ratfunc(ctx->table(), vars, 2, 2) : RatFunc(gen.polynomial(ctx->table(), vars, 2, 1));
    u += SkewElement::monomial(ctx, a, random_key(gen, *ctx, 2));
  }
  return u;
}

RatFunc symmetrize(const Context& ctx, const RatFunc& f, const std::vector<GroupElement>& elements) {
  RatFunc out = ctx.constant(0);
  for (GroupElement g : elements) out = out + ctx.act_group(g, f);
  return out;
}

std::vector<GroupElement> all_elements(const Context& ctx) {
  std::vector<GroupElement> out;
  for (GroupElement g = 0; g < ctx.group().size(); ++g) out.push_back(g);
  return out;
}

using Runner = std::function<JobOutput()>;

Runner op_verify_relations(const Params& p, const BuiltAlgebra& alg) {
  RelationSet rels;
  const Json& spec = p.at("relations");
  if (spec.is_string()) {
    if (spec.get<std::string>() != "gl") throw ScenarioError(p.field("relations") + ": unknown relation table");
    if (alg.gl_rank == 0) throw ScenarioError(p.field("relations") + ": the gl table needs a gt algebra");
    rels = gl_relations(alg.gl_rank);
  } else if (spec.is_array()) {
    for (const auto& r : spec) {
      if (r.is_string()) {
        rels.push_back({r.get<std::string>(), expression_of(r, alg.spec, p.field("relations"))});
      } else {
        const std::string name = string_of(require(r, "name", p.where), p.field("relations") + ".name");
        rels.push_back({name, expression_of(require(r, "expr", p.where), alg.spec, p.field("relations") + "." + name)});
      }
    }
  } else {
    throw ScenarioError(p.field("relations") + ": expected \"gl\" or an array");
  }
  for (const auto& r : rels) expression_of(r.expression.source(), alg.spec, p.field("relations"));
  return [rels, &alg] {
    JobOutput out;
    out.report = verify_relations(alg.spec, rels);
    out.observed["relations"] = rels.size();
    return out;
  };
}

Runner op_verify_gwa(const Params& p, const BuiltAlgebra& alg) {
  if (!alg.gwa) throw ScenarioError(p.where + ": verify_gwa needs a gwa algebra");
  return [&alg] {
    JobOutput out;
    out.report = verify_gwa(*alg.gwa);
    out.observed["relations"] = out.report.checks.size();
    return out;
  };
}

Runner op_invariance(const Params& p, const BuiltAlgebra& alg) {
  auto elements = element_list(p, "elements", alg.spec);
  return [elements, &alg] {
    JobOutput out;
    for (const auto& [name, e] : elements) {
      Stopwatch clock;
      const SkewElement u = e.evaluate(alg.spec);
      Check c = make_check("G-invariant: " + name, is_invariant(u), "not invariant: " + u.to_string());
      c.timing_ms = clock.elapsed_ms();
      out.report.checks.push_back(std::move(c));
    }
    return out;
  };
}

Runner op_support_lattice(const Params& p, const BuiltAlgebra& alg) {
  if (alg.spec.context->mode() != KeyMode::Lattice) throw ScenarioError(p.where + ": support lattices need lattice keys");
  auto elements = element_list(p, "elements", alg.spec);
  std::optional<std::size_t> rank;
  std::optional<std::vector<std::size_t>> divisors;
  std::optional<bool> generates;
  if (auto* e = p.expect("rank")) rank = count_of(*e, p.field("expect.rank"));
  if (auto* e = p.expect("divisors")) divisors = counts_of(*e, p.field("expect.divisors"));
  if (auto* e = p.expect("generates")) {
    if (!e->is_boolean()) throw ScenarioError(p.field("expect.generates") + ": expected a boolean");
    generates = e->get<bool>();
  }
  return [=, &alg] {
    std::vector<SkewElement> values;
    for (const auto& [name, e] : elements) values.push_back(e.evaluate(alg.spec));
    const LatticeRank r = support_lattice_rank(alg.spec.context, values);
    JobOutput out;
    out.observed["rank"] = r.rank;
    out.observed["divisors"] = strings(r.divisors);
    out.observed["generates"] = r.generates();
    const std::string seen = "rank " + std::to_string(r.rank) + ", divisors " + join(strings(r.divisors));
    if (rank) out.report.checks.push_back(make_check("rank == " + std::to_string(*rank), r.rank == *rank, seen));
    if (divisors) {
      std::vector<BigInt> want;
      for (auto d : *divisors) want.emplace_back(static_cast<unsigned long>(d));
      out.report.checks.push_back(make_check("elementary divisors == " + join(strings(*divisors)), r.divisors == want, seen));
    }
    if (generates) {
      out.report.checks.push_back(make_check(std::string(*generates ? "generates" : "does not generate") + " Z^" +
                                                 std::to_string(r.ambient),
                                             r.generates() == *generates, seen));
    }
    return out;
  };
}

Runner op_center(const Params& p, const BuiltAlgebra& alg) {
  const unsigned degree = static_cast<unsigned>(count_of(p.at("degree"), p.field("degree")));
  std::optional<std::size_t> dimension;
  std::optional<std::vector<RatFunc>> basis;
  if (auto* e = p.expect("dimension")) dimension = count_of(*e, p.field("expect.dimension"));
  if (auto* e = p.expect("basis")) {
    basis.emplace();
    for (const auto& x : *e) basis->push_back(scalar_of(expression_of(x, alg.spec, p.field("expect.basis")).evaluate(alg.spec), p.field("expect.basis")));
  }
  return [=, &alg] {
    const auto found = center_candidates(alg.spec.context, degree);
    JobOutput out;
    std::vector<std::string> shown;
    for (const auto& f : found) shown.push_back(f.to_string());
    out.observed["degree_bound"] = degree;
    out.observed["dimension"] = found.size();
    out.observed["basis"] = shown;
    if (dimension) {
      out.report.checks.push_back(make_check("dimension == " + std::to_string(*dimension), found.size() == *dimension,
                                             "dimension " + std::to_string(found.size())));
    }
    if (basis) {
      std::vector<std::string> want;
      for (const auto& f : *basis) want.push_back(f.to_string());
      out.report.checks.push_back(make_check("basis == " + join(want), found == *basis, join(shown)));
    }
    return out;
  };
}

Runner op_commutant(const Params& p, const BuiltAlgebra& alg) {
  AlgebraSpec against{alg.spec.context, {}, {}};
  if (p.has("against")) {
    for (const auto& n : p.at("against")) {
      const std::string name = string_of(n, p.field("against"));
      if (!alg.spec.has_generator(name)) throw ScenarioError(p.field("against") + ": unknown generator '" + name + "'");
      against.generators.emplace_back(name, alg.spec.generator(name));
    }
  } else {
    against.generators = alg.spec.generators;
  }
  auto candidates = expression_list(p, "candidates", alg.spec);
  std::optional<std::vector<std::size_t>> retained;
  if (auto* e = p.expect("retained")) retained = counts_of(*e, p.field("expect.retained"));
  return [=, &alg] {
    JobOutput out;
    std::vector<std::size_t> kept;
    std::vector<std::string> kept_text;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!commutant_filter(against, {candidates[i].evaluate(alg.spec)}).empty()) {
        kept.push_back(i);
        kept_text.push_back(candidates[i].source());
      }
    }
    out.observed["retained"] = kept;
    out.observed["retained_elements"] = kept_text;
    if (retained) {
      out.report.checks.push_back(make_check("retained == " + join(strings(*retained)), kept == *retained, join(strings(kept))));
    }
    return out;
  };
}

Runner op_ore(const Params& p, const BuiltAlgebra& alg) {
  struct Pair {
    Expression s, u;
  };
  std::vector<Pair> pairs;
  if (p.has("pairs")) {
    for (const auto& x : p.at("pairs")) {
      pairs.push_back({expression_of(require(x, "s", p.where), alg.spec, p.field("pairs.s")),
                       expression_of(require(x, "u", p.where), alg.spec, p.field("pairs.u"))});
    }
  }
  std::size_t count = 0;
  std::uint64_t seed = 1;
  if (p.has("random")) {
    count = count_of(require(p.at("random"), "count", p.field("random")), p.field("random.count"));
    seed = seed_of(p.at("random"), p.field("random"));
    if (alg.spec.context->monoid_only()) throw ScenarioError(p.where + ": random Ore pairs need invertible keys");
  }
  const std::string where = p.where;
  return [=, &alg] {
    const ContextPtr& ctx = alg.spec.context;
    JobOutput out;
    auto record = [&](const std::string& name, const RatFunc& s, const SkewElement& u) {
      Stopwatch clock;
      const OreWitness w = ore_witness(s, u);
      const bool invariant = std::all_of(ctx->group().generators().begin(), ctx->group().generators().end(),
                                         [&](GroupElement g) { return ctx->act_group(g, w.r) == w.r; });
      const bool ok = w.verified && w.polynomial && invariant && !w.r.is_zero() && w.r.is_polynomial();
      std::string why = !w.verified ? "u*r != s*u'" : !w.polynomial ? "u' has non-polynomial coefficients" : "r not in Gamma";
      Check c = make_check(name, ok, why, {{"s", s.to_string()}, {"u", u.to_string()}, {"r", w.r.to_string()}, {"u_prime", w.u_prime.to_string()}});
      c.timing_ms = clock.elapsed_ms();
      out.report.checks.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      record("u*r == s*u' (pair " + std::to_string(i + 1) + ")", scalar_of(pairs[i].s.evaluate(alg.spec), where + ".pairs.s"),
             pairs[i].u.evaluate(alg.spec));
    }
    Sampler gen(seed);
    const auto vars = ctx->table()->non_parameters();
    const auto group = all_elements(*ctx);
    for (std::size_t i = 0; i < count; ++i) {
      const RatFunc s0(gen.nonzero_polynomial(ctx->table(), vars, 3, 2));
      RatFunc s = ctx->constant(1);
      for (GroupElement g : group) s = s * ctx->act_group(g, s0);
      record("u*r == s*u' (random " + std::to_string(i + 1) + ")", s, random_element(gen, ctx, 3, true));
    }
    out.observed["instances"] = out.report.checks.size();
    return out;
  };
}

Runner op_orbit_identities(const Params& p, const BuiltAlgebra& alg) {
  const Json& random = p.at("random");
  const std::size_t count = count_of(require(random, "count", p.field("random")), p.field("random.count"));
  const std::uint64_t seed = seed_of(random, p.field("random"));
  if (alg.spec.context->mode() != KeyMode::Lattice) throw ScenarioError(p.where + ": orbit sums need lattice keys");
  return [=, &alg] {
    const ContextPtr& ctx = alg.spec.context;
    const auto vars = all_variables(*ctx);
    const auto group = all_elements(*ctx);
    Sampler gen(seed);
    JobOutput out;
    for (std::size_t i = 0; i < count; ++i) {
      Stopwatch clock;
      const MonoidElement mu = random_key(gen, *ctx, 2);
      RatFunc a = ctx->constant(0), gamma = ctx->constant(0);
      while (a.is_zero()) a = symmetrize(*ctx, gen.nonzero_ratfunc(ctx->table(), vars, 2, 2), ctx->stabilizer_elements(mu));
      while (gamma.is_zero()) gamma = symmetrize(*ctx, gen.nonzero_ratfunc(ctx->table(), vars, 2, 2), group);
      const SkewElement s = orbit_sum(ctx, a, mu);
      std::vector<std::string> failed;
      if (!is_invariant(s)) failed.push_back("[a mu] not G-invariant");
      if (!(gamma * s == orbit_sum(ctx, gamma * a, mu))) failed.push_back("gamma[a mu] != [gamma a mu]");
      if (!(s * gamma == orbit_sum(ctx, a * ctx->act(mu, gamma), mu))) failed.push_back("[a mu]gamma != [a mu(gamma) mu]");
      std::string why;
      for (const auto& f : failed) why += (why.empty() ? "" : "; ") + f;
      Check c = make_check("orbit-sum identities (instance " + std::to_string(i + 1) + ")", failed.empty(), why,
                           {{"mu", to_string(mu)}, {"a", a.to_string()}, {"gamma", gamma.to_string()}});
      c.timing_ms = clock.elapsed_ms();
      out.report.checks.push_back(std::move(c));
    }
    out.observed["instances"] = count;
    return out;
  };
}

Runner op_standard_identity(const Params& p, const BuiltAlgebra& alg) {
  std::vector<Expression> elements;
  if (p.has("elements")) elements = expression_list(p, "elements", alg.spec);
  std::optional<bool> zero;
  std::optional<Expression> value;
  if (auto* e = p.expect("zero")) {
    if (!e->is_boolean()) throw ScenarioError(p.field("expect.zero") + ": expected a boolean");
    zero = e->get<bool>();
  }
  if (auto* e = p.expect("value")) value = expression_of(*e, alg.spec, p.field("expect.value"));
  std::size_t count = 0;
  std::uint64_t seed = 1;
  if (p.has("random")) {
    count = count_of(require(p.at("random"), "count", p.field("random")), p.field("random.count"));
    seed = seed_of(p.at("random"), p.field("random"));
  }
  if (elements.empty() && count == 0) throw ScenarioError(p.where + ": needs elements or random");
  return [=, &alg] {
    JobOutput out;
    if (!elements.empty()) {
      std::vector<SkewElement> args;
      std::vector<std::string> names;
      for (const auto& e : elements) {
        args.push_back(e.evaluate(alg.spec));
        names.push_back(e.source());
      }
      const SkewElement s = standard_identity(args);
      out.observed["value"] = s.to_string();
      const std::string label = "s_" + std::to_string(args.size()) + join(names);
      if (zero) out.report.checks.push_back(make_check(label + (*zero ? " == 0" : " != 0"), s.is_zero() == *zero, s.to_string()));
      if (value) {
        const SkewElement want = value->evaluate(alg.spec);
        out.report.checks.push_back(make_check(label + " == " + value->source(), s == want, s.to_string()));
      }
    }
    Sampler gen(seed);
    for (std::size_t i = 0; i < count; ++i) {
      const SkewElement a = random_element(gen, alg.spec.context, 2, false);
      const SkewElement b = random_element(gen, alg.spec.context, 2, false);
      const SkewElement c = random_element(gen, alg.spec.context, 2, false);
      const SkewElement r1 = standard_identity({a, a, b}), r2 = standard_identity({b, c, c});
      out.report.checks.push_back(make_check("s_3 with a repeated argument == 0 (triple " + std::to_string(i + 1) + ")",
                                             r1.is_zero() && r2.is_zero(), (r1.is_zero() ? r2 : r1).to_string()));
    }
    return out;
  };
}

Runner op_growth(const Params& p, const BuiltAlgebra& alg, const RunOptions& options) {
  auto frame = expression_list(p, "frame", alg.spec);
  const std::size_t k_max = count_of(p.at("k_max"), p.field("k_max"));
  if (k_max < 2) throw ScenarioError(p.field("k_max") + ": must be at least 2");
  std::optional<std::vector<std::size_t>> dims;
  std::optional<std::pair<BigRational, BigRational>> slope;
  if (auto* e = p.expect("dims")) dims = counts_of(*e, p.field("expect.dims"));
  if (auto* e = p.expect("slope")) slope = interval_of(*e, p.field("expect.slope"));
  const std::size_t cap = options.cap_dim;
  return [=, &alg] {
    std::vector<SkewElement> values;
    for (const auto& e : frame) values.push_back(e.evaluate(alg.spec));
    const GrowthProfile g = growth_profile(values, k_max, cap);
    JobOutput out;
    out.observed["dims"] = g.dims;
    out.observed["slope"] = to_string(g.fit.slope);
    out.observed["slope_interval"] = {to_string(g.fit.low), to_string(g.fit.high)};
    out.observed["fit_window"] = {g.fit.window_start, k_max};
    if (dims) out.report.checks.push_back(make_check("dims == " + join(strings(*dims)), g.dims == *dims, join(strings(g.dims))));
    if (slope) {
      out.report.checks.push_back(make_check("slope in [" + to_string(slope->first) + ", " + to_string(slope->second) + "]",
                                             slope->first <= g.fit.slope && g.fit.slope <= slope->second,
                                             "slope " + to_string(g.fit.slope)));
    }
    return out;
  };
}

Runner op_monoid_growth(const Params& p) {
  std::vector<MonoidElement> gens;
  for (const auto& g : p.at("generators")) {
    MonoidElement mu;
    for (const auto& x : g) mu.coords.push_back(integer_of(x, p.field("generators")));
    if (!gens.empty() && mu.coords.size() != gens.front().coords.size()) {
      throw ScenarioError(p.field("generators") + ": vectors of different lengths");
    }
    gens.push_back(std::move(mu));
  }
  const std::size_t k_max = count_of(p.at("k_max"), p.field("k_max"));
  if (k_max < 2) throw ScenarioError(p.field("k_max") + ": must be at least 2");
  std::optional<std::vector<std::size_t>> sizes;
  std::optional<std::pair<BigRational, BigRational>> slope;
  if (auto* e = p.expect("sizes")) sizes = counts_of(*e, p.field("expect.sizes"));
  if (auto* e = p.expect("slope")) slope = interval_of(*e, p.field("expect.slope"));
  return [=] {
    const auto balls = monoid_growth(gens, k_max);
    const SlopeFit fit = fit_growth_slope(balls);
    JobOutput out;
    out.observed["sizes"] = balls;
    out.observed["slope"] = to_string(fit.slope);
    out.observed["slope_interval"] = {to_string(fit.low), to_string(fit.high)};
    if (sizes) out.report.checks.push_back(make_check("ball sizes == " + join(strings(*sizes)), balls == *sizes, join(strings(balls))));
    if (slope) {
      out.report.checks.push_back(make_check("slope in [" + to_string(slope->first) + ", " + to_string(slope->second) + "]",
                                             slope->first <= fit.slope && fit.slope <= slope->second,
                                             "slope " + to_string(fit.slope)));
    }
    return out;
  };
}

Runner op_hecke(const Params& p, const BuiltAlgebra& alg) {
  if (alg.spec.context->mode() != KeyMode::FiniteGroup) throw ScenarioError(p.where + ": hecke_check needs a finite-group algebra");
  const Expression element = expression_of(p.at("element"), alg.spec, p.field("element"));
  HeckeMode mode = HeckeMode::Degenerate;
  if (p.has("mode")) {
    const std::string m = string_of(p.at("mode"), p.field("mode"));
    if (m == "q") {
      mode = HeckeMode::Q;
    } else if (m != "degenerate") {
      throw ScenarioError(p.field("mode") + ": expected \"degenerate\" or \"q\"");
    }
  }
  const BigRational shift = p.has("shift") ? rational_of(p.at("shift"), p.field("shift")) : BigRational(-2);
  return [=, &alg] {
    JobOutput out;
    const SkewElement u = element.evaluate(alg.spec);
    out.report = hecke_membership_check(u, mode, shift);
    out.observed["element"] = u.to_string();
    return out;
  };
}

Runner op_jacobian(const Params& p, const BuiltAlgebra& alg) {
  std::optional<std::vector<Expression>> polys;
  if (p.has("polys")) polys = expression_list(p, "polys", alg.spec);
  std::optional<std::size_t> rank;
  if (auto* e = p.expect("rank")) rank = count_of(*e, p.field("expect.rank"));
  std::vector<BigRational> point;
  const std::size_t nvars = alg.spec.context->table()->size();
  if (p.has("point")) {
    for (const auto& x : p.at("point")) point.push_back(rational_of(x, p.field("point")));
    if (point.size() != nvars) throw ScenarioError(p.field("point") + ": needs one value per variable");
  } else {
    for (std::size_t i = 0; i < nvars; ++i) point.emplace_back(static_cast<long>(3 * i * i + 2 * i + 1), 7);
  }
  const std::string where = p.where;
  return [=, &alg] {
    std::vector<RatFunc> fs;
    if (polys) {
      for (const auto& e : *polys) fs.push_back(scalar_of(e.evaluate(alg.spec), where + ".polys"));
    } else {
      fs = alg.spec.gamma;
    }
    const std::size_t r = jacobian_rank(fs, point);
    JobOutput out;
    out.observed["rank"] = r;
    out.observed["functions"] = fs.size();
    if (rank) out.report.checks.push_back(make_check("Jacobian rank == " + std::to_string(*rank), r == *rank, "rank " + std::to_string(r)));
    return out;
  };
}

Runner op_evaluate(const Params& p, const BuiltAlgebra& alg) {
  const Expression e = expression_of(p.at("expr"), alg.spec, p.field("expr"));
  std::optional<bool> zero;
  std::optional<Expression> value;
  if (auto* x = p.expect("zero")) {
    if (!x->is_boolean()) throw ScenarioError(p.field("expect.zero") + ": expected a boolean");
    zero = x->get<bool>();
  }
  if (auto* x = p.expect("value")) value = expression_of(*x, alg.spec, p.field("expect.value"));
  return [=, &alg] {
    const SkewElement u = e.evaluate(alg.spec);
    JobOutput out;
    out.observed["value"] = u.to_string();
    if (zero) out.report.checks.push_back(make_check(e.source() + (*zero ? " == 0" : " != 0"), u.is_zero() == *zero, u.to_string()));
    if (value) out.report.checks.push_back(make_check(e.source() + " == " + value->source(), u == value->evaluate(alg.spec), u.to_string()));
    return out;
  };
}

}  // namespace

PreparedJob prepare_job(const Json& job, const BuiltAlgebra& alg, const RunOptions& options) {
  if (!job.is_object()) throw ScenarioError("jobs: every job must be an object");
  PreparedJob out;
  out.id = string_of(require(job, "id", "job"), "job.id");
  const std::string where = "job '" + out.id + "'";
  out.op = string_of(require(job, "op", where), where + ".op");
  if (job.contains("expect") && !job.at("expect").is_object() && job.at("expect") != "pass") {
    throw ScenarioError(where + ".expect: expected \"pass\" or an object");
  }
  const Params p{job, where};
  try {
    if (out.op == "verify_relations") {
      out.run = op_verify_relations(p, alg);
    } else if (out.op == "verify_gwa") {
      out.run = op_verify_gwa(p, alg);
    } else if (out.op == "invariance") {
      out.run = op_invariance(p, alg);
    } else if (out.op == "support_lattice_rank") {
      out.run = op_support_lattice(p, alg);
    } else if (out.op == "center_candidates") {
      out.run = op_center(p, alg);
    } else if (out.op == "commutant_filter") {
      out.run = op_commutant(p, alg);
    } else if (out.op == "ore_witness") {
      out.run = op_ore(p, alg);
    } else if (out.op == "orbit_sum_identities") {
      out.run = op_orbit_identities(p, alg);
    } else if (out.op == "standard_identity") {
      out.run = op_standard_identity(p, alg);
    } else if (out.op == "growth_profile") {
      out.run = op_growth(p, alg, options);
    } else if (out.op == "monoid_growth") {
      out.run = op_monoid_growth(p);
    } else if (out.op == "hecke_check") {
      out.run = op_hecke(p, alg);
    } else if (out.op == "jacobian_rank") {
      out.run = op_jacobian(p, alg);
    } else if (out.op == "evaluate") {
      out.run = op_evaluate(p, alg);
    } else {
      throw ScenarioError(where + ": unknown operation '" + out.op + "'");
    }
  } catch (const Error& e) {
    throw ScenarioError(where + ": " + e.what());
  } catch (const Json::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  return out;
}

}  // namespace galring::cli
