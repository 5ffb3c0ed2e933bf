#include "galring/constructors/algebras.hpp"

#include <algorithm>

#include "galring/error.hpp"

namespace galring {

const SkewElement& AlgebraSpec::generator(const std::string& name) const {
  for (const auto& [n, u] : generators) {
    if (n == name) return u;
  }
  fail(ErrorKind::Definition, "unknown generator '" + name + "'");
}

bool AlgebraSpec::has_generator(const std::string& name) const {
  return std::any_of(generators.begin(), generators.end(), [&](const auto& g) { return g.first == name; });
}

namespace {

TablePtr shift_table(std::size_t n, std::size_t m, bool with_q) {
  if (m > n) fail(ErrorKind::Parameter, "number of shifted variables exceeds the number of variables");
  std::vector<VariableTable::Entry> entries;
  for (std::size_t j = 0; j < n; ++j) {
    entries.push_back({"x" + std::to_string(j + 1), j < m ? VariableRole::Acted : VariableRole::Fixed});
  }
  if (with_q) entries.push_back({"q", VariableRole::Parameter});
  return make_table(std::move(entries));
}

MonoidElement unit(std::size_t m, std::size_t i, std::int64_t value = 1) {
  MonoidElement mu{std::vector<std::int64_t>(m, 0)};
  mu.coords[i] = value;
  return mu;
}

Permutation transposition(std::size_t degree, std::size_t i, std::size_t j) {
  Permutation p = identity_permutation(degree);
  std::swap(p[i], p[j]);
  return p;
}

}  // namespace

ContextPtr build_shift_algebra(std::size_t n, std::size_t m) {
  auto table = shift_table(n, m, false);
  std::vector<Automorphism> gens;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<BigRational> offsets(m, BigRational(0));
    offsets[i] = 1;
    gens.push_back(Automorphism::shift(table, offsets));
  }
  return Context::lattice(table, std::move(gens), PermutationGroup::trivial(table->size()));
}

ContextPtr build_qshift_algebra(std::size_t n, std::size_t m) {
  auto table = shift_table(n, m, true);
  const RatFunc q = RatFunc::variable(n, table);
  std::vector<Automorphism> gens;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<RatFunc> mult(m, RatFunc(BigRational(1), table));
    mult[i] = q;
    gens.push_back(Automorphism::scaling(table, mult));
  }
  return Context::lattice(table, std::move(gens), PermutationGroup::trivial(table->size()));
}

GWASpec GWASpec::make(TablePtr table, std::vector<Automorphism> sigma, std::vector<RatFunc> a) {
  if (sigma.size() != a.size()) fail(ErrorKind::Precondition, "GWA needs one element a_i per automorphism");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!same_table(sigma[i].table(), table)) fail(ErrorKind::Context, "GWA automorphism over a different table");
    if (a[i].is_zero()) fail(ErrorKind::Precondition, "GWA element a_" + std::to_string(i + 1) + " is zero");
    if (a[i].table() && !same_table(a[i].table(), table)) fail(ErrorKind::Context, "GWA element over a different table");
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (i == j) continue;
      if (i < j && compose(sigma[i], sigma[j]) != compose(sigma[j], sigma[i])) {
        fail(ErrorKind::Precondition,
             "sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) + " do not commute");
      }
      if (sigma[i].apply(a[j]) != a[j]) {
        fail(ErrorKind::Precondition, "sigma_" + std::to_string(i + 1) + " moves a_" + std::to_string(j + 1));
      }
    }
  }
  return GWASpec{std::move(table), std::move(sigma), std::move(a)};
}

GWASpec witten_woronowicz_spec() {
  auto table = make_table({{"H", VariableRole::Acted}, {"Z", VariableRole::Acted}, {"s", VariableRole::Parameter}});
  const RatFunc h = RatFunc::variable(0, table), z = RatFunc::variable(1, table), s = RatFunc::variable(2, table);
  const RatFunc one(BigRational(1), table);
  const RatFunc alpha = -one / (s * (one - s * s));
  const RatFunc beta = s / (one - s.pow(4));
  auto sigma = Automorphism::scaling(table, {s.pow(4), s.pow(2)});
  return GWASpec::make(table, {sigma}, {z + alpha * h + beta});
}

AlgebraSpec gwa_embed(const GWASpec& spec) {
  const std::size_t m = spec.sigma.size();
  AlgebraSpec out;
  out.context = Context::lattice(spec.table, spec.sigma, PermutationGroup::trivial(spec.table->size()));
  for (std::size_t i = 0; i < m; ++i) {
    const std::string idx = std::to_string(i + 1);
    out.generators.emplace_back("Xp" + idx, SkewElement::key(out.context, unit(m, i)));
    out.generators.emplace_back("Xm" + idx, SkewElement::monomial(out.context, spec.a[i], unit(m, i, -1)));
  }
  for (std::size_t v : spec.table->non_parameters()) out.gamma.push_back(RatFunc::variable(v, spec.table));
  return out;
}

namespace {

void add_zero_check(Report& report, std::string name, const SkewElement& residual, Stopwatch& clock) {
  Check c;
  c.name = std::move(name);
  c.passed = residual.is_zero();
  if (!c.passed) c.residual = residual.to_string();
  c.timing_ms = clock.elapsed_ms();
  report.checks.push_back(std::move(c));
  clock = Stopwatch();
}

}  // namespace

Report verify_gwa(const GWASpec& spec) {
  const AlgebraSpec alg = gwa_embed(spec);
  const ContextPtr& ctx = alg.context;
  const std::size_t m = spec.sigma.size();
  Report report;
  Stopwatch clock;
  auto xp = [&](std::size_t i) { return alg.generator("Xp" + std::to_string(i + 1)); };
  auto xm = [&](std::size_t i) { return alg.generator("Xm" + std::to_string(i + 1)); };
  for (std::size_t i = 0; i < m; ++i) {
    const std::string idx = std::to_string(i + 1);
    const Automorphism sigma_inv = spec.sigma[i].inverse();
    for (std::size_t v : spec.table->non_parameters()) {
      const RatFunc d = ctx->variable(v);
      const SkewElement de = SkewElement::scalar(ctx, d);
      const std::string dn = spec.table->name(v);
      add_zero_check(report, "X" + idx + "+ " + dn + " = sigma" + idx + "(" + dn + ") X" + idx + "+",
                     xp(i) * de - SkewElement::scalar(ctx, spec.sigma[i].apply(d)) * xp(i), clock);
      add_zero_check(report, "X" + idx + "- " + dn + " = sigma" + idx + "^-1(" + dn + ") X" + idx + "-",
                     xm(i) * de - SkewElement::scalar(ctx, sigma_inv.apply(d)) * xm(i), clock);
    }
    add_zero_check(report, "X" + idx + "- X" + idx + "+ = a" + idx,
                   xm(i) * xp(i) - SkewElement::scalar(ctx, spec.a[i]), clock);
    add_zero_check(report, "X" + idx + "+ X" + idx + "- = sigma" + idx + "(a" + idx + ")",
                   xp(i) * xm(i) - SkewElement::scalar(ctx, spec.sigma[i].apply(spec.a[i])), clock);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
      if (i < j) {
        add_zero_check(report, "[X" + a + "+, X" + b + "+] = 0", commutator(xp(i), xp(j)), clock);
        add_zero_check(report, "[X" + a + "-, X" + b + "-] = 0", commutator(xm(i), xm(j)), clock);
      }
      add_zero_check(report, "[X" + a + "+, X" + b + "-] = 0", commutator(xp(i), xm(j)), clock);
    }
  }
  return report;
}

AlgebraSpec gt_embedding(std::size_t n, std::size_t group_cap) {
  if (n < 1 || n > 5) fail(ErrorKind::Parameter, "Gelfand-Tsetlin rank must be between 1 and 5");
  auto var = [](std::size_t k, std::size_t i) { return k * (k - 1) / 2 + (i - 1); };
  std::vector<VariableTable::Entry> entries;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      entries.push_back({"x" + std::to_string(k) + std::to_string(i), k < n ? VariableRole::Acted : VariableRole::Fixed});
    }
  }
  auto table = make_table(std::move(entries));
  const std::size_t nvars = table->size();
  const std::size_t m = n * (n - 1) / 2;

  std::vector<Automorphism> shifts;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<BigRational> offsets(m, BigRational(0));
    offsets[l] = 1;
    shifts.push_back(Automorphism::shift(table, offsets));
  }
  std::vector<Permutation> row_swaps;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 1; i < k; ++i) row_swaps.push_back(transposition(nvars, var(k, i), var(k, i + 1)));
  }
  auto group = row_swaps.empty() ? PermutationGroup::trivial(nvars) : PermutationGroup::generate(nvars, row_swaps, group_cap);

  AlgebraSpec out;
  out.context = Context::lattice(table, std::move(shifts), std::move(group));
  const ContextPtr& ctx = out.context;
  auto x = [&](std::size_t k, std::size_t i) { return Polynomial::variable(var(k, i), table); };
  // Lattice coordinate of delta_ki equals the variable index of x_ki.
  auto delta = [&](std::size_t k, std::size_t i, std::int64_t e) { return unit(m, var(k, i), e); };
  auto vandermonde_row = [&](std::size_t k, std::size_t i) {
    Polynomial d = Polynomial::constant(BigRational(1), table);
    for (std::size_t j = 1; j <= k; ++j) {
      if (j != i) d = d * (x(k, i) - x(k, j));
    }
    return d;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    RatFunc diag(BigRational(1) - BigRational(static_cast<long>(k)), table);
    for (std::size_t i = 1; i <= k; ++i) diag = diag + RatFunc(x(k, i));
    for (std::size_t i = 1; i < k; ++i) diag = diag - RatFunc(x(k - 1, i));
    const std::string kk = std::to_string(k);
    out.generators.emplace_back("E" + kk + kk, SkewElement::scalar(ctx, diag));
  }
  for (std::size_t k = 1; k < n; ++k) {
    SkewElement raise(ctx), lower(ctx);
    for (std::size_t i = 1; i <= k; ++i) {
      Polynomial up = Polynomial::constant(BigRational(-1), table);
      for (std::size_t j = 1; j <= k + 1; ++j) up = up * (x(k, i) - x(k + 1, j));
      Polynomial down = Polynomial::constant(BigRational(1), table);
      for (std::size_t j = 1; j + 1 <= k; ++j) down = down * (x(k, i) - x(k - 1, j));
      const Polynomial den = vandermonde_row(k, i);
      raise += SkewElement::monomial(ctx, RatFunc::make(up, den), delta(k, i, 1));
      lower += SkewElement::monomial(ctx, RatFunc::make(down, den), delta(k, i, -1));
    }
    const std::string a = std::to_string(k), b = std::to_string(k + 1);
    out.generators.emplace_back("E" + a + b, std::move(raise));
    out.generators.emplace_back("E" + b + a, std::move(lower));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (unsigned s = 1; s <= k; ++s) {
      Polynomial p(table);
      for (std::size_t i = 1; i <= k; ++i) p = p + x(k, i).pow(s);
      out.gamma.emplace_back(p);
    }
  }
  return out;
}

AlgebraSpec nilhecke_algebra(std::size_t n, std::size_t group_cap) {
  if (n < 2 || n > 6) fail(ErrorKind::Parameter, "nilHecke rank must be between 2 and 6");
  std::vector<VariableTable::Entry> entries;
  for (std::size_t j = 1; j <= n; ++j) entries.push_back({"x" + std::to_string(j), VariableRole::Acted});
  auto table = make_table(std::move(entries));
  std::vector<Permutation> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(transposition(n, i, i + 1));
  AlgebraSpec out;
  out.context = Context::finite_group(table, PermutationGroup::generate(n, simple, group_cap), PermutationGroup::trivial(n));
  const ContextPtr& ctx = out.context;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const RatFunc alpha = ctx->variable(i) - ctx->variable(i + 1);
    const SkewElement s = SkewElement::key(ctx, MonoidElement{std::vector<std::int64_t>(simple[i].begin(), simple[i].end())});
    const std::string idx = std::to_string(i + 1);
    out.generators.emplace_back("theta" + idx, alpha.inverse() * (s - SkewElement::one(ctx)));
    out.generators.emplace_back("s" + idx, s);
  }
  for (unsigned p = 1; p <= n; ++p) {
    RatFunc sum = ctx->constant(0);
    for (std::size_t j = 0; j < n; ++j) sum = sum + ctx->variable(j).pow(p);
    out.gamma.push_back(sum);
  }
  return out;
}

std::vector<SkewElement> demazure_elements(std::size_t n) {
  const AlgebraSpec alg = nilhecke_algebra(n);
  std::vector<SkewElement> out;
  for (std::size_t i = 1; i < n; ++i) out.push_back(alg.generator("theta" + std::to_string(i)));
  return out;
}

Report hecke_membership_check(const SkewElement& element, HeckeMode mode, const BigRational& q_shift) {
  const ContextPtr& ctx = element.context();
  if (ctx->mode() != KeyMode::FiniteGroup) {
    fail(ErrorKind::UnsupportedMode, "Hecke membership is checked for finite-group keys only");
  }
  const TablePtr& table = ctx->table();
  const std::size_t n = table->size();
  struct Root {
    std::size_t i, j;
    Polynomial form;
  };
  std::vector<Root> roots;
  Polynomial root_product = Polynomial::constant(BigRational(1), table);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial a = Polynomial::variable(i, table) - Polynomial::variable(j, table);
      root_product = root_product * a;
      roots.push_back({i, j, std::move(a)});
    }
  }
  auto key_of = [](const Permutation& p) { return MonoidElement{std::vector<std::int64_t>(p.begin(), p.end())}; };
  auto perm_of = [](const MonoidElement& mu) { return Permutation(mu.coords.begin(), mu.coords.end()); };
  const BigRational zero(0);

  Report report;
  Stopwatch clock;
  auto push = [&](std::string name, bool passed, std::optional<std::string> residual,
                  std::vector<std::pair<std::string, std::string>> witness = {}) {
    report.checks.push_back({std::move(name), passed, std::move(residual), std::move(witness), clock.elapsed_ms()});
    clock = Stopwatch();
  };

  for (const auto& [w, f] : element.terms()) {
    const std::string wn = to_string(w);
    const bool regular_elsewhere = divide_exact(root_product, f.den()).has_value();
    push("condition 1: w=" + wn + " poles only along root hyperplanes", regular_elsewhere,
         regular_elsewhere ? std::nullopt : std::optional<std::string>("denominator " + f.den().to_string()));
    for (const auto& r : roots) {
      const int order = pole_order(f, r.form, zero);
      push("condition 1: w=" + wn + " alpha=" + r.form.to_string(), order <= 1,
           order <= 1 ? std::nullopt : std::optional<std::string>("pole of order " + std::to_string(order)),
           {{"pole_order", std::to_string(order)}});
    }
  }

  for (const auto& r : roots) {
    const Permutation s_alpha = transposition(n, r.i, r.j);
    std::set<MonoidElement> done;
    for (const auto& [w, f] : element.terms()) {
      const MonoidElement sw = key_of(compose(s_alpha, perm_of(w)));
      const MonoidElement& lo = std::min(w, sw);
      if (!done.insert(lo).second) continue;
      const std::string name = "condition 3: w=" + to_string(lo) + " alpha=" + r.form.to_string();
      try {
        const RatFunc r1 = residue_along(element.coefficient(w), r.form, zero);
        const RatFunc r2 = residue_along(element.coefficient(sw), r.form, zero);
        const RatFunc sum = r1 + r2;
        push(name, sum.is_zero(), sum.is_zero() ? std::nullopt : std::optional<std::string>(sum.to_string()),
             {{"res_w", r1.to_string()}, {"res_s_alpha_w", r2.to_string()}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HigherOrderPole) throw;
        push(name, false, std::string(e.what()));
      }
    }
  }

  if (mode == HeckeMode::Q) {
    for (const auto& [w, f] : element.terms()) {
      const Permutation winv = inverse(perm_of(w));
      for (const auto& r : roots) {
        if (winv[r.i] < winv[r.j]) continue;  // w^{-1}(alpha) positive
        const std::string name = "condition 4: w=" + to_string(w) + " alpha=" + r.form.to_string() + " at " +
                                 galring::to_string(q_shift);
        if (pole_order(f, r.form, q_shift) > 0) {
          push(name, false, std::string("pole along the vanishing hyperplane"));
          continue;
        }
        const RatFunc restricted = restrict_to_hyperplane(f, r.form, q_shift);
        push(name, restricted.is_zero(), restricted.is_zero() ? std::nullopt : std::optional<std::string>(restricted.to_string()));
      }
    }
  }
  return report;
}

}  // namespace galring
