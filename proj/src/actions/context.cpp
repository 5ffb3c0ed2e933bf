#include "galring/actions/context.hpp"

#include <algorithm>
#include <sstream>

#include "galring/error.hpp"

namespace galring {

std::string to_string(const MonoidElement& mu) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < mu.coords.size(); ++i) {
    if (i) os << ',';
    os << mu.coords[i];
  }
  os << ']';
  return os.str();
}

namespace {

Permutation to_perm(const MonoidElement& mu) {
  Permutation p(mu.coords.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mu.coords[i] < 0) fail(ErrorKind::Context, "negative entry in permutation key " + to_string(mu));
    p[i] = static_cast<std::size_t>(mu.coords[i]);
  }
  return p;
}

MonoidElement from_perm(const Permutation& p) {
  MonoidElement mu;
  mu.coords.reserve(p.size());
  for (std::size_t v : p) mu.coords.push_back(static_cast<std::int64_t>(v));
  return mu;
}

// Integer solution nu of sum_i nu_i rows[i] = target, if the rows are
// independent and one exists.
std::optional<std::vector<std::int64_t>> solve_integer_combination(const std::vector<std::vector<BigRational>>& rows,
                                                                   const std::vector<BigRational>& target) {
  const std::size_t m = rows.size();
  const std::size_t len = target.size();
  // Augmented system: len equations, m unknowns.
  std::vector<std::vector<BigRational>> a(len, std::vector<BigRational>(m + 1));
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = rows[i][j];
    a[j][m] = target[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < len; ++c) {
    std::size_t p = r;
    while (p < len && a[p][c] == 0) ++p;
    if (p == len) return std::nullopt;  // dependent rows
    std::swap(a[p], a[r]);
    const BigRational inv = BigRational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t q = 0; q < len; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const BigRational f = a[q][c];
      for (std::size_t k = c; k <= m; ++k) a[q][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() != m) return std::nullopt;
  for (std::size_t q = r; q < len; ++q) {
    if (a[q][m] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> nu(m);
  for (std::size_t i = 0; i < m; ++i) {
    const BigRational& v = a[i][m];
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    nu[i] = v.get_num().get_si();
  }
  return nu;
}

bool independent(const std::vector<std::vector<BigRational>>& rows) {
  if (rows.empty()) return true;
  // Solving for the zero target has a unique solution iff the rows are
  // independent; solve_integer_combination reports dependence as nullopt.
  return solve_integer_combination(rows, std::vector<BigRational>(rows.front().size(), BigRational(0))).has_value();
}

std::vector<BigRational> shift_signature(const Automorphism& a) { return a.offsets(); }

std::vector<BigRational> scaling_signature(const Automorphism& a) {
  std::vector<BigRational> sig;
  for (const auto& m : a.multipliers()) {
    for (int e : m.exponents) sig.emplace_back(e);
  }
  return sig;
}

}  // namespace

ContextPtr Context::lattice(TablePtr table, std::vector<Automorphism> generators, PermutationGroup group,
                            bool monoid_only) {
  auto ctx = std::shared_ptr<Context>(new Context());
  ctx->mode_ = KeyMode::Lattice;
  ctx->monoid_only_ = monoid_only;
  if (group.degree() != table->size()) fail(ErrorKind::Parameter, "group degree must equal the number of variables");
  for (const auto& g : generators) {
    if (!same_table(g.table(), table)) fail(ErrorKind::Context, "lattice generator over a different table");
  }
  for (const auto& p : group.elements()) Automorphism::permutation(table, p);  // validates parameters are fixed

  const bool all_shift = std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.kind() == Automorphism::Kind::Shift; });
  const bool all_scaling = std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.kind() == Automorphism::Kind::Scaling; });
  if (all_shift) {
    ctx->lattice_kind_ = LatticeKind::Shift;
  } else if (all_scaling) {
    ctx->lattice_kind_ = LatticeKind::Scaling;
  } else {
    ctx->lattice_kind_ = LatticeKind::General;
  }

  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (ctx->lattice_kind_ == LatticeKind::General && galring::compose(generators[i], generators[j]) != galring::compose(generators[j], generators[i])) {
        fail(ErrorKind::Parameter, "lattice generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
      }
    }
  }
  // Conjugates are located by their signatures, which needs a free action.
  if (ctx->lattice_kind_ != LatticeKind::General && group.size() > 1) {
    std::vector<std::vector<BigRational>> rows;
    for (const auto& g : generators) rows.push_back(ctx->lattice_kind_ == LatticeKind::Shift ? shift_signature(g) : scaling_signature(g));
    if (!independent(rows)) fail(ErrorKind::Parameter, "lattice generators do not act freely (Z^m -> Aut is not injective)");
  }

  ctx->table_ = std::move(table);
  ctx->generators_ = std::move(generators);
  ctx->group_ = std::move(group);
  ctx->keys_ = PermutationGroup::trivial(ctx->table_->size());
  ctx->build_conjugation();
  return ctx;
}

ContextPtr Context::finite_group(TablePtr table, PermutationGroup keys, PermutationGroup group) {
  if (keys.degree() != table->size() || group.degree() != table->size()) {
    fail(ErrorKind::Parameter, "group degree must equal the number of variables");
  }
  for (const auto& p : keys.elements()) Automorphism::permutation(table, p);
  for (const auto& p : group.elements()) Automorphism::permutation(table, p);
  auto ctx = std::shared_ptr<Context>(new Context());
  ctx->mode_ = KeyMode::FiniteGroup;
  ctx->table_ = std::move(table);
  ctx->keys_ = std::move(keys);
  ctx->group_ = std::move(group);
  for (const auto& g : ctx->group_.elements()) {
    for (const auto& w : ctx->keys_.elements()) {
      if (!ctx->keys_.contains(galring::compose(galring::compose(g, w), galring::inverse(g)))) {
        fail(ErrorKind::NormalizationViolation, "G does not normalize the key group");
      }
    }
  }
  return ctx;
}

std::optional<MonoidElement> Context::locate(GroupElement g, std::size_t i) const {
  const Permutation pinv = galring::inverse(group_.element(g));
  const Automorphism& eps = generators_[i];
  if (lattice_kind_ != LatticeKind::General) {
    // The conjugate of a shift (scaling) by a variable permutation is the
    // shift (scaling) with permuted per-variable data.
    std::vector<std::vector<BigRational>> rows;
    std::vector<BigRational> target;
    if (lattice_kind_ == LatticeKind::Shift) {
      for (const auto& e : generators_) rows.push_back(shift_signature(e));
      for (std::size_t j = 0; j < pinv.size(); ++j) target.push_back(eps.offsets()[pinv[j]]);
    } else {
      for (const auto& e : generators_) rows.push_back(scaling_signature(e));
      for (std::size_t j = 0; j < pinv.size(); ++j) {
        for (int x : eps.multipliers()[pinv[j]].exponents) target.emplace_back(x);
      }
    }
    if (auto nu = solve_integer_combination(rows, target)) return MonoidElement{*nu};
    return std::nullopt;
  }
  const Automorphism pg = group_automorphism(g);
  const Automorphism target = galring::compose(galring::compose(pg, eps), pg.inverse());
  std::vector<MonoidElement> candidates{identity()};
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    for (int sign : {1, -1}) {
      MonoidElement mu = identity();
      mu.coords[k] = sign;
      candidates.push_back(mu);
    }
  }
  for (const auto& mu : candidates) {
    if (automorphism(mu) == target) return mu;
  }
  return std::nullopt;
}

void Context::build_conjugation() {
  const std::size_t m = generators_.size();
  conjugation_.assign(group_.size(), {});
  for (GroupElement g = 0; g < group_.size(); ++g) {
    const bool is_generator = std::find(group_.generators().begin(), group_.generators().end(), g) != group_.generators().end();
    for (std::size_t i = 0; i < m; ++i) {
      if (g == 0) {
        conjugation_[g].push_back(generator(i));
        continue;
      }
      auto located = locate(g, i);
      if (!located) {
        fail(ErrorKind::NormalizationViolation,
             "G does not normalize the lattice: conjugate of generator " + std::to_string(i + 1) + " is not in M");
      }
      if (monoid_only_ && std::any_of(located->coords.begin(), located->coords.end(), [](auto c) { return c < 0; })) {
        fail(ErrorKind::NormalizationViolation, "conjugation leaves N^m");
      }
      if (is_generator && lattice_kind_ != LatticeKind::General) {
        const Automorphism pg = group_automorphism(g);
        const Automorphism target = galring::compose(galring::compose(pg, generators_[i]), pg.inverse());
        if (automorphism(*located) != target) {
          fail(ErrorKind::NormalizationViolation, "symbolic check of g.eps_" + std::to_string(i + 1) + " failed");
        }
      }
      conjugation_[g].push_back(std::move(*located));
    }
  }
}

std::size_t Context::key_length() const {
  return mode_ == KeyMode::Lattice ? generators_.size() : table_->size();
}

MonoidElement Context::identity() const {
  if (mode_ == KeyMode::Lattice) return MonoidElement{std::vector<std::int64_t>(generators_.size(), 0)};
  return from_perm(identity_permutation(table_->size()));
}

std::size_t Context::generator_count() const {
  return mode_ == KeyMode::Lattice ? generators_.size() : keys_.generators().size();
}

MonoidElement Context::generator(std::size_t i) const {
  if (mode_ == KeyMode::Lattice) {
    MonoidElement mu = identity();
    mu.coords.at(i) = 1;
    return mu;
  }
  return from_perm(keys_.element(keys_.generators().at(i)));
}

bool Context::is_valid(const MonoidElement& mu) const {
  if (mode_ == KeyMode::Lattice) {
    if (mu.coords.size() != generators_.size()) return false;
    if (monoid_only_ && std::any_of(mu.coords.begin(), mu.coords.end(), [](auto c) { return c < 0; })) return false;
    return true;
  }
  if (mu.coords.size() != table_->size()) return false;
  if (std::any_of(mu.coords.begin(), mu.coords.end(), [](auto c) { return c < 0; })) return false;
  return keys_.contains(to_perm(mu));
}

void Context::validate(const MonoidElement& mu) const {
  if (mu.coords.size() != key_length()) {
    fail(ErrorKind::Context, "monoid element " + to_string(mu) + " has length " + std::to_string(mu.coords.size()) +
                                 ", expected " + std::to_string(key_length()));
  }
  if (!is_valid(mu)) fail(ErrorKind::NormalizationViolation, "monoid element " + to_string(mu) + " is not in M");
}

MonoidElement Context::compose(const MonoidElement& a, const MonoidElement& b) const {
  validate(a);
  validate(b);
  if (mode_ == KeyMode::FiniteGroup) return from_perm(galring::compose(to_perm(a), to_perm(b)));
  MonoidElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

MonoidElement Context::inverse(const MonoidElement& a) const {
  validate(a);
  if (mode_ == KeyMode::FiniteGroup) return from_perm(galring::inverse(to_perm(a)));
  if (monoid_only_ && a != identity()) fail(ErrorKind::NotInvertible, to_string(a) + " is not invertible in N^m");
  MonoidElement out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

RatFunc Context::act(const MonoidElement& mu, const RatFunc& f) const {
  validate(mu);
  if (f.table() && !same_table(f.table(), table_)) fail(ErrorKind::Context, "acting on a function over a different table");
  if (f.is_constant()) return f;
  if (mode_ == KeyMode::FiniteGroup) return permute_variables(f, to_perm(mu));
  switch (lattice_kind_) {
    case LatticeKind::Shift: {
      std::vector<BigRational> offsets(table_->size(), BigRational(0));
      bool any = false;
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (mu.coords[i] == 0) continue;
        any = true;
        const auto& o = generators_[i].offsets();
        for (std::size_t j = 0; j < offsets.size(); ++j) offsets[j] += o[j] * mu.coords[i];
      }
      return any ? translate(f, offsets) : f;
    }
    case LatticeKind::Scaling: {
      std::vector<MonomialMultiplier> mult(table_->size());
      bool any = false;
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        const long k = mu.coords[i];
        if (k == 0) continue;
        any = true;
        const auto& gm = generators_[i].multipliers();
        for (std::size_t j = 0; j < mult.size(); ++j) {
          mult[j].coeff *= pow(gm[j].coeff, k);
          for (std::size_t v = 0; v < kMaxVariables; ++v) mult[j].exponents[v] += static_cast<int>(k) * gm[j].exponents[v];
        }
      }
      return any ? apply_monomial_map(f, mult) : f;
    }
    case LatticeKind::General: {
      RatFunc out = f;
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        const long k = mu.coords[i];
        if (k == 0) continue;
        const Automorphism step = k > 0 ? generators_[i] : generators_[i].inverse();
        for (long r = 0; r < (k > 0 ? k : -k); ++r) out = step.apply(out);
      }
      return out;
    }
  }
  return f;
}

RatFunc Context::act_group(GroupElement g, const RatFunc& f) const {
  if (g == 0 || f.is_constant()) return f;
  return permute_variables(f, group_.element(g));
}

Automorphism Context::automorphism(const MonoidElement& mu) const {
  validate(mu);
  if (mode_ == KeyMode::FiniteGroup) return Automorphism::permutation(table_, to_perm(mu));
  Automorphism out = Automorphism::identity(table_);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (mu.coords[i] != 0) out = galring::compose(out, generators_[i].power(mu.coords[i]));
  }
  return out;
}

Automorphism Context::group_automorphism(GroupElement g) const {
  return Automorphism::permutation(table_, group_.element(g));
}

MonoidElement Context::conjugate(GroupElement g, const MonoidElement& mu) const {
  validate(mu);
  if (g == 0) return mu;
  if (mode_ == KeyMode::FiniteGroup) {
    const Permutation& p = group_.element(g);
    Permutation out = galring::compose(galring::compose(p, to_perm(mu)), galring::inverse(p));
    if (!keys_.contains(out)) fail(ErrorKind::NormalizationViolation, "conjugate is not in the key group");
    return from_perm(out);
  }
  MonoidElement out = identity();
  const auto& rows = conjugation_.at(g);
  for (std::size_t i = 0; i < mu.coords.size(); ++i) {
    if (mu.coords[i] == 0) continue;
    for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += mu.coords[i] * rows[i].coords[k];
  }
  if (!is_valid(out)) fail(ErrorKind::NormalizationViolation, "conjugate " + to_string(out) + " is not in M");
  return out;
}

std::set<MonoidElement> Context::orbit(const MonoidElement& mu) const {
  std::set<MonoidElement> out;
  for (GroupElement g = 0; g < group_.size(); ++g) out.insert(conjugate(g, mu));
  return out;
}

std::vector<GroupElement> Context::stabilizer_elements(const MonoidElement& mu) const {
  std::vector<GroupElement> out;
  for (GroupElement g = 0; g < group_.size(); ++g) {
    if (conjugate(g, mu) == mu) out.push_back(g);
  }
  return out;
}

PermutationGroup Context::stabilizer(const MonoidElement& mu) const {
  std::vector<Permutation> elements;
  for (GroupElement g : stabilizer_elements(mu)) elements.push_back(group_.element(g));
  return PermutationGroup::from_elements(table_->size(), std::move(elements));
}

}  // namespace galring
