#include "galring/actions/automorphism.hpp"

#include <algorithm>
#include <map>

#include "galring/error.hpp"

namespace galring {

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) fail(ErrorKind::Context, "composing permutations of different degree");
  Permutation out(a.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[b[j]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[p[j]] = j;
  return out;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation out(degree);
  for (std::size_t j = 0; j < degree; ++j) out[j] = j;
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

MonomialMultiplier to_multiplier(const RatFunc& m, const VariableTable& table) {
  auto monomial_part = [&](const Polynomial& p) -> std::optional<std::pair<Monomial, BigRational>> {
    if (!p.is_monomial()) return std::nullopt;
    return std::make_pair(p.leading_term().mono, p.leading_coeff());
  };
  auto num = monomial_part(m.num());
  auto den = monomial_part(m.den());
  if (!num || !den) fail(ErrorKind::Parameter, "scaling multiplier '" + m.to_string() + "' is not a monomial");
  MonomialMultiplier out;
  out.coeff = num->second / den->second;
  for (std::size_t v = 0; v < table.size(); ++v) {
    const int e = static_cast<int>(num->first[v]) - static_cast<int>(den->first[v]);
    if (e != 0 && table.role(v) != VariableRole::Parameter) {
      fail(ErrorKind::Parameter, "scaling multiplier '" + m.to_string() + "' involves non-parameter variable " + table.name(v));
    }
    out.exponents[v] = e;
  }
  return out;
}

std::vector<RatFunc> apply_all(const std::vector<RatFunc>& images, const std::vector<RatFunc>& targets) {
  std::map<std::size_t, RatFunc> sub;
  for (std::size_t j = 0; j < images.size(); ++j) sub.emplace(j, images[j]);
  std::vector<RatFunc> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(substitute(t, sub));
  return out;
}

}  // namespace

Automorphism Automorphism::identity(TablePtr table) {
  const std::size_t n = table->size();
  return Automorphism(std::move(table), ShiftData{std::vector<BigRational>(n, BigRational(0))});
}

Automorphism Automorphism::shift(TablePtr table, const std::vector<BigRational>& acted_offsets) {
  const auto acted = table->indices(VariableRole::Acted);
  if (acted_offsets.size() != acted.size()) {
    fail(ErrorKind::Parameter, "shift needs one offset per acted variable (" + std::to_string(acted.size()) + ")");
  }
  std::vector<BigRational> offsets(table->size(), BigRational(0));
  for (std::size_t i = 0; i < acted.size(); ++i) offsets[acted[i]] = acted_offsets[i];
  return Automorphism(std::move(table), ShiftData{std::move(offsets)});
}

Automorphism Automorphism::scaling(TablePtr table, const std::vector<RatFunc>& acted_multipliers) {
  const auto acted = table->indices(VariableRole::Acted);
  if (acted_multipliers.size() != acted.size()) {
    fail(ErrorKind::Parameter, "scaling needs one multiplier per acted variable (" + std::to_string(acted.size()) + ")");
  }
  std::vector<MonomialMultiplier> mult(table->size());
  for (std::size_t i = 0; i < acted.size(); ++i) {
    if (acted_multipliers[i].is_zero()) fail(ErrorKind::Parameter, "zero scaling multiplier");
    mult[acted[i]] = to_multiplier(acted_multipliers[i], *table);
  }
  return Automorphism(std::move(table), ScalingData{std::move(mult)});
}

Automorphism Automorphism::permutation(TablePtr table, Permutation perm) {
  if (perm.size() != table->size() || !is_permutation(perm)) fail(ErrorKind::Parameter, "not a permutation of the variables");
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if (table->role(v) == VariableRole::Parameter && perm[v] != v) {
      fail(ErrorKind::Parameter, "permutation moves parameter " + table->name(v));
    }
  }
  return Automorphism(std::move(table), PermutationData{std::move(perm)});
}

Automorphism Automorphism::general(TablePtr table, std::vector<RatFunc> images, std::vector<RatFunc> inverse_images) {
  const std::size_t n = table->size();
  if (images.size() != n || inverse_images.size() != n) fail(ErrorKind::Parameter, "general automorphism needs an image per variable");
  std::vector<RatFunc> vars;
  for (std::size_t v = 0; v < n; ++v) {
    vars.push_back(RatFunc::variable(v, table));
    if (table->role(v) == VariableRole::Parameter && (images[v] != vars.back() || inverse_images[v] != vars.back())) {
      fail(ErrorKind::Parameter, "automorphism moves parameter " + table->name(v));
    }
  }
  if (apply_all(images, inverse_images) != vars || apply_all(inverse_images, images) != vars) {
    fail(ErrorKind::Parameter, "supplied inverse images do not invert the automorphism");
  }
  return Automorphism(std::move(table), GeneralData{std::move(images), std::move(inverse_images)});
}

Automorphism::Kind Automorphism::kind() const {
  switch (data_.index()) {
    case 0: return Kind::Shift;
    case 1: return Kind::Scaling;
    case 2: return Kind::Permutation;
    default: return Kind::General;
  }
}

RatFunc Automorphism::apply(const RatFunc& f) const {
  if (f.table() && !same_table(f.table(), table_)) fail(ErrorKind::Context, "automorphism applied over a different table");
  return std::visit(
      [&](const auto& d) -> RatFunc {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ShiftData>) {
          return translate(f, d.offsets);
        } else if constexpr (std::is_same_v<T, ScalingData>) {
          return apply_monomial_map(f, d.multipliers);
        } else if constexpr (std::is_same_v<T, PermutationData>) {
          return permute_variables(f, d.perm);
        } else {
          std::map<std::size_t, RatFunc> sub;
          for (std::size_t j = 0; j < d.images.size(); ++j) sub.emplace(j, d.images[j]);
          return substitute(f, sub);
        }
      },
      data_);
}

std::vector<RatFunc> Automorphism::images() const {
  std::vector<RatFunc> out;
  for (std::size_t v = 0; v < table_->size(); ++v) out.push_back(apply(RatFunc::variable(v, table_)));
  return out;
}

Automorphism::GeneralData Automorphism::as_general() const {
  if (auto* g = std::get_if<GeneralData>(&data_)) return *g;
  return GeneralData{images(), inverse().images()};
}

Automorphism Automorphism::inverse() const {
  return std::visit(
      [&](const auto& d) -> Automorphism {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ShiftData>) {
          ShiftData out{d.offsets};
          for (auto& o : out.offsets) o = -o;
          return Automorphism(table_, std::move(out));
        } else if constexpr (std::is_same_v<T, ScalingData>) {
          ScalingData out{d.multipliers};
          for (auto& m : out.multipliers) {
            m.coeff = BigRational(1) / m.coeff;
            for (auto& e : m.exponents) e = -e;
          }
          return Automorphism(table_, std::move(out));
        } else if constexpr (std::is_same_v<T, PermutationData>) {
          return Automorphism(table_, PermutationData{galring::inverse(d.perm)});
        } else {
          return Automorphism(table_, GeneralData{d.inverse_images, d.images});
        }
      },
      data_);
}

Automorphism Automorphism::power(long k) const {
  if (k < 0) return inverse().power(-k);
  Automorphism result = identity(table_);
  if (kind() == Kind::Permutation) result = permutation(table_, identity_permutation(table_->size()));
  if (kind() == Kind::Scaling) result = Automorphism(table_, ScalingData{std::vector<MonomialMultiplier>(table_->size())});
  for (long i = 0; i < k; ++i) result = compose(result, *this);
  return result;
}

const std::vector<BigRational>& Automorphism::offsets() const { return std::get<ShiftData>(data_).offsets; }
const std::vector<MonomialMultiplier>& Automorphism::multipliers() const {
  return std::get<ScalingData>(data_).multipliers;
}
const Permutation& Automorphism::perm() const { return std::get<PermutationData>(data_).perm; }

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (!same_table(a.table_, b.table_)) fail(ErrorKind::Context, "composing automorphisms over different tables");
  using K = Automorphism::Kind;
  const auto& table = a.table_;
  if (a.kind() == K::Shift && b.kind() == K::Shift) {
    auto offsets = a.offsets();
    for (std::size_t j = 0; j < offsets.size(); ++j) offsets[j] += b.offsets()[j];
    return Automorphism(table, Automorphism::ShiftData{std::move(offsets)});
  }
  if (a.kind() == K::Scaling && b.kind() == K::Scaling) {
    // Multipliers only involve parameters, which both maps fix.
    auto mult = a.multipliers();
    for (std::size_t j = 0; j < mult.size(); ++j) {
      mult[j].coeff *= b.multipliers()[j].coeff;
      for (std::size_t v = 0; v < kMaxVariables; ++v) mult[j].exponents[v] += b.multipliers()[j].exponents[v];
    }
    return Automorphism(table, Automorphism::ScalingData{std::move(mult)});
  }
  if (a.kind() == K::Permutation && b.kind() == K::Permutation) {
    return Automorphism(table, Automorphism::PermutationData{compose(a.perm(), b.perm())});
  }
  // Identity shifts compose trivially with anything.
  auto is_identity_shift = [](const Automorphism& x) {
    return x.kind() == K::Shift && std::all_of(x.offsets().begin(), x.offsets().end(), [](const auto& o) { return o == 0; });
  };
  if (is_identity_shift(a)) return b;
  if (is_identity_shift(b)) return a;
  const auto ga = a.as_general();
  const auto gb = b.as_general();
  std::vector<RatFunc> images, inverse_images;
  for (const auto& img : gb.images) images.push_back(a.apply(img));
  const Automorphism b_inv = b.inverse();
  for (const auto& img : ga.inverse_images) inverse_images.push_back(b_inv.apply(img));
  return Automorphism(table, Automorphism::GeneralData{std::move(images), std::move(inverse_images)});
}

}  // namespace galring
