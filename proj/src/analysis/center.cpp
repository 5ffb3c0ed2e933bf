#include "galring/analysis/center.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "galring/error.hpp"

namespace galring {

namespace {

std::vector<Monomial> monomials_up_to(const std::vector<std::size_t>& vars, unsigned degree) {
  std::vector<Monomial> out{Monomial()};
  for (std::size_t v : vars) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (unsigned e = 0; m.degree() + e <= degree; ++e) {
        Monomial x = m;
        if (e) x.set(v, e);
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splits f into sum_m c_m * m with m a monomial in the non-parameter
// variables and c_m in Q(parameters).
std::map<Monomial, RatFunc> split_parameters(const RatFunc& f, const VariableTable& table, std::uint32_t param_mask) {
  if ((f.den().variable_mask() & ~param_mask) != 0) {
    fail(ErrorKind::UnsupportedMode, "action image " + f.to_string() + " is not polynomial in the acted variables");
  }
  std::map<Monomial, std::vector<Polynomial::Term>> parts;
  for (const auto& t : f.num().terms()) {
    Monomial outer, inner;
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (param_mask & (1u << v)) {
        inner.set(v, t.mono[v]);
      } else {
        outer.set(v, t.mono[v]);
      }
    }
    parts[outer].push_back({inner, t.coeff});
  }
  std::map<Monomial, RatFunc> out;
  for (auto& [m, terms] : parts) {
    out.emplace(m, RatFunc::make(Polynomial::from_terms(std::move(terms), f.table()), f.den()));
  }
  return out;
}

// Reduced row echelon form over Q(parameters); returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<RatFunc>>& a, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const RatFunc inv = a[r][c].inverse();
    for (auto& x : a[r]) {
      if (!x.is_zero()) x = x * inv;
    }
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || a[q][c].is_zero()) continue;
      const RatFunc f = a[q][c];
      for (std::size_t k = c; k < columns; ++k) {
        if (!a[r][k].is_zero()) a[q][k] = a[q][k] - f * a[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RatFunc> center_candidates(const ContextPtr& ctx, unsigned degree_bound) {
  const TablePtr& table = ctx->table();
  const std::vector<std::size_t> vars = table->non_parameters();
  std::uint32_t param_mask = 0;
  for (std::size_t v : table->indices(VariableRole::Parameter)) param_mask |= 1u << v;

  const std::vector<Monomial> basis = monomials_up_to(vars, degree_bound);
  std::vector<std::function<RatFunc(const RatFunc&)>> maps;
  for (std::size_t i = 0; i < ctx->generator_count(); ++i) {
    const MonoidElement g = ctx->generator(i);
    maps.push_back([ctx, g](const RatFunc& f) { return ctx->act(g, f); });
  }
  for (GroupElement g : ctx->group().generators()) maps.push_back([ctx, g](const RatFunc& f) { return ctx->act_group(g, f); });

  // Rows: one per (map, monomial of the image); columns: basis monomials.
  std::vector<std::vector<RatFunc>> rows;
  const RatFunc zero = ctx->constant(0);
  for (const auto& phi : maps) {
    std::map<Monomial, std::vector<RatFunc>> block;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const RatFunc m(Polynomial::monomial(basis[j], BigRational(1), table));
      const RatFunc diff = phi(m) - m;
      for (auto& [mono, coeff] : split_parameters(diff, *table, param_mask)) {
        auto it = block.try_emplace(mono, basis.size(), zero).first;
        it->second[j] = coeff;
      }
    }
    for (auto& [mono, row] : block) rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref(rows, basis.size());

  std::vector<RatFunc> out;
  std::vector<bool> is_pivot(basis.size(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < basis.size(); ++free) {
    if (is_pivot[free]) continue;
    RatFunc p(Polynomial::monomial(basis[free], BigRational(1), table));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!rows[r][free].is_zero()) {
        p = p - rows[r][free] * RatFunc(Polynomial::monomial(basis[pivots[r]], BigRational(1), table));
      }
    }
    out.push_back(p);
  }
  return out;
}

std::size_t jacobian_rank(const std::vector<RatFunc>& polys, const std::vector<BigRational>& point) {
  std::vector<std::vector<BigRational>> rows;
  for (const auto& f : polys) {
    if (!f.is_polynomial()) fail(ErrorKind::Precondition, "Jacobian of a non-polynomial " + f.to_string());
    std::vector<BigRational> row;
    for (std::size_t v = 0; v < point.size(); ++v) row.push_back(f.num().derivative(v).evaluate(point));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < point.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t q = rank + 1; q < rows.size(); ++q) {
      if (rows[q][c] == 0) continue;
      const BigRational f = rows[q][c] / rows[rank][c];
      for (std::size_t k = c; k < point.size(); ++k) rows[q][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

OreWitness ore_witness(const RatFunc& s, const SkewElement& u) {
  const ContextPtr& ctx = u.context();
  if (s.is_zero()) fail(ErrorKind::Precondition, "Ore denominator is zero");
  if (!s.is_polynomial()) fail(ErrorKind::Precondition, "Ore denominator " + s.to_string() + " is not a polynomial");
  for (GroupElement g : ctx->group().generators()) {
    if (!(ctx->act_group(g, s) == s)) fail(ErrorKind::Precondition, "Ore denominator " + s.to_string() + " is not G-invariant");
  }
  const SkewElement v = s.inverse() * u;
  RatFunc d = ctx->constant(1);
  for (const auto& [mu, l] : v.terms()) d = d * ctx->act(ctx->inverse(mu), RatFunc(l.den()));
  d = RatFunc(d.num());
  RatFunc r = ctx->constant(1);
  for (GroupElement g = 0; g < ctx->group().size(); ++g) r = r * ctx->act_group(g, d);
  r = RatFunc(r.num().monic());

  OreWitness out{v * r, r, false, true};
  out.verified = (u * r == SkewElement::scalar(ctx, s) * out.u_prime);
  std::uint32_t param_mask = 0;
  for (std::size_t i : ctx->table()->indices(VariableRole::Parameter)) param_mask |= 1u << i;
  for (const auto& [mu, c] : out.u_prime.terms()) {
    if ((c.den().variable_mask() & ~param_mask) != 0) out.polynomial = false;
  }
  return out;
}

}  // namespace galring
