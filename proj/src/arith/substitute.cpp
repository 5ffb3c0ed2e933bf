#include "galring/arith/substitute.hpp"

#include <algorithm>
#include <limits>

#include "galring/error.hpp"

namespace galring {

namespace {

Polynomial one(const TablePtr& t) { return Polynomial::constant(BigRational(1), t); }

// Cached powers of one polynomial.
class PowerCache {
 public:
  explicit PowerCache(Polynomial base) : powers_{one(base.table()), std::move(base)} {}
  const Polynomial& get(unsigned k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<Polynomial> powers_;
};

// Substitutes num/den images into p and returns (N, D) with p(images) = N/D.
// D = prod_j den_j^{deg_j(p)}.
std::pair<Polynomial, Polynomial> substitute_fraction(const Polynomial& p, const std::map<std::size_t, RatFunc>& images,
                                                      const TablePtr& table) {
  if (p.is_zero()) return {Polynomial(table), one(table)};
  std::map<std::size_t, int> degs;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (!p.uses(v)) continue;
    if (!images.count(v)) fail(ErrorKind::Context, "substitution is missing an image for variable " + std::to_string(v));
    degs[v] = p.degree_in(v);
  }
  std::map<std::size_t, PowerCache> num_pow, den_pow;
  for (const auto& [v, d] : degs) {
    num_pow.emplace(v, PowerCache(images.at(v).num()));
    den_pow.emplace(v, PowerCache(images.at(v).den()));
  }
  Polynomial total(table);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(t.coeff, table);
    for (const auto& [v, d] : degs) {
      const unsigned e = t.mono[v];
      if (e > 0) term = term * num_pow.at(v).get(e);
      const unsigned rest = static_cast<unsigned>(d) - e;
      if (rest > 0 && !images.at(v).den().is_one()) term = term * den_pow.at(v).get(rest);
    }
    total += term;
  }
  Polynomial den = one(table);
  for (const auto& [v, d] : degs) {
    if (!images.at(v).den().is_one()) den = den * den_pow.at(v).get(static_cast<unsigned>(d));
  }
  return {std::move(total), std::move(den)};
}

BigRational binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigRational(r);
}

// Linear form h = sum a_j x_j + a_0 ; returns the eliminated variable and the
// image x_v = (c - sum_{j != v} a_j x_j - a_0) / a_v.
std::pair<std::size_t, Polynomial> solve_linear(const Polynomial& h, const BigRational& c) {
  if (h.degree() > 1) fail(ErrorKind::InvalidDivisor, "divisor '" + h.to_string() + "' is not linear");
  if (h.degree() < 1) fail(ErrorKind::InvalidDivisor, "divisor has no variable part");
  std::size_t var = kMaxVariables;
  BigRational a;
  for (std::size_t v = 0; v < kMaxVariables && var == kMaxVariables; ++v) {
    for (const auto& t : h.terms()) {
      if (t.mono[v] == 1) {
        var = v;
        a = t.coeff;
        break;
      }
    }
  }
  Polynomial rest = h - Polynomial::monomial(Monomial::variable(var), a, h.table());
  Polynomial image = (Polynomial::constant(c, h.table()) - rest).scaled(BigRational(1) / a);
  return {var, image};
}

Polynomial hyperplane_form(const Polynomial& h, const BigRational& c) {
  return h - Polynomial::constant(c, h.table());
}

}  // namespace

bool MonomialMultiplier::is_identity() const {
  return coeff == 1 && std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

Polynomial substitute_polynomial(const Polynomial& p, const std::map<std::size_t, Polynomial>& images) {
  std::map<std::size_t, RatFunc> rimages;
  for (const auto& [v, img] : images) rimages.emplace(v, RatFunc(img));
  auto [n, d] = substitute_fraction(p, rimages, p.table());
  return n;
}

RatFunc substitute(const RatFunc& r, const std::map<std::size_t, RatFunc>& images) {
  const TablePtr& table = r.table();
  auto [nn, nd] = substitute_fraction(r.num(), images, table);
  auto [dn, dd] = substitute_fraction(r.den(), images, table);
  if (dn.is_zero()) fail(ErrorKind::DegenerateSubstitution, "substituted denominator of '" + r.to_string() + "' vanishes");
  // (nn/nd) / (dn/dd) = (nn*dd) / (nd*dn)
  return RatFunc::make(nn * dd, nd * dn);
}

Polynomial translate(const Polynomial& p, std::span<const BigRational> offsets) {
  std::vector<Polynomial::Term> current(p.terms().begin(), p.terms().end());
  bool changed = false;
  for (std::size_t v = 0; v < offsets.size(); ++v) {
    if (offsets[v] == 0 || !p.uses(v)) continue;
    changed = true;
    // (x - o)^e = sum_k C(e,k) x^k (-o)^{e-k}
    const BigRational neg = -offsets[v];
    std::vector<Polynomial::Term> next;
    for (const auto& t : current) {
      const unsigned e = t.mono[v];
      if (e == 0) {
        next.push_back(t);
        continue;
      }
      BigRational opow(1);
      for (unsigned k = e + 1; k-- > 0;) {
        // k runs e, e-1, ..., 0 with opow = (-o)^{e-k}
        Monomial m = t.mono;
        m.set(v, k);
        next.push_back({m, t.coeff * binomial(e, k) * opow});
        opow *= neg;
      }
    }
    current = std::move(next);
  }
  if (!changed) return p;
  return Polynomial::from_terms(std::move(current), p.table());
}

RatFunc translate(const RatFunc& r, std::span<const BigRational> offsets) {
  // Translations are automorphisms of Q[x]: coprimality survives, only the
  // denominator needs rescaling (its grlex leading term is unchanged).
  return RatFunc::from_coprime(translate(r.num(), offsets), translate(r.den(), offsets));
}

Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (t.mono[v] != 0) m.set(perm[v], t.mono[v]);
    }
    for (std::size_t v = perm.size(); v < kMaxVariables; ++v) {
      if (t.mono[v] != 0) m.set(v, t.mono[v]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(out), p.table());
}

RatFunc permute_variables(const RatFunc& r, std::span<const std::size_t> perm) {
  return RatFunc::from_coprime(permute_variables(r.num(), perm), permute_variables(r.den(), perm));
}

RatFunc apply_monomial_map(const RatFunc& r, std::span<const MonomialMultiplier> multipliers) {
  const TablePtr& table = r.table();
  // Exponents after mapping may be negative; collect them in wide integers
  // and shift num and den by a common monomial.
  using Wide = std::array<long, kMaxVariables>;
  auto map_poly = [&](const Polynomial& p, std::vector<std::pair<Wide, BigRational>>& out, Wide& lo) {
    for (const auto& t : p.terms()) {
      Wide e{};
      BigRational c = t.coeff;
      for (std::size_t v = 0; v < kMaxVariables; ++v) e[v] = t.mono[v];
      for (std::size_t v = 0; v < multipliers.size(); ++v) {
        const unsigned k = t.mono[v];
        if (k == 0 || multipliers[v].is_identity()) continue;
        c *= pow(multipliers[v].coeff, static_cast<long>(k));
        for (std::size_t w = 0; w < kMaxVariables; ++w) e[w] += static_cast<long>(k) * multipliers[v].exponents[w];
      }
      for (std::size_t v = 0; v < kMaxVariables; ++v) lo[v] = std::min(lo[v], e[v]);
      out.emplace_back(e, std::move(c));
    }
  };
  Wide lo;
  lo.fill(std::numeric_limits<long>::max());
  std::vector<std::pair<Wide, BigRational>> nt, dt;
  map_poly(r.num(), nt, lo);
  map_poly(r.den(), dt, lo);
  auto build = [&](const std::vector<std::pair<Wide, BigRational>>& src) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(src.size());
    for (const auto& [e, c] : src) {
      Monomial m;
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        const long k = e[v] - lo[v];
        if (k != 0) m.set(v, static_cast<unsigned>(k));
      }
      terms.push_back({m, c});
    }
    return Polynomial::from_terms(std::move(terms), table);
  };
  Polynomial num = build(nt);
  Polynomial den = build(dt);
  if (den.is_monomial()) {
    // Monomial denominators only need the shared monomial factor removed,
    // which the common shift above already did.
    return RatFunc::from_coprime(std::move(num), std::move(den));
  }
  return RatFunc::make(std::move(num), std::move(den));
}

int pole_order(const RatFunc& r, const Polynomial& h, const BigRational& c) {
  solve_linear(h, c);
  const Polynomial form = hyperplane_form(h, c);
  int order = 0;
  Polynomial d = r.den();
  while (true) {
    auto q = divide_exact(d, form);
    if (!q) break;
    ++order;
    d = *std::move(q);
  }
  return order;
}

RatFunc restrict_to_hyperplane(const RatFunc& r, const Polynomial& h, const BigRational& c) {
  auto [var, image] = solve_linear(h, c);
  auto sub = [&](const Polynomial& p) {
    std::map<std::size_t, Polynomial> used;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (p.uses(v)) used.emplace(v, v == var ? image : Polynomial::variable(v, p.table()));
    }
    return substitute_polynomial(p, used);
  };
  Polynomial den = sub(r.den());
  if (den.is_zero()) fail(ErrorKind::Precondition, "'" + r.to_string() + "' has a pole along the hyperplane");
  return RatFunc::make(sub(r.num()), std::move(den));
}

RatFunc residue_along(const RatFunc& r, const Polynomial& h, const BigRational& c) {
  solve_linear(h, c);
  const Polynomial form = hyperplane_form(h, c);
  auto q = divide_exact(r.den(), form);
  if (!q) return RatFunc(BigRational(0), r.table());
  if (divide_exact(*q, form)) {
    fail(ErrorKind::HigherOrderPole, "pole of order >= 2 along " + form.to_string() + " = 0");
  }
  return restrict_to_hyperplane(RatFunc::make(r.num(), *q), h, c);
}

}  // namespace galring
