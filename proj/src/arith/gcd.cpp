#include <algorithm>
#include <bit>

#include "galring/arith/polynomial.hpp"
#include "galring/error.hpp"

// Multivariate GCD over Q by recursion on variables: split off the content
// with respect to a main variable, run a primitive pseudo-remainder sequence
// on the primitive parts, and recurse for the contents. Every step is exact.

namespace galring {

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(BigRational(1), p.table()); }

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b);

// Divides out every term's common factor; returns the monomial removed.
Monomial strip_monomial(Polynomial& p) {
  const Monomial m = p.min_monomial();
  if (!m.is_one()) p = p.divided_by_monomial(m);
  return m;
}

// gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  // Smallest coefficients first so the running gcd shrinks quickly.
  std::vector<const Polynomial*> order;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](const Polynomial* x, const Polynomial* y) {
    if (x->degree() != y->degree()) return x->degree() < y->degree();
    return x->size() < y->size();
  });
  Polynomial g = *order.front();
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (g.is_constant()) break;
    g = gcd_nonzero(g, *order[i]);
  }
  if (g.is_constant()) return one_like(p);
  return g.monic();
}

Polynomial leading_in(const Polynomial& p, std::size_t var, int deg) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.mono[var]) == deg) {
      Monomial m = t.mono;
      m.set(var, 0);
      out.push_back({m, t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(out), p.table());
}

// Sparse pseudo-remainder of a by b in var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = leading_in(b, var, db);
  while (!a.is_zero()) {
    const int da = a.degree_in(var);
    if (da < db) break;
    const Polynomial la = leading_in(a, var, da);
    Polynomial shifted = b * la;
    if (da > db) shifted = shifted.times_monomial(Monomial::variable(var, static_cast<unsigned>(da - db)), BigRational(1));
    a = lb * a - shifted;
    a = a.primitive();
  }
  return a;
}

// Removes the content in var together with the rational content.
Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  const Polynomial c = content_in(p, var);
  if (c.is_one()) return p.primitive();
  return divide_exact(p, c)->primitive();
}

// Both primitive in var and of positive degree in var.
Polynomial prs_gcd(Polynomial a, Polynomial b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  if (auto q = divide_exact(a, b)) return b;
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return one_like(a);
    a = std::move(b);
    b = primitive_in(r, var);
  }
}

Polynomial gcd_nonzero(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_constant() || b0.is_constant()) return one_like(a0.table() ? a0 : b0);
  Polynomial a = a0;
  Polynomial b = b0;
  const Monomial ma = strip_monomial(a);
  const Monomial mb = strip_monomial(b);
  const Monomial mg = Monomial::gcd(ma, mb);
  const Polynomial mono = Polynomial::monomial(mg, BigRational(1), a.table() ? a.table() : b.table());

  if (a.is_constant() || b.is_constant()) return mono;
  const std::uint32_t common = a.variable_mask() & b.variable_mask();
  if (common == 0) return mono;

  // Trial division catches the frequent case where one operand divides the other.
  if (a.size() >= b.size()) {
    if (divide_exact(a, b)) return (b * mono).monic();
  } else {
    if (divide_exact(b, a)) return (a * mono).monic();
  }

  // Main variable: the common one with smallest maximal degree.
  std::size_t var = 0;
  int best = -1;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (!(common & (1u << v))) continue;
    const int d = std::max(a.degree_in(v), b.degree_in(v));
    if (best < 0 || d < best) {
      best = d;
      var = v;
    }
  }

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial pa = ca.is_one() ? a.primitive() : divide_exact(a, ca)->primitive();
  const Polynomial pb = cb.is_one() ? b.primitive() : divide_exact(b, cb)->primitive();
  Polynomial cg = (ca.is_one() || cb.is_one()) ? one_like(a) : gcd_nonzero(ca, cb);
  Polynomial g = prs_gcd(pa, pb, var);
  return (cg * g * mono).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  check_same_table(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) {
    Polynomial out = a.monic();
    return out;
  }
  Polynomial g = gcd_nonzero(a, b);
  return g.monic();
}

}  // namespace galring
