#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galring/actions/context.hpp"

namespace galring {

// Element sum_mu a_mu * mu of the skew monoid ring L*M. Coefficients are
// stored only when nonzero. Multiplication follows
//   (a mu)(b nu) = a * mu(b) * (mu nu),
// i.e. the monoid element acts on the coefficient to its right.
class SkewElement {
 public:
  using Terms = std::map<MonoidElement, RatFunc>;

  explicit SkewElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static SkewElement zero(const ContextPtr& ctx) { return SkewElement(ctx); }
  static SkewElement one(const ContextPtr& ctx);
  static SkewElement scalar(const ContextPtr& ctx, const RatFunc& a);
  static SkewElement monomial(const ContextPtr& ctx, const RatFunc& a, const MonoidElement& mu);
  static SkewElement key(const ContextPtr& ctx, const MonoidElement& mu);

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RatFunc coefficient(const MonoidElement& mu) const;
  // Coefficient of the identity key.
  RatFunc kpart() const;
  std::set<MonoidElement> support() const;

  SkewElement operator-() const;
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  // Left multiplication by a coefficient: a * sum l_mu mu = sum (a l_mu) mu.
  friend SkewElement operator*(const RatFunc& a, const SkewElement& u);
  // Right multiplication by a coefficient: sum l_mu mu(a) mu.
  friend SkewElement operator*(const SkewElement& u, const RatFunc& a);

  SkewElement pow(unsigned k) const;

  friend bool operator==(const SkewElement& a, const SkewElement& b);

  // "coeff ⊗ [v1,...,vm]" per term, in key order, joined by " + ".
  std::string to_string() const;

 private:
  void add_term(const MonoidElement& mu, const RatFunc& a);
  void check_context(const SkewElement& o) const;

  ContextPtr ctx_;
  Terms terms_;
};

SkewElement commutator(const SkewElement& a, const SkewElement& b);

// The element as an operator on L: sum_mu a_mu * mu(f).
RatFunc apply_operator(const SkewElement& u, const RatFunc& f);

// (a mu)^g = g(a) g.mu, extended additively.
SkewElement g_action(GroupElement g, const SkewElement& u);
bool is_invariant(const SkewElement& u);

// [a mu] = sum over cosets g G_mu of g(a) g.mu. Throws Error{Precondition}
// for a = 0 and Error{StabilizerInvariance} if a is not G_mu-invariant.
SkewElement orbit_sum(const ContextPtr& ctx, const RatFunc& a, const MonoidElement& mu);

struct OrbitComponent {
  MonoidElement representative;  // lexicographically least key of the orbit
  SkewElement part;
};

// Splits a G-invariant element by G-orbits of its keys, ordered by
// representative. Throws Error{Invariance} if u is not G-invariant.
std::vector<OrbitComponent> decompose_orbits(const SkewElement& u);

}  // namespace galring
