#pragma once

#include <vector>

#include "galring/constructors/algebras.hpp"

namespace galring {

// Basis, over Q(parameters), of the polynomials of total degree <= d in the
// non-parameter variables that are fixed by every monoid generator and
// every generator of G. Throws Error{UnsupportedMode} if some action does
// not map such polynomials to polynomials with parameter-only denominators.
std::vector<RatFunc> center_candidates(const ContextPtr& ctx, unsigned degree_bound);

// Rank over Q of the Jacobian of polynomial functions at a rational point.
// Full rank at one point certifies algebraic independence.
std::size_t jacobian_rank(const std::vector<RatFunc>& polys, const std::vector<BigRational>& point);

struct OreWitness {
  SkewElement u_prime;
  RatFunc r;
  // u * r == s * u' (checked exactly).
  bool verified = false;
  // Every coefficient of u' has a denominator free of non-parameter variables.
  bool polynomial = false;
};

// Right Ore witness: r in Gamma \ {0} and u' with u r = s u'. With
// v = s^{-1} u = sum l_mu mu, r is the G-symmetrized product of the
// mu^{-1}(den l_mu). Throws Error{Precondition} if s is zero, not a
// polynomial or not G-invariant, and Error{NotInvertible} for keys without
// inverse.
OreWitness ore_witness(const RatFunc& s, const SkewElement& u);

}  // namespace galring
