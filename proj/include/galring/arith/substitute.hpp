#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "galring/arith/ratfunc.hpp"

namespace galring {

// General substitution x_j -> images[j], followed by normalization. Every
// variable occurring in r needs an image (Error{Context} otherwise); a
// denominator that becomes identically zero raises
// Error{DegenerateSubstitution}.
RatFunc substitute(const RatFunc& r, const std::map<std::size_t, RatFunc>& images);
Polynomial substitute_polynomial(const Polynomial& p, const std::map<std::size_t, Polynomial>& images);

// x_j -> x_j - offsets[j] (offsets indexed by variable; missing tail = 0).
Polynomial translate(const Polynomial& p, std::span<const BigRational> offsets);
RatFunc translate(const RatFunc& r, std::span<const BigRational> offsets);

// x_j -> x_{perm[j]}.
Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm);
RatFunc permute_variables(const RatFunc& r, std::span<const std::size_t> perm);

// x_j -> coeff * prod_k x_k^{exponents[k]} * x_j, with integer (possibly
// negative) exponents.
struct MonomialMultiplier {
  BigRational coeff{1};
  std::array<int, kMaxVariables> exponents{};

  bool is_identity() const;
  friend bool operator==(const MonomialMultiplier&, const MonomialMultiplier&) = default;
};
RatFunc apply_monomial_map(const RatFunc& r, std::span<const MonomialMultiplier> multipliers);

// Restriction of r to the hyperplane h = c, eliminating the first variable
// (in table order) that occurs in the linear form h. Raises
// Error{InvalidDivisor} if h has no variable part and Error{Precondition} if
// r has a pole along the hyperplane.
RatFunc restrict_to_hyperplane(const RatFunc& r, const Polynomial& h, const BigRational& c);

// Order of the pole of r along h = c (0 when there is none).
int pole_order(const RatFunc& r, const Polynomial& h, const BigRational& c);

// ((h - c) * r) restricted to h = c. Zero when r has no pole there; raises
// Error{HigherOrderPole} for poles of order >= 2 and Error{InvalidDivisor}
// when h is constant or not linear.
RatFunc residue_along(const RatFunc& r, const Polynomial& h, const BigRational& c);

}  // namespace galring
