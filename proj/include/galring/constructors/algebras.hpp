#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galring/report.hpp"
#include "galring/skewring/skew_element.hpp"

namespace galring {

// A finitely generated subring of L*M given by named generators, together
// with generators of its Harish-Chandra subring.
struct AlgebraSpec {
  ContextPtr context;
  std::vector<std::pair<std::string, SkewElement>> generators;
  std::vector<RatFunc> gamma;

  // Throws Error{Definition} for unknown names.
  const SkewElement& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const;
};

// k(x1..xn) * Z^m with eps_i(x_j) = x_j - delta_ij for j <= m; x_{m+1..n}
// fixed; G trivial. Throws Error{Parameter} if m > n.
ContextPtr build_shift_algebra(std::size_t n, std::size_t m);
// As above with eps_i(x_j) = q^delta_ij x_j and a parameter variable q.
ContextPtr build_qshift_algebra(std::size_t n, std::size_t m);

// Generalized Weyl algebra data D = Q[base variables], commuting
// automorphisms sigma_i and elements a_i with sigma_i(a_j) = a_j for i != j.
struct GWASpec {
  TablePtr table;
  std::vector<Automorphism> sigma;
  std::vector<RatFunc> a;

  // Checks the invariants; throws Error{Precondition} on violation.
  static GWASpec make(TablePtr table, std::vector<Automorphism> sigma, std::vector<RatFunc> a);
};

// D = Q(s)[H, Z], sigma(H) = s^4 H, sigma(Z) = s^2 Z,
// a = Z + alpha H + beta with alpha = -1/(s(1-s^2)), beta = s/(1-s^4).
GWASpec witten_woronowicz_spec();

// X_i^+ -> 1*sigma_i, X_i^- -> a_i*sigma_i^{-1} in Frac(D)*<sigma>, named
// "X1+", "X1-", ...; gamma = base variables other than parameters.
AlgebraSpec gwa_embed(const GWASpec& spec);
Report verify_gwa(const GWASpec& spec);

// U(gl_n) in k(x_ki : 1 <= i <= k <= n) * Z^{n(n-1)/2} with
// G = S_1 x ... x S_n. Generators "E{k}{l}" for l = k, k+1 and k+1 = l;
// gamma = row power sums. Requires 1 <= n <= 5.
AlgebraSpec gt_embedding(std::size_t n, std::size_t group_cap = kDefaultGroupCap);

// Finite-group mode over k(x1..xn) with keys S_n and trivial G; generators
// "theta{i}" = (x_i - x_{i+1})^{-1}(s_i - e) and "s{i}".
AlgebraSpec nilhecke_algebra(std::size_t n, std::size_t group_cap = kDefaultGroupCap);
std::vector<SkewElement> demazure_elements(std::size_t n);

enum class HeckeMode { Degenerate, Q };

// Type A membership conditions for an element sum_w f_w w in finite-group
// mode: (1) first order poles along alpha = 0 only; (3) residues along
// alpha = 0 of f_w and f_{s_alpha w} cancel; (4, q mode) f_w vanishes on
// alpha = q_shift when w^{-1}(alpha) is negative.
Report hecke_membership_check(const SkewElement& element, HeckeMode mode,
                              const BigRational& q_shift = BigRational(-2));

}  // namespace galring
