#pragma once

#include <vector>

#include "galring/skewring/skew_element.hpp"

namespace galring {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct LatticeRank {
  std::size_t rank = 0;
  // Nonzero diagonal of the Smith normal form, each dividing the next.
  std::vector<BigInt> divisors;
  std::size_t ambient = 0;

  // The rows generate all of Z^ambient.
  bool generates() const;
};

// Rank and elementary divisors of the row lattice of an integer matrix.
LatticeRank smith_normal_form(IntMatrix rows, std::size_t columns);

// Stacks the support vectors of the elements. Throws Error{UnsupportedMode}
// for finite-group contexts.
LatticeRank support_lattice_rank(const ContextPtr& ctx, const std::vector<SkewElement>& elements);

// |B_k| for k = 1..k_max where B_k holds all sums of at most k generators.
std::vector<std::size_t> monoid_growth(const std::vector<MonoidElement>& generators, std::size_t k_max);

}  // namespace galring
