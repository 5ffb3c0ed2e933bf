#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "galring/actions/automorphism.hpp"

namespace galring {

inline constexpr std::size_t kDefaultGroupCap = 10080;

// Index into a PermutationGroup's enumeration; 0 is the identity.
using GroupElement = std::size_t;

// Finite group of variable permutations, enumerated eagerly from generators.
// Element order is breadth-first from the identity, multiplying by the
// generators on the right, so it is deterministic.
class PermutationGroup {
 public:
  // Throws Error{Resource} if the closure exceeds `cap` elements.
  static PermutationGroup generate(std::size_t degree, const std::vector<Permutation>& generators,
                                   std::size_t cap = kDefaultGroupCap);
  static PermutationGroup trivial(std::size_t degree);
  // Subgroup given by an explicit element list (checked for closure).
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& element(GroupElement g) const { return elements_.at(g); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  std::optional<GroupElement> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;

 private:
  PermutationGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::map<Permutation, GroupElement> index_;
  std::vector<GroupElement> generators_;
};

}  // namespace galring
