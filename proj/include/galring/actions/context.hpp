#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galring/actions/automorphism.hpp"
#include "galring/actions/group.hpp"

namespace galring {

// Element of the acting monoid. In lattice mode: a vector in Z^m (or N^m).
// In finite-group mode: a permutation of the variables in one-line notation.
// Ordered lexicographically.
struct MonoidElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const MonoidElement&, const MonoidElement&) = default;
  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};

std::string to_string(const MonoidElement& mu);

enum class KeyMode {
  Lattice,      // M = Z^m or N^m acting through commuting automorphisms
  FiniteGroup,  // M = a finite permutation group W acting on the variables
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// Shared algebra descriptor: variables, the acting monoid with its action on
// L = Frac(Q[x]), and the finite group G acting by variable permutations and
// on the monoid by conjugation. Immutable after construction.
class Context {
 public:
  // Lattice monoid generated by commuting automorphisms eps_1..eps_m.
  // Throws Error{NormalizationViolation} if G does not normalize the lattice.
  static ContextPtr lattice(TablePtr table, std::vector<Automorphism> generators, PermutationGroup group,
                            bool monoid_only = false);
  // Finite-group mode: the monoid is the permutation group `keys` itself.
  static ContextPtr finite_group(TablePtr table, PermutationGroup keys, PermutationGroup group);

  const TablePtr& table() const { return table_; }
  KeyMode mode() const { return mode_; }
  bool monoid_only() const { return monoid_only_; }
  // Lattice rank m (lattice mode) or number of variables (finite mode).
  std::size_t key_length() const;
  std::size_t lattice_rank() const { return generators_.size(); }
  const std::vector<Automorphism>& lattice_generators() const { return generators_; }
  const PermutationGroup& group() const { return group_; }
  const PermutationGroup& key_group() const { return keys_; }

  MonoidElement identity() const;
  // Lattice mode: i-th unit vector. Finite mode: i-th generator of W.
  MonoidElement generator(std::size_t i) const;
  std::size_t generator_count() const;

  // Throws Error{Context} (wrong shape) or Error{NormalizationViolation}.
  void validate(const MonoidElement& mu) const;
  bool is_valid(const MonoidElement& mu) const;

  MonoidElement compose(const MonoidElement& a, const MonoidElement& b) const;
  // Throws Error{NotInvertible} for nonzero elements of N^m.
  MonoidElement inverse(const MonoidElement& a) const;

  RatFunc act(const MonoidElement& mu, const RatFunc& f) const;
  RatFunc act_group(GroupElement g, const RatFunc& f) const;
  Automorphism automorphism(const MonoidElement& mu) const;
  Automorphism group_automorphism(GroupElement g) const;

  // g.mu = g mu g^{-1}.
  MonoidElement conjugate(GroupElement g, const MonoidElement& mu) const;
  std::set<MonoidElement> orbit(const MonoidElement& mu) const;
  PermutationGroup stabilizer(const MonoidElement& mu) const;
  std::vector<GroupElement> stabilizer_elements(const MonoidElement& mu) const;

  RatFunc variable(std::size_t i) const { return RatFunc::variable(i, table_); }
  RatFunc constant(const BigRational& c) const { return RatFunc(c, table_); }

 private:
  enum class LatticeKind { Shift, Scaling, General };

  Context() = default;
  void build_conjugation();
  std::optional<MonoidElement> locate(GroupElement g, std::size_t i) const;

  TablePtr table_;
  KeyMode mode_ = KeyMode::Lattice;
  bool monoid_only_ = false;
  std::vector<Automorphism> generators_;
  LatticeKind lattice_kind_ = LatticeKind::General;
  PermutationGroup group_ = PermutationGroup::trivial(0);
  PermutationGroup keys_ = PermutationGroup::trivial(0);
  // conjugation_[g][i] = g.eps_i (lattice mode).
  std::vector<std::vector<MonoidElement>> conjugation_;
};

}  // namespace galring
