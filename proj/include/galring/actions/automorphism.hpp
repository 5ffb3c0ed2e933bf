#pragma once

#include <variant>
#include <vector>

#include "galring/arith/ratfunc.hpp"
#include "galring/arith/substitute.hpp"

namespace galring {

using Permutation = std::vector<std::size_t>;

// a∘b in one-line notation: (a∘b)[j] = a[b[j]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t degree);
bool is_permutation(const Permutation& p);

// Field automorphism of Frac(Q[x_1..x_n]) given by the images of the
// variables. Applying it to f substitutes x_j -> image_j. Composition follows
// maps: (a∘b)(f) = a(b(f)).
class Automorphism {
 public:
  enum class Kind { Shift, Scaling, Permutation, General };

  static Automorphism identity(TablePtr table);
  // x_j -> x_j - offsets[j] for the acted variables, in table order.
  static Automorphism shift(TablePtr table, const std::vector<BigRational>& acted_offsets);
  // x_j -> multipliers[j] * x_j for the acted variables; each multiplier must
  // be c * (Laurent monomial in the parameter variables), c != 0.
  static Automorphism scaling(TablePtr table, const std::vector<RatFunc>& acted_multipliers);
  // x_j -> x_{perm[j]}, perm over all variables; parameters must be fixed.
  static Automorphism permutation(TablePtr table, Permutation perm);
  // Explicit images and inverse images for every variable; the two maps must
  // compose to the identity (checked).
  static Automorphism general(TablePtr table, std::vector<RatFunc> images, std::vector<RatFunc> inverse_images);

  Kind kind() const;
  const TablePtr& table() const { return table_; }

  RatFunc apply(const RatFunc& f) const;
  // Image of every variable.
  std::vector<RatFunc> images() const;

  Automorphism inverse() const;
  Automorphism power(long k) const;

  // Kind-specific data; precondition: matching kind.
  const std::vector<BigRational>& offsets() const;
  const std::vector<MonomialMultiplier>& multipliers() const;
  const Permutation& perm() const;

  // Equality as maps (compares images).
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.images() == b.images(); }

 private:
  struct ShiftData {
    std::vector<BigRational> offsets;  // per variable
  };
  struct ScalingData {
    std::vector<MonomialMultiplier> multipliers;  // per variable
  };
  struct PermutationData {
    Permutation perm;
  };
  struct GeneralData {
    std::vector<RatFunc> images;
    std::vector<RatFunc> inverse_images;
  };
  using Data = std::variant<ShiftData, ScalingData, PermutationData, GeneralData>;

  Automorphism(TablePtr table, Data data) : table_(std::move(table)), data_(std::move(data)) {}
  GeneralData as_general() const;

  friend Automorphism compose(const Automorphism& a, const Automorphism& b);

  TablePtr table_;
  Data data_;
};

Automorphism compose(const Automorphism& a, const Automorphism& b);

}  // namespace galring
