#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace galring {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector with inline storage. Ordering is graded lexicographic with
// variable 0 largest.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned exponent);

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace galring
