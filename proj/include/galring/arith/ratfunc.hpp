#pragma once

#include <string>

#include "galring/arith/polynomial.hpp"

namespace galring {

// Element of Frac(Q[x_1..x_n]) in canonical form: numerator and denominator
// coprime, denominator monic under grlex, zero represented as 0/1. Two
// RatFuncs are equal as functions iff they are structurally equal.
class RatFunc {
 public:
  RatFunc() : den_(Polynomial::constant(BigRational(1))) {}
  // Implicit: polynomials and constants embed into their fraction field.
  RatFunc(Polynomial p);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const BigRational& c, TablePtr table = nullptr);

  // Normalizes num/den. Throws Error{DivisionByZero} if den is zero.
  static RatFunc make(Polynomial num, Polynomial den);
  static RatFunc variable(std::size_t index, TablePtr table);
  // Skips the gcd: num and den must already be coprime. Only rescales the
  // denominator to be monic.
  static RatFunc from_coprime(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const TablePtr& table() const { return num_.table() ? num_.table() : den_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  // Throws Error{DivisionByZero} for zero.
  RatFunc inverse() const;
  RatFunc pow(long exponent) const;

  // "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Normalized {};
  RatFunc(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

}  // namespace galring
