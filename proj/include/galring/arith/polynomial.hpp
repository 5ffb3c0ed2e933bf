#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galring/arith/monomial.hpp"
#include "galring/arith/rational.hpp"
#include "galring/arith/variables.hpp"

namespace galring {

// Degree of the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
// decreasing grlex order with no zero coefficients; the zero polynomial has no
// terms. A polynomial built without a table (a bare constant) adopts the table
// of whatever it is combined with.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(TablePtr table) : table_(std::move(table)) {}

  static Polynomial constant(const BigRational& c, TablePtr table = nullptr);
  static Polynomial variable(std::size_t index, TablePtr table);
  static Polynomial monomial(const Monomial& m, const BigRational& c, TablePtr table);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, TablePtr table);

  const TablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term value; precondition is_constant().
  BigRational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coeff() const { return terms_.front().coeff; }

  // Total degree; kZeroDegree for the zero polynomial.
  int degree() const;
  // Degree in one variable; kZeroDegree for zero.
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  // Bitmask of variables that occur.
  std::uint32_t variable_mask() const;
  // Componentwise minimum of all exponent vectors; precondition nonzero.
  Monomial min_monomial() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const BigRational& c) const;
  Polynomial times_monomial(const Monomial& m, const BigRational& c) const;
  // Precondition: m divides every term.
  Polynomial divided_by_monomial(const Monomial& m) const;
  Polynomial pow(unsigned exponent) const;

  // Rational content: positive gcd of numerators over lcm of denominators,
  // signed like the leading coefficient. Zero for the zero polynomial.
  BigRational content() const;
  // p / content(p): integer coefficients, coprime, positive leading coefficient.
  Polynomial primitive() const;
  // p / leading_coeff(p); zero stays zero.
  Polynomial monic() const;

  BigRational evaluate(std::span<const BigRational> point) const;
  Polynomial derivative(std::size_t var) const;

  // Coefficients with respect to one variable: result[k] is the coefficient
  // of var^k (with var removed). Size deg_in(var)+1; empty for zero.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  // Canonical text form: terms in grlex order, e.g. "x^2*y - 3/2*y + 1".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::size_t hash() const;

 private:
  void adopt_table(const Polynomial& other);

  TablePtr table_;
  std::vector<Term> terms_;
};

// Division with remainder by the leading term (grlex). The remainder is zero
// iff divisor divides dividend.
std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor);
// Quotient when the division is exact, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// Monic greatest common divisor; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// Throws Error{Context} if the polynomials carry different tables.
void check_same_table(const Polynomial& a, const Polynomial& b);

}  // namespace galring
