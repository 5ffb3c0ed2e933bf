#include "galring/arith/ratfunc.hpp"

#include "galring/error.hpp"

namespace galring {

namespace {

Polynomial one(const TablePtr& table) { return Polynomial::constant(BigRational(1), table); }

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorKind::Precondition, "internal: inexact division during normalization");
  return *std::move(q);
}

}  // namespace

RatFunc::RatFunc(Polynomial p) : num_(std::move(p)), den_(one(num_.table())) {}

RatFunc::RatFunc(const BigRational& c, TablePtr table)
    : num_(Polynomial::constant(c, table)), den_(one(table)) {}

RatFunc RatFunc::variable(std::size_t index, TablePtr table) {
  return RatFunc(Polynomial::variable(index, std::move(table)));
}

RatFunc RatFunc::make(Polynomial num, Polynomial den) {
  check_same_table(num, den);
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  TablePtr table = num.table() ? num.table() : den.table();
  if (num.is_zero()) return RatFunc(Polynomial(table), one(table), Normalized{});
  if (!den.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  const BigRational lc = den.leading_coeff();
  if (lc != 1) {
    const BigRational inv = BigRational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (!num.table()) num = num + Polynomial(table);
  if (!den.table()) den = den + Polynomial(table);
  return RatFunc(std::move(num), std::move(den), Normalized{});
}

RatFunc RatFunc::from_coprime(Polynomial num, Polynomial den) {
  check_same_table(num, den);
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  TablePtr table = num.table() ? num.table() : den.table();
  if (num.is_zero()) return RatFunc(Polynomial(table), one(table), Normalized{});
  const BigRational lc = den.leading_coeff();
  if (lc != 1) {
    const BigRational inv = BigRational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (!num.table()) num = num + Polynomial(table);
  if (!den.table()) den = den + Polynomial(table);
  return RatFunc(std::move(num), std::move(den), Normalized{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) {
    if (!table() && other.table()) *this = RatFunc(num_ + Polynomial(other.table()), den_ + Polynomial(other.table()), Normalized{});
    return *this;
  }
  if (is_zero()) {
    check_same_table(num_, other.num_);
    *this = other;
    return *this;
  }
  if (den_ == other.den_) {
    Polynomial n = num_ + other.num_;
    if (den_.is_one()) {
      *this = RatFunc(std::move(n), den_ + Polynomial(n.table()), Normalized{});
      return *this;
    }
    *this = make(std::move(n), den_);
    return *this;
  }
  if (den_.is_one()) {
    *this = RatFunc(num_ * other.den_ + other.num_, other.den_, Normalized{});
    return *this;
  }
  if (other.den_.is_one()) {
    *this = RatFunc(num_ + other.num_ * den_, den_, Normalized{});
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only factors of g can cancel afterwards.
  const Polynomial g = gcd(den_, other.den_);
  if (g.is_one()) {
    *this = RatFunc(num_ * other.den_ + other.num_ * den_, den_ * other.den_, Normalized{});
    // Product of monic polynomials is monic; coprimality is inherited.
    return *this;
  }
  const Polynomial b1 = exact(den_, g);
  const Polynomial d1 = exact(other.den_, g);
  Polynomial n = num_ * d1 + other.num_ * b1;
  Polynomial d = b1 * other.den_;
  if (n.is_zero()) {
    *this = RatFunc(Polynomial(d.table()), one(d.table()), Normalized{});
    return *this;
  }
  const Polynomial h = gcd(n, g);
  if (!h.is_one()) {
    n = exact(n, h);
    d = exact(d, h);
  }
  const BigRational lc = d.leading_coeff();
  if (lc != 1) {
    n = n.scaled(BigRational(1) / lc);
    d = d.scaled(BigRational(1) / lc);
  }
  *this = RatFunc(std::move(n), std::move(d), Normalized{});
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero() || other.is_zero()) {
    TablePtr t = table() ? table() : other.table();
    *this = RatFunc(Polynomial(t), one(t), Normalized{});
    return *this;
  }
  if (den_.is_one() && other.den_.is_one()) {
    Polynomial n = num_ * other.num_;
    *this = RatFunc(std::move(n), den_ + Polynomial(other.table()), Normalized{});
    return *this;
  }
  // (a/b)(c/d): cancel gcd(a, d) and gcd(c, b) separately.
  Polynomial a = num_, b = den_, c = other.num_, d = other.den_;
  if (!d.is_one()) {
    const Polynomial g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = exact(a, g1);
      d = exact(d, g1);
    }
  }
  if (!b.is_one()) {
    const Polynomial g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = exact(c, g2);
      b = exact(b, g2);
    }
  }
  Polynomial n = a * c;
  Polynomial m = b * d;
  const BigRational lc = m.leading_coeff();
  if (lc != 1) {
    n = n.scaled(BigRational(1) / lc);
    m = m.scaled(BigRational(1) / lc);
  }
  *this = RatFunc(std::move(n), std::move(m), Normalized{});
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) { return *this *= other.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
  const BigRational lc = num_.leading_coeff();
  BigRational inv = BigRational(1) / lc;
  return RatFunc(den_.scaled(inv), num_.scaled(inv), Normalized{});
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return RatFunc(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)), Normalized{});
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (n.find(' ') != std::string::npos) n = "(" + n + ")";
  if (d.find_first_of(" *") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace galring
