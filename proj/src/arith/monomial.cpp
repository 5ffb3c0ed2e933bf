#include "galring/arith/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "galring/error.hpp"

namespace galring {

namespace {

void check_exponent(unsigned long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    fail(ErrorKind::Overflow, "exponent " + std::to_string(e) + " exceeds the supported range");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= kMaxVariables) fail(ErrorKind::Parameter, "variable index out of range");
  check_exponent(exponent);
  degree_ = degree_ - exps_[i] + exponent;
  exps_[i] = static_cast<Exponent>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned long e = static_cast<unsigned long>(exps_[i]) + other.exps_[i];
    check_exponent(e);
    out.exps_[i] = static_cast<Exponent>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace galring
