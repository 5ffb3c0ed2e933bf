#include "galring/arith/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galring/error.hpp"

namespace galring {

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.mono > b.mono; }

// Sorts by decreasing monomial and merges duplicates in place.
void canonicalize(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    BigRational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sum != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merges two sorted term lists, b scaled by sign.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = a[i].mono <=> b[j].mono;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, subtract ? BigRational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      BigRational c = subtract ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? BigRational(-b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

void check_same_table(const Polynomial& a, const Polynomial& b) {
  if (a.table() && b.table() && !same_table(a.table(), b.table())) {
    fail(ErrorKind::Context, "polynomials over different variable tables");
  }
}

void Polynomial::adopt_table(const Polynomial& other) {
  check_same_table(*this, other);
  if (!table_) table_ = other.table_;
}

Polynomial Polynomial::constant(const BigRational& c, TablePtr table) {
  Polynomial p(std::move(table));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t index, TablePtr table) {
  if (table && index >= table->size()) fail(ErrorKind::Context, "variable index out of range");
  return monomial(Monomial::variable(index), BigRational(1), std::move(table));
}

Polynomial Polynomial::monomial(const Monomial& m, const BigRational& c, TablePtr table) {
  Polynomial p(std::move(table));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, TablePtr table) {
  Polynomial p(std::move(table));
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

BigRational Polynomial::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (!is_constant()) fail(ErrorKind::Precondition, "polynomial is not constant");
  return terms_[0].coeff;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kZeroDegree;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return static_cast<int>(d);
}

bool Polynomial::uses(std::size_t var) const {
  for (const auto& t : terms_) {
    if (t.mono[var] != 0) return true;
  }
  return false;
}

std::uint32_t Polynomial::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (t.mono[i] != 0) mask |= (1u << i);
    }
  }
  return mask;
}

Monomial Polynomial::min_monomial() const {
  if (terms_.empty()) fail(ErrorKind::Precondition, "min_monomial of zero polynomial");
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt_table(other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  adopt_table(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_table(a, b);
  TablePtr table = a.table() ? a.table() : b.table();
  if (a.is_zero() || b.is_zero()) return Polynomial(table);
  if (a.size() == 1) {
    Polynomial out = b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    out.table_ = table;
    return out;
  }
  if (b.size() == 1) {
    Polynomial out = a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    out.table_ = table;
    return out;
  }
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(std::move(prod), table);
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  if (c == 0) return Polynomial(table_);
  Polynomial out(*this);
  if (c == 1) return out;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const BigRational& c) const {
  if (c == 0) return Polynomial(table_);
  Polynomial out(*this);
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    if (c != 1) t.coeff *= c;
  }
  return out;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  Polynomial out(*this);
  for (auto& t : out.terms_) {
    if (!m.divides(t.mono)) fail(ErrorKind::Precondition, "monomial does not divide polynomial");
    t.mono = t.mono / m;
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(BigRational(1), table_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigRational Polynomial::content() const {
  if (terms_.empty()) return BigRational(0);
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  BigRational c(g, l);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  const BigRational c = content();
  if (c == 1) return *this;
  return scaled(BigRational(1) / c);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  if (leading_coeff() == 1) return *this;
  return scaled(BigRational(1) / leading_coeff());
}

BigRational Polynomial::evaluate(std::span<const BigRational> point) const {
  BigRational sum(0);
  for (const auto& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      if (i >= point.size()) fail(ErrorKind::Context, "evaluation point too short");
      v *= galring::pow(point[i], static_cast<long>(e));
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out), table_);
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out;
  if (terms_.empty()) return out;
  out.assign(static_cast<std::size_t>(degree_in(var)) + 1, Polynomial(table_));
  // Terms arrive in decreasing grlex order; removing one variable can break
  // that order, so each slot is re-sorted once at the end.
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::sort(buckets[k].begin(), buckets[k].end(), term_greater);
    out[k].terms_ = std::move(buckets[k]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      os << galring::to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << (table_ && i < table_->size() ? table_->name(i) : "v" + std::to_string(i + 1));
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(t.coeff.get_num_mpz_t()) * 31 + mpz_get_ui(t.coeff.get_den_mpz_t());
  }
  return h;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor) {
  check_same_table(dividend, divisor);
  TablePtr table = dividend.table() ? dividend.table() : divisor.table();
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& lt = divisor.leading_term();
  std::map<Monomial, BigRational, std::greater<>> rem;
  for (const auto& t : dividend.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) {
      remainder.push_back({it->first, it->second});
      rem.erase(it);
      continue;
    }
    const Monomial qm = it->first / lt.mono;
    const BigRational qc = it->second / lt.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.size(); ++k) {
      const auto& dt = divisor.terms()[k];
      const Monomial m = dt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= qc * dt.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, qc});
  }
  return {Polynomial::from_terms(std::move(quotient), table), Polynomial::from_terms(std::move(remainder), table)};
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  check_same_table(dividend, divisor);
  TablePtr table = dividend.table() ? dividend.table() : divisor.table();
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (dividend.is_zero()) return Polynomial(table);
  if (divisor.is_constant()) {
    Polynomial q = dividend.scaled(BigRational(1) / divisor.constant_value());
    return q;
  }
  if (divisor.size() == 1) {
    const auto& lt = divisor.leading_term();
    std::vector<Polynomial::Term> out;
    out.reserve(dividend.size());
    for (const auto& t : dividend.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
    }
    Polynomial q(table);
    return Polynomial::from_terms(std::move(out), table);
  }
  if (!divisor.leading_term().mono.divides(dividend.leading_term().mono)) return std::nullopt;
  const Monomial dmin = divisor.min_monomial();
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    // Per-variable degree bounds: deg_v(divisor) <= deg_v(dividend) and the
    // lowest powers must be compatible too.
    if (divisor.degree_in(v) > dividend.degree_in(v)) return std::nullopt;
  }
  if (!dmin.divides(dividend.min_monomial())) return std::nullopt;

  const auto& lt = divisor.leading_term();
  std::map<Monomial, BigRational, std::greater<>> rem;
  for (const auto& t : dividend.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Polynomial::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lt.mono;
    const BigRational qc = it->second / lt.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.size(); ++k) {
      const auto& dt = divisor.terms()[k];
      const Monomial m = dt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= qc * dt.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, qc});
  }
  return Polynomial::from_terms(std::move(quotient), table);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.table() ? a.table() : b.table());
  const Polynomial g = gcd(a, b);
  return (*divide_exact(a, g) * b).monic();
}

}  // namespace galring
