#include <map>

#include "doctest.h"
#include "galring/arith/parse.hpp"
#include "galring/arith/substitute.hpp"
#include "galring/error.hpp"
#include "random_gen.hpp"
#include "test_util.hpp"

using namespace galring;
using galring::testing::Gen;
using galring::testing::kind_of;

namespace {

TablePtr xyz() {
  return make_table({{"x", VariableRole::Acted}, {"y", VariableRole::Acted}, {"z", VariableRole::Fixed}});
}

Polynomial P(const char* s, const TablePtr& t) { return parse_polynomial(s, t); }
RatFunc R(const char* s, const TablePtr& t) { return parse_ratfunc(s, t); }

// Univariate trial-division oracle over small monic integer candidates.
using Univ = std::vector<BigRational>;  // coefficients, low degree first

bool univ_divides(Univ num, const Univ& den) {
  while (num.size() >= den.size()) {
    const BigRational q = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    num.pop_back();
  }
  for (const auto& c : num) {
    if (c != 0) return false;
  }
  return true;
}

Univ to_univ(const Polynomial& p) {
  Univ out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, BigRational(0));
  for (const auto& t : p.terms()) out[t.mono[0]] = t.coeff;
  return out;
}

// Largest-degree product of monic linear factors (x + c), |c| <= 4, dividing
// both inputs; enough for inputs that split into such factors.
Univ brute_force_gcd(Univ a, Univ b) {
  Univ g{BigRational(1)};
  bool progress = true;
  while (progress) {
    progress = false;
    for (long c = -4; c <= 4 && !progress; ++c) {
      const Univ f{BigRational(c), BigRational(1)};
      if (univ_divides(a, f) && univ_divides(b, f)) {
        auto div = [&](Univ& p) {
          Univ q(p.size() - 1, BigRational(0));
          for (std::size_t i = p.size() - 1; i >= 1; --i) {
            q[i - 1] = p[i];
            p[i - 1] -= p[i] * f[0];
          }
          p = q;
        };
        div(a);
        div(b);
        Univ ng(g.size() + 1, BigRational(0));
        for (std::size_t i = 0; i < g.size(); ++i) {
          ng[i] += g[i] * f[0];
          ng[i + 1] += g[i];
        }
        g = ng;
        progress = true;
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("polynomial ring operations") {
  auto t = xyz();
  CHECK(P("x + 1", t) + P("-x", t) == P("1", t));
  CHECK(P("x - 1", t) * P("x + 1", t) == P("x^2 - 1", t));
  CHECK(P("x^2*y + y", t).degree() == 3);
  CHECK(Polynomial(t).degree() == kZeroDegree);
  CHECK((P("x", t) - P("x", t)).is_zero());
  CHECK(P("6*x + 4", t).content() == 2);
  CHECK(P("-6*x + 4", t).primitive() == P("3*x - 2", t));
}

TEST_CASE("canonical text form") {
  auto t = xyz();
  CHECK(P("y - 3/2*x*y + x^2", t).to_string() == "x^2 - 3/2*x*y + y");
  CHECK(P("-x + 2", t).to_string() == "-x + 2");
  CHECK(Polynomial(t).to_string() == "0");
  CHECK(P("y^3*z - 7", t).to_string() == "y^3*z - 7");
  // The text form parses back to the same polynomial.
  Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = gen.polynomial(t, {0, 1, 2}, 5, 4);
    CHECK(parse_polynomial(p.to_string(), t) == p);
  }
  CHECK(R("1/(x - y)", t).to_string() == "1/(x - y)");
  CHECK(R("(x + 1)/(x*y)", t).to_string() == "(x + 1)/(x*y)");
  CHECK(R("-2*x/y^2", t).to_string() == "-2*x/y^2");
  for (int i = 0; i < 50; ++i) {
    RatFunc f = gen.ratfunc(t, {0, 1, 2}, 3, 2);
    CHECK(parse_ratfunc(f.to_string(), t) == f);
  }
}

TEST_CASE("table mismatch is a context error") {
  auto a = xyz();
  auto b = make_table({{"u", VariableRole::Acted}});
  CHECK(kind_of([&] { return P("x", a) + P("u", b); }) == ErrorKind::Context);
}

TEST_CASE("gcd examples") {
  auto t = xyz();
  CHECK(gcd(P("x^2 - 1", t), P("x - 1", t)) == P("x - 1", t));
  CHECK(gcd(P("2*x + 4", t), Polynomial(t)) == P("x + 2", t));
  CHECK(gcd(P("x*y", t), P("x", t)) == P("x", t));
  CHECK(gcd(P("x^2*y - y", t), P("x*y + y + x*z + z", t)) == P("x + 1", t));
  CHECK(gcd(P("(x-y)^3*(x+z)", t), P("(x-y)^2*(y+z)^2", t)) == P("(x-y)^2", t));
  CHECK(gcd(P("x + y", t), P("x - y", t)).is_one());
}

TEST_CASE("gcd agrees with trial-division oracle on split univariate inputs") {
  auto t = xyz();
  Gen gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto product = [&](int n) {
      Polynomial p = Polynomial::constant(BigRational(gen.range(1, 3)), t);
      for (int i = 0; i < n; ++i) p = p * (P("x", t) + Polynomial::constant(BigRational(gen.range(-3, 3)), t));
      return p;
    };
    Polynomial a = product(static_cast<int>(gen.range(0, 4)));
    Polynomial b = product(static_cast<int>(gen.range(0, 4)));
    Univ expected = brute_force_gcd(to_univ(a), to_univ(b));
    CHECK(to_univ(gcd(a, b)) == expected);
  }
}

TEST_CASE("gcd divides both and leaves coprime cofactors") {
  auto t = xyz();
  Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial common = gen.nonzero_polynomial(t, {0, 1, 2}, 3, 2);
    Polynomial a = common * gen.nonzero_polynomial(t, {0, 1, 2}, 3, 2);
    Polynomial b = common * gen.nonzero_polynomial(t, {0, 1, 2}, 3, 2);
    Polynomial g = gcd(a, b);
    auto qa = divide_exact(a, g);
    auto qb = divide_exact(b, g);
    REQUIRE(qa);
    REQUIRE(qb);
    CHECK(gcd(*qa, *qb).is_one());
    CHECK(divide_exact(g, common.monic()));
    CHECK(divide(a, g).second.is_zero());
  }
}

TEST_CASE("rational function examples") {
  auto t = xyz();
  CHECK(R("1/x", t) + R("(x-1)/x", t) == R("1", t));
  CHECK(R("(x-1)/(x+1)", t).inverse() == R("(x+1)/(x-1)", t));
  RatFunc n = R("(2*x+2)/(2*x)", t);
  CHECK(n.num() == P("x + 1", t));
  CHECK(n.den() == P("x", t));
  CHECK(kind_of([&] { return R("0", t).inverse(); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { return R("x/(y-y)", t); }) == ErrorKind::DivisionByZero);
  // denominators are monic under grlex
  CHECK(R("1/(3*y + 2*x^2)", t).den().leading_coeff() == 1);
}

TEST_CASE("field axioms on random triples") {
  auto t = xyz();
  Gen gen(42);
  const std::vector<std::size_t> vars{0, 1, 2};
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc a = gen.ratfunc(t, vars), b = gen.ratfunc(t, vars), c = gen.ratfunc(t, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("normalization is canonical") {
  auto t = xyz();
  Gen gen(5);
  const std::vector<std::size_t> vars{0, 1, 2};
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = gen.polynomial(t, vars, 3, 2);
    Polynomial b = gen.nonzero_polynomial(t, vars, 3, 2);
    Polynomial c = gen.nonzero_polynomial(t, vars, 3, 2);
    RatFunc r = RatFunc::make(a, b);
    RatFunc s = RatFunc::make(a * c, b * c);
    CHECK(r == s);
    CHECK(RatFunc::make(r.num(), r.den()) == r);
    CHECK(gcd(r.num(), r.den()).is_one());
  }
}

TEST_CASE("substitution examples") {
  auto t = make_table({{"x", VariableRole::Acted}, {"y", VariableRole::Acted}, {"q", VariableRole::Parameter}});
  CHECK(substitute(R("x^2", t), {{0, R("x - 1", t)}}) == R("x^2 - 2*x + 1", t));
  CHECK(substitute(R("1/x", t), {{0, R("q*x", t)}}) == R("1/(q*x)", t));
  CHECK(kind_of([&] { return substitute(R("1/(x-y)", t), {{0, R("y", t)}, {1, R("y", t)}}); }) ==
        ErrorKind::DegenerateSubstitution);
  CHECK(kind_of([&] { return substitute(R("x*y", t), {{0, R("y", t)}}); }) == ErrorKind::Context);
}

TEST_CASE("substitution is a ring homomorphism fixing identity") {
  auto t = xyz();
  Gen gen(9);
  const std::vector<std::size_t> vars{0, 1, 2};
  std::map<std::size_t, RatFunc> id{{0, R("x", t)}, {1, R("y", t)}, {2, R("z", t)}};
  std::map<std::size_t, RatFunc> img{{0, R("x + y", t)}, {1, R("(y-1)/z", t)}, {2, R("z + 2", t)}};
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc a = gen.ratfunc(t, vars), b = gen.ratfunc(t, vars);
    CHECK(substitute(a, id) == a);
    RatFunc sa = substitute(a, img), sb = substitute(b, img);
    CHECK(substitute(a + b, img) == sa + sb);
    CHECK(substitute(a * b, img) == sa * sb);
  }
}

TEST_CASE("fast substitution paths agree with general substitution") {
  auto t = make_table({{"x", VariableRole::Acted}, {"y", VariableRole::Acted}, {"q", VariableRole::Parameter}});
  Gen gen(17);
  const std::vector<std::size_t> vars{0, 1, 2};
  std::vector<BigRational> offsets{BigRational(1), BigRational(-1, 2)};
  std::vector<std::size_t> swap{1, 0, 2};
  std::vector<MonomialMultiplier> mult(3);
  mult[0].exponents[2] = 2;
  mult[1].coeff = BigRational(3);
  mult[1].exponents[2] = -1;
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc a = gen.ratfunc(t, vars);
    CHECK(translate(a, offsets) == substitute(a, {{0, R("x - 1", t)}, {1, R("y + 1/2", t)}, {2, R("q", t)}}));
    CHECK(permute_variables(a, swap) == substitute(a, {{0, R("y", t)}, {1, R("x", t)}, {2, R("q", t)}}));
    CHECK(apply_monomial_map(a, mult) == substitute(a, {{0, R("q^2*x", t)}, {1, R("3*y/q", t)}, {2, R("q", t)}}));
  }
}

TEST_CASE("residue examples") {
  auto t = xyz();
  const Polynomial h = P("x - y", t);
  CHECK(residue_along(R("1/(x-y)", t), h, 0) == R("1", t));
  CHECK(residue_along(R("x+y", t), h, 0).is_zero());
  CHECK(kind_of([&] { return residue_along(R("1/(x-y)^2", t), h, 0); }) == ErrorKind::HigherOrderPole);
  CHECK(kind_of([&] { return residue_along(R("1/x", t), P("3", t), 0); }) == ErrorKind::InvalidDivisor);
  // x is eliminated: x = y + 2
  CHECK(residue_along(R("x*z/((x-y-2)*(x+y))", t), h, 2) == R("(y+2)*z/(2*y+2)", t));
  CHECK(pole_order(R("1/((x-y)^3*z)", t), h, 0) == 3);
}

TEST_CASE("residue agrees with the transverse-line oracle") {
  // Along P + s*d with h(P) = c and h(d) != 0, the classical residue in s is
  // num(P) / (d/ds den(P + s d))|_{s=0}; residue_along(P) = h(d) * that.
  auto t = xyz();
  Gen gen(23);
  const std::vector<std::size_t> vars{0, 1, 2};
  int checked = 0;
  while (checked < 50) {
    const BigRational a = gen.small_rational(3, 2), b = gen.small_rational(3, 2);
    if (a == 0) continue;
    const Polynomial h = Polynomial::constant(a, t) * P("x", t) + Polynomial::constant(b, t) * P("y", t);
    const BigRational c = gen.small_rational();
    const Polynomial form = h - Polynomial::constant(c, t);
    RatFunc r = RatFunc::make(gen.nonzero_polynomial(t, vars, 3, 2), form * gen.nonzero_polynomial(t, vars, 2, 1));
    if (pole_order(r, h, c) != 1) continue;
    // A point on the hyperplane: choose y, z, solve for x.
    const BigRational y0 = gen.small_rational(), z0 = gen.small_rational();
    const BigRational x0 = (c - b * y0) / a;
    std::vector<BigRational> pt{x0, y0, z0};
    const std::vector<BigRational> dir{BigRational(1), BigRational(gen.range(-2, 2)), BigRational(gen.range(-2, 2))};
    const BigRational hd = a * dir[0] + b * dir[1];
    if (hd == 0) continue;
    BigRational dden(0);
    for (std::size_t v = 0; v < 3; ++v) dden += dir[v] * r.den().derivative(v).evaluate(pt);
    if (dden == 0) continue;
    const BigRational expected = hd * r.num().evaluate(pt) / dden;
    RatFunc res = residue_along(r, h, c);
    const BigRational rden = res.den().evaluate(pt);
    if (rden == 0) continue;
    CHECK(res.num().evaluate(pt) / rden == expected);
    ++checked;
  }
}

TEST_CASE("parser rejects garbage") {
  auto t = xyz();
  CHECK(kind_of([&] { return R("x +", t); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { return R("w", t); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { return P("1/x", t); }) == ErrorKind::Parse);
  CHECK(parse_rational("-3/6") == BigRational(-1, 2));
}
