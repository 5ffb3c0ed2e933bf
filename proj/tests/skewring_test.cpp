#include "doctest.h"
#include "galring/skewring/skew_element.hpp"
#include "random_gen.hpp"
#include "test_util.hpp"

using namespace galring;
using galring::testing::Gen;
using galring::testing::kind_of;

namespace {

BigRational Q(long n) { return BigRational(n); }
MonoidElement M(std::vector<std::int64_t> v) { return MonoidElement{std::move(v)}; }

ContextPtr weyl() {
  auto t = make_table({{"x", VariableRole::Acted}});
  return Context::lattice(t, {Automorphism::shift(t, {Q(1)})}, PermutationGroup::trivial(1));
}

// x1, x2 with unit shifts, y fixed, G = S_2 swapping x1,x2.
ContextPtr sym2() {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"y", VariableRole::Fixed}});
  return Context::lattice(t, {Automorphism::shift(t, {Q(1), Q(0)}), Automorphism::shift(t, {Q(0), Q(1)})},
                          PermutationGroup::generate(3, {{1, 0, 2}}));
}

// q-scalings of x1, x2 with parameter q, G = S_2.
ContextPtr qsym2() {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"q", VariableRole::Parameter}});
  auto q = RatFunc::variable(2, t);
  auto one = RatFunc(Q(1), t);
  return Context::lattice(t, {Automorphism::scaling(t, {q, one}), Automorphism::scaling(t, {one, q})},
                          PermutationGroup::generate(3, {{1, 0, 2}}));
}

SkewElement random_element(Gen& gen, const ContextPtr& c, int terms = 3) {
  SkewElement u(c);
  const std::vector<std::size_t> vars{0, 1, 2};
  for (int i = 0; i < terms; ++i) {
    MonoidElement mu = c->identity();
    for (auto& x : mu.coords) x = gen.range(-1, 1);
    u += SkewElement::monomial(c, gen.ratfunc(c->table(), vars, 2, 2), mu);
  }
  return u;
}

RatFunc symmetric(Gen& gen, const ContextPtr& c) {
  const RatFunc f = gen.ratfunc(c->table(), {0, 1, 2}, 2, 2);
  const RatFunc g = c->act_group(1, f);
  return f + g;
}

}  // namespace

TEST_CASE("product rule in the Weyl-type algebra") {
  auto c = weyl();
  auto x = c->variable(0);
  auto eps = SkewElement::key(c, M({1}));
  auto xe = SkewElement::scalar(c, x);
  CHECK(eps * xe == SkewElement::monomial(c, x - c->constant(1), M({1})));
  CHECK(commutator(eps, xe) == -eps);
  auto u = SkewElement::monomial(c, x * x, M({-2})) + eps;
  CHECK(SkewElement::one(c) * u == u);
  CHECK(u * SkewElement::one(c) == u);
  CHECK((u - u).is_zero());
  CHECK(eps * x == SkewElement::monomial(c, x - c->constant(1), M({1})));
  CHECK(x * eps == SkewElement::monomial(c, x, M({1})));
}

TEST_CASE("G-action on skew elements") {
  auto c = sym2();
  auto x1 = c->variable(0), x2 = c->variable(1);
  CHECK(g_action(1, SkewElement::monomial(c, x1, M({1, 0}))) == SkewElement::monomial(c, x2, M({0, 1})));
  auto u = SkewElement::monomial(c, x1 * x1, M({1, -1}));
  CHECK(g_action(0, u) == u);
  auto sym = SkewElement::scalar(c, x1 + x2);
  CHECK(g_action(1, sym) == sym);
  CHECK(is_invariant(sym));
  CHECK_FALSE(is_invariant(SkewElement::scalar(c, x1)));
  CHECK(is_invariant(SkewElement::zero(c)));
}

TEST_CASE("orbit sums") {
  auto c = sym2();
  auto x1 = c->variable(0), x2 = c->variable(1);
  auto s = orbit_sum(c, x1, M({1, 0}));
  CHECK(s == SkewElement::monomial(c, x1, M({1, 0})) + SkewElement::monomial(c, x2, M({0, 1})));
  CHECK(is_invariant(s));
  CHECK(s.support() == std::set<MonoidElement>{M({1, 0}), M({0, 1})});
  CHECK(orbit_sum(c, x1 + x2, M({0, 0})) == SkewElement::scalar(c, x1 + x2));
  CHECK(orbit_sum(c, x1 * x2, M({1, 0})) ==
        SkewElement::monomial(c, x1 * x2, M({1, 0})) + SkewElement::monomial(c, x1 * x2, M({0, 1})));
  CHECK(kind_of([&] { orbit_sum(c, x1, M({0, 0})); }) == ErrorKind::StabilizerInvariance);
  CHECK(kind_of([&] { orbit_sum(c, c->constant(0), M({1, 0})); }) == ErrorKind::Precondition);
}

TEST_CASE("support and kpart") {
  auto c = weyl();
  auto x = c->variable(0);
  auto u = SkewElement::monomial(c, x, M({1})) + SkewElement::key(c, M({-1}));
  CHECK(u.support() == std::set<MonoidElement>{M({1}), M({-1})});
  CHECK(SkewElement::zero(c).support().empty());
  CHECK(u.kpart() == c->constant(0));
  CHECK((SkewElement::scalar(c, x) + u).kpart() == x);
  CHECK(u.to_string() == "1 ⊗ [-1] + x ⊗ [1]");
  CHECK(SkewElement::monomial(c, x - c->constant(1), M({2})).to_string() == "(x - 1) ⊗ [2]");
}

TEST_CASE("orbit decomposition") {
  auto c = sym2();
  auto x1 = c->variable(0);
  auto a = orbit_sum(c, x1, M({1, 0}));
  auto b = SkewElement::one(c);
  auto parts = decompose_orbits(a + b);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].representative == M({0, 0}));
  CHECK(parts[0].part == b);
  CHECK(parts[1].representative == M({0, 1}));
  CHECK(parts[1].part == a);
  CHECK(decompose_orbits(a).size() == 1);
  CHECK(decompose_orbits(SkewElement::zero(c)).empty());
  CHECK(kind_of([&] { decompose_orbits(SkewElement::scalar(c, x1)); }) == ErrorKind::Invariance);
}

TEST_CASE("context mismatch") {
  auto a = SkewElement::one(weyl());
  auto b = SkewElement::one(weyl());
  CHECK(kind_of([&] { (void)(a * b); }) == ErrorKind::Context);
}

TEST_CASE("ring axioms and G-action on random elements") {
  Gen gen(2024);
  for (auto c : {sym2(), qsym2()}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto u = random_element(gen, c), v = random_element(gen, c), w = random_element(gen, c);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
      CHECK((u + v) * w == u * w + v * w);
      CHECK(g_action(1, u * v) == g_action(1, u) * g_action(1, v));
      CHECK(g_action(1, g_action(1, u)) == u);
      // support(uv) lies in support(u) + support(v).
      std::set<MonoidElement> sums;
      for (const auto& m : u.support()) {
        for (const auto& n : v.support()) sums.insert(c->compose(m, n));
      }
      for (const auto& k : (u * v).support()) CHECK(sums.count(k) == 1);
    }
  }
}

TEST_CASE("orbit sums: invariance, bimodule identities, representative independence") {
  Gen gen(99);
  for (auto c : {sym2(), qsym2()}) {
    for (int trial = 0; trial < 25; ++trial) {
      MonoidElement mu = M({gen.range(-2, 2), gen.range(-2, 2)});
      RatFunc a = gen.nonzero_ratfunc(c->table(), {0, 1, 2}, 2, 2);
      if (mu.coords[0] == mu.coords[1]) a = a + c->act_group(1, a);
      if (a.is_zero()) continue;
      auto s = orbit_sum(c, a, mu);
      CHECK(is_invariant(s));
      // Oracle: the last group element per coset instead of the first.
      SkewElement alt(c);
      std::map<MonoidElement, GroupElement> last;
      for (GroupElement g = 0; g < c->group().size(); ++g) last[c->conjugate(g, mu)] = g;
      for (const auto& [k, g] : last) alt += SkewElement::monomial(c, c->act_group(g, a), k);
      CHECK(s == alt);
      const RatFunc gamma = symmetric(gen, c);
      if (gamma.is_zero()) continue;
      CHECK(gamma * s == orbit_sum(c, gamma * a, mu));
      CHECK(s * gamma == orbit_sum(c, a * c->act(mu, gamma), mu));
    }
  }
}

TEST_CASE("decompose_orbits sums back with disjoint supports") {
  Gen gen(5);
  auto c = sym2();
  for (int trial = 0; trial < 20; ++trial) {
    SkewElement u(c);
    for (int i = 0; i < 3; ++i) {
      MonoidElement mu = M({gen.range(-1, 1), gen.range(-1, 1)});
      RatFunc a = gen.nonzero_ratfunc(c->table(), {0, 1, 2}, 2, 2);
      if (mu.coords[0] == mu.coords[1]) a = a + c->act_group(1, a);
      if (!a.is_zero()) u += orbit_sum(c, a, mu);
    }
    auto parts = decompose_orbits(u);
    SkewElement total(c);
    std::set<MonoidElement> seen;
    for (const auto& p : parts) {
      total += p.part;
      for (const auto& k : p.part.support()) CHECK(seen.insert(k).second);
      CHECK(c->orbit(p.representative) == p.part.support());
    }
    CHECK(total == u);
  }
}
