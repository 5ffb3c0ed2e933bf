#include "doctest.h"
#include "galring/actions/context.hpp"
#include "galring/arith/parse.hpp"
#include "random_gen.hpp"
#include "test_util.hpp"

using namespace galring;
using galring::testing::Gen;
using galring::testing::kind_of;

namespace {

BigRational Q(long n) { return BigRational(n); }

// x1, x2 acted by unit shifts, y fixed; G = S_2 swapping x1, x2.
ContextPtr shift_ctx(bool monoid_only = false) {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"y", VariableRole::Fixed}});
  std::vector<Automorphism> gens{Automorphism::shift(t, {Q(1), Q(0)}), Automorphism::shift(t, {Q(0), Q(1)})};
  return Context::lattice(t, gens, PermutationGroup::generate(3, {{1, 0, 2}}), monoid_only);
}

ContextPtr qshift_ctx() {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"q", VariableRole::Parameter}});
  auto q = RatFunc::variable(2, t);
  auto one = RatFunc(Q(1), t);
  std::vector<Automorphism> gens{Automorphism::scaling(t, {q, one}), Automorphism::scaling(t, {one, q})};
  return Context::lattice(t, gens, PermutationGroup::generate(3, {{1, 0, 2}}));
}

MonoidElement M(std::vector<std::int64_t> v) { return MonoidElement{std::move(v)}; }

}  // namespace

TEST_CASE("shift and q-scaling actions") {
  auto c = shift_ctx();
  auto x1 = c->variable(0), x2 = c->variable(1);
  CHECK(c->act(M({1, 0}), x1) == x1 - c->constant(1));
  CHECK(c->act(M({1, 0}), x2) == x2);
  CHECK(c->act(M({2, -3}), x1 * x2) == (x1 - c->constant(2)) * (x2 + c->constant(3)));

  auto qc = qshift_ctx();
  auto y1 = qc->variable(0), q = qc->variable(2);
  CHECK(qc->act(M({1, 0}), y1) == q * y1);
  CHECK(qc->act(M({-2, 0}), y1) == y1 / (q * q));
  CHECK(qc->act(M({1, 0}), q) == q);
}

TEST_CASE("monoid composition and inverses") {
  auto c = shift_ctx();
  CHECK(c->compose(M({1, 0}), M({0, 1})) == M({1, 1}));
  CHECK(c->inverse(M({2, -1})) == M({-2, 1}));
  auto n = shift_ctx(true);
  CHECK(kind_of([&] { n->inverse(M({1, 0})); }) == ErrorKind::NotInvertible);
  CHECK(n->inverse(M({0, 0})) == M({0, 0}));
  CHECK(kind_of([&] { n->validate(M({-1, 0})); }) == ErrorKind::NormalizationViolation);
  CHECK(kind_of([&] { c->validate(M({1})); }) == ErrorKind::Context);
}

TEST_CASE("conjugation by variable permutations") {
  auto c = shift_ctx();
  const GroupElement swap = 1;
  REQUIRE(c->group().element(swap) == Permutation{1, 0, 2});
  CHECK(c->conjugate(swap, M({1, 0})) == M({0, 1}));
  CHECK(c->conjugate(0, M({5, -7})) == M({5, -7}));

  // Oracle: both sides applied to every variable.
  auto lhs = c->automorphism(M({0, 1}));
  auto pg = c->group_automorphism(swap);
  auto rhs = compose(compose(pg, c->automorphism(M({1, 0}))), pg.inverse());
  CHECK(lhs == rhs);

  // g moving only the fixed variable: x1,x2 acted, y1,y2 fixed, G swaps y1,y2.
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"y1", VariableRole::Fixed}, {"y2", VariableRole::Fixed}});
  auto ctx = Context::lattice(t, {Automorphism::shift(t, {Q(1), Q(0)}), Automorphism::shift(t, {Q(0), Q(1)})},
                              PermutationGroup::generate(4, {{0, 1, 3, 2}}));
  CHECK(ctx->conjugate(1, M({3, -2})) == M({3, -2}));

  auto qc = qshift_ctx();
  CHECK(qc->conjugate(1, M({2, 1})) == M({1, 2}));
}

TEST_CASE("non-normalizing group is rejected") {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}});
  // Lattice generated by the shift of x1 only; swapping x1,x2 leaves it.
  CHECK(kind_of([&] {
          Context::lattice(t, {Automorphism::shift(t, {Q(1), Q(0)})}, PermutationGroup::generate(2, {{1, 0}}));
        }) == ErrorKind::NormalizationViolation);
  // Dependent generators do not give a free lattice.
  CHECK(kind_of([&] {
          Context::lattice(t, {Automorphism::shift(t, {Q(1), Q(0)}), Automorphism::shift(t, {Q(2), Q(0)})},
                           PermutationGroup::generate(2, {{1, 0}}));
        }) == ErrorKind::Parameter);
  // Without G the lattice may act through a non-injective map.
  auto c = Context::lattice(t, {Automorphism::shift(t, {Q(0), Q(0)})}, PermutationGroup::trivial(2));
  CHECK(c->act(M({3}), c->variable(0)) == c->variable(0));
}

TEST_CASE("orbits and stabilizers") {
  auto c = shift_ctx();
  CHECK(c->orbit(M({1, 0})) == std::set<MonoidElement>{M({1, 0}), M({0, 1})});
  CHECK(c->stabilizer(M({1, 0})).size() == 1);
  CHECK(c->orbit(M({0, 0})) == std::set<MonoidElement>{M({0, 0})});
  CHECK(c->stabilizer(M({0, 0})).size() == 2);
  CHECK(c->orbit(M({1, 1})).size() == 1);
  CHECK(c->stabilizer(M({1, 1})).size() == 2);
}

TEST_CASE("finite-group key mode") {
  auto t = make_table({{"x1", VariableRole::Acted}, {"x2", VariableRole::Acted}, {"x3", VariableRole::Acted}});
  auto s3 = PermutationGroup::generate(3, {{1, 0, 2}, {0, 2, 1}});
  CHECK(s3.size() == 6);
  auto c = Context::finite_group(t, s3, s3);
  auto s1 = c->generator(0);
  CHECK(c->act(s1, c->variable(0)) == c->variable(1));
  CHECK(c->compose(s1, s1) == c->identity());
  CHECK(c->inverse(c->compose(s1, c->generator(1))) == c->compose(c->generator(1), s1));
  CHECK(c->orbit(s1).size() == 3);
  CHECK(c->orbit(c->identity()).size() == 1);
}

TEST_CASE("group enumeration cap") {
  std::vector<Permutation> gens{{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}};
  CHECK(kind_of([&] { PermutationGroup::generate(8, gens, 1000); }) == ErrorKind::Resource);
  CHECK(kind_of([&] { PermutationGroup::generate(8, gens); }) == ErrorKind::Resource);
  CHECK(PermutationGroup::generate(8, gens, 40320).size() == 40320);
}

TEST_CASE("properties of the action") {
  Gen gen(7);
  for (auto c : {shift_ctx(), qshift_ctx()}) {
    const std::vector<std::size_t> vars{0, 1, 2};
    const auto& t = c->table();
    for (int trial = 0; trial < 40; ++trial) {
      const MonoidElement mu = M({gen.range(-3, 3), gen.range(-3, 3)});
      const MonoidElement nu = M({gen.range(-3, 3), gen.range(-3, 3)});
      const RatFunc f = gen.ratfunc(t, vars), g = gen.ratfunc(t, vars);
      CHECK(c->act(mu, f + g) == c->act(mu, f) + c->act(mu, g));
      CHECK(c->act(mu, f * g) == c->act(mu, f) * c->act(mu, g));
      CHECK(c->act(c->compose(mu, nu), f) == c->act(mu, c->act(nu, f)));
      CHECK(c->act(mu, f) == c->automorphism(mu).apply(f));
      CHECK(c->act(mu, c->variable(2)) == c->variable(2));
      for (GroupElement a = 0; a < c->group().size(); ++a) {
        for (GroupElement b = 0; b < c->group().size(); ++b) {
          CHECK(c->conjugate(c->group().multiply(a, b), mu) == c->conjugate(a, c->conjugate(b, mu)));
        }
        // act(g.mu) = g act(mu) g^{-1} on a random function.
        const GroupElement ainv = c->group().inverse(a);
        CHECK(c->act(c->conjugate(a, mu), f) == c->act_group(a, c->act(mu, c->act_group(ainv, f))));
      }
      CHECK(c->orbit(mu).size() * c->stabilizer(mu).size() == c->group().size());
    }
  }
}

TEST_CASE("orbit-stabilizer on a product of symmetric groups") {
  // Rows of sizes 1,2,3 permuted independently; lattice Z^6 by unit shifts.
  std::vector<VariableTable::Entry> entries;
  for (int i = 0; i < 6; ++i) entries.push_back({"x" + std::to_string(i + 1), VariableRole::Acted});
  auto t = make_table(entries);
  std::vector<Automorphism> gens;
  for (int i = 0; i < 6; ++i) {
    std::vector<BigRational> off(6, Q(0));
    off[i] = Q(1);
    gens.push_back(Automorphism::shift(t, off));
  }
  auto g = PermutationGroup::generate(6, {{0, 2, 1, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 3, 5, 4}});
  CHECK(g.size() == 12);
  auto c = Context::lattice(t, gens, g);
  Gen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    MonoidElement mu = c->identity();
    for (auto& x : mu.coords) x = gen.range(-1, 1);
    CHECK(c->orbit(mu).size() * c->stabilizer(mu).size() == 12);
  }
}
