#include <random>

#include "doctest.h"
#include "seifcalc/errors.hpp"
#include "seifcalc/openbook.hpp"
#include "support/generators.hpp"

using namespace seifcalc;

namespace {

using V = std::vector<Integer>;

OpenBookSpec spec_of(std::vector<Fiber> interior, std::vector<BindingSpec> bindings, long n, long genus = 0) {
  OpenBookSpec s;
  s.genus = genus;
  s.interior = std::move(interior);
  s.bindings = std::move(bindings);
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("dagger solutions") {
  CHECK(*dagger_solve({2, 2}) == V{1, 1});
  CHECK_FALSE(dagger_solve({2, 2, 2}).has_value());
  CHECK(*dagger_solve({2, 3, 6}) == V{1, 1, 1});
  CHECK_THROWS_AS(dagger_solve({}), InvalidInput);
  CHECK_THROWS_AS(dagger_solve({1, 2}), InvalidInput);
  auto all = dagger_solve_all({2, 3, 6});
  CHECK(all.size() == 2);
  CHECK(all[0] == V{1, 1, 1});
  CHECK(all[1] == V{1, 2, 5});
  for (const auto& sol : dagger_solve_all({4, 6, 12, 5, 10})) {
    Rational sum = 0;
    V orders{4, 6, 12, 5, 10};
    for (std::size_t i = 0; i < sol.size(); ++i) {
      REQUIRE(gcd(sol[i], orders[i]) == 1);
      sum += Rational(sol[i], orders[i]);
    }
    REQUIRE(sum.is_integer());
  }
}

TEST_CASE("monodromy to Seifert map") {
  SeifertData s = monodromy_to_seifert(0, {{2, 1}, {3, 2}}, {{6, 5, 1, 0}});
  CHECK(s == make_seifert({{1, -2}, {2, 1}, {3, 2}, {1, 1}}));
  CHECK(same_seifert(s, make_seifert({{1, -1}, {2, 1}, {3, 2}})));
  CHECK(euler_number(s) == Rational::parse("-1/6"));
  KL kl = binding_kl(6, 5);
  CHECK(kl.k == 1);
  CHECK(kl.l == 1);
  SeifertData fixed = monodromy_to_seifert(0, {{2, 1}, {3, 2}}, {{6, 5, 6, -1}});
  CHECK(fixed.fibers.back() == Fiber{0, 1});
  CHECK_THROWS_AS(monodromy_to_seifert(0, {{2, 1}}, {{6, 5, 1, 0}}), InvalidInput);
}

TEST_CASE("single-binding open books") {
  auto a = open_book_single(make_seifert({{1, -1}, {2, 1}, {3, 2}}));
  REQUIRE(a);
  CHECK(a->spec.n == 6);
  CHECK(a->bindings[0].p == 1);
  CHECK(a->bindings[0].orientation == BindingOrientation::Fiber);
  auto c = open_book_single(make_seifert({{-3, 4}, {3, 1}, {2, 1}}));
  REQUIRE(c);
  CHECK(c->spec.n == 6);
  CHECK(c->bindings[0].p == 9);
  CHECK(c->bindings[0].orientation == BindingOrientation::AntiFiber);
  CHECK(c->chi == -1);
  CHECK_FALSE(open_book_single(make_seifert({{1, 0}, {2, 1}, {6, 1}})).has_value());
  auto disk = open_book_single(make_seifert({{1, -1}}));
  REQUIRE(disk);
  CHECK(disk->chi == 1);
  auto fixed = open_book_single(make_seifert({{0, 1}, {2, 1}, {3, 1}}));
  REQUIRE(fixed);
  CHECK(fixed->bindings[0].p == 6);
  CHECK(fixed->bindings[0].orientation == BindingOrientation::Fixed);
  CHECK_THROWS_AS(contact_type(*fixed), InvalidInput);
  CHECK_THROWS_AS(open_book_single(make_seifert({{1, 0}, {2, 3}})), InvalidInput);
}

TEST_CASE("multi-binding open books") {
  RationalOpenBook a = open_book_multi(spec_of({{2, 1}, {2, 1}}, {{{-2, 1}, 1, 0}, {{1, -1}, 1, 2}}, 2));
  CHECK(a.bindings[0].p == 4);
  CHECK(a.bindings[1].p == 1);
  CHECK(a.bindings[0].orientation == BindingOrientation::AntiFiber);
  CHECK(a.bindings[1].orientation == BindingOrientation::Fiber);
  CHECK(a.bindings[0].oriented == Fiber{-2, 1});
  ContactType ct = contact_type(a);
  CHECK(ct.kind == ContactKind::NonTransverse);
  CHECK(ct.dividing == std::vector<std::size_t>{0});

  RationalOpenBook b = open_book_multi(spec_of({{2, 1}}, {{{13, 6}, 7, 1}, {{3, -1}, 5, 1}}, 8));
  CHECK(b.bindings[0].p == 61);
  CHECK(b.bindings[1].p == 1);
  CHECK(contact_type(b).kind == ContactKind::Transverse);

  RationalOpenBook c = open_book_multi(spec_of({{13, 7}}, {{{1, 0}, 51, 1}, {{2, -1}, 25, 1}}, 52));
  CHECK(c.bindings[0].p == 1);
  CHECK(c.bindings[1].p == 2);
  CHECK(c.chi == -48);
  CHECK(contact_type(c).kind == ContactKind::Transverse);

  CHECK_THROWS_AS(open_book_multi(spec_of({{13, 7}}, {{{1, 0}, 51, 2}, {{2, -1}, 25, 1}}, 52)), InvalidInput);
  CHECK_THROWS_AS(open_book_multi(spec_of({{13, 7}}, {{{1, 0}, 50, 1}, {{2, -1}, 26, 1}}, 52)), InvalidInput);
  CHECK_THROWS_AS(open_book_multi(spec_of({{5, 1}}, {{{1, 0}, 4, 1}}, 6)), InvalidInput);
  // orientation quantity beta/alpha + b - c/n vanishes
  CHECK_THROWS_AS(open_book_multi(spec_of({{2, 1}}, {{{2, 1}, 1, 0}, {{1, 0}, 1, 1}}, 2)), InvalidInput);
}

TEST_CASE("page Euler characteristic") {
  CHECK(page_euler_char(spec_of({{13, 7}}, {{{1, 0}, 51, 1}, {{2, -1}, 25, 1}}, 52)) == -48);
  CHECK(page_euler_char(spec_of({{3, 1}, {2, 1}}, {{{-3, 4}, 1, 1}}, 6)) == -1);
  CHECK(page_euler_char(spec_of({}, {{{1, 0}, 0, 0}}, 1)) == 1);
}

TEST_CASE("contact type depends only on the reversed bindings") {
  // two open books on M0 with the same anti-fiber binding set
  RationalOpenBook a = open_book_multi(spec_of({{2, 1}, {2, 1}}, {{{-2, 1}, 1, 0}, {{1, -1}, 1, 2}}, 2));
  RationalOpenBook b = open_book_multi(spec_of({{2, 1}, {2, 1}}, {{{-2, 1}, 1, -1}, {{1, -1}, 1, 3}}, 2));
  CHECK(a.bindings[0].orientation == b.bindings[0].orientation);
  CHECK(a.bindings[1].orientation == b.bindings[1].orientation);
  CHECK(contact_type(a) == contact_type(b));
}


TEST_CASE("property: open book round trip through the monodromy map") {
  std::mt19937_64 rng(4242);
  int built = 0;
  while (built < 1000) {
    auto spec = testing::random_openbook_spec(rng);
    if (!spec) continue;
    RationalOpenBook ob;
    try {
      ob = open_book_multi(*spec);
    } catch (const InvalidInput&) {
      continue;  // vanishing orientation quantity
    }
    SeifertData back = monodromy_to_seifert(spec->genus, spec->interior, ob.monodromy());
    REQUIRE(same_seifert(back, spec->manifold()));
    Rational predicted = 0;
    for (std::size_t i = 0; i < ob.bindings.size(); ++i) {
      const auto& b = spec->bindings[i];
      Rational q = Rational(b.pair.beta, b.pair.alpha) + Rational(b.b) - Rational(b.c, spec->n);
      REQUIRE(Rational(ob.bindings[i].p) == Rational(spec->n) * Rational(abs(b.pair.alpha)) * q.abs());
      REQUIRE((ob.bindings[i].orientation == BindingOrientation::Fiber) == (q.sign() > 0));
      predicted += Rational(ob.bindings[i].p, ob.bindings[i].oriented.alpha);
    }
    REQUIRE(euler_number(back) == -predicted / Rational(spec->n));
    ++built;
  }
}
