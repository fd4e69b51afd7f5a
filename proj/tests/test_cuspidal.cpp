#include "doctest.h"
#include "seifcalc/cuspidal.hpp"
#include "seifcalc/errors.hpp"
#include "support/generators.hpp"

using namespace seifcalc;

using testing::for_each_coprime_pair;

TEST_CASE("dual pair") {
  CHECK(dual_pair(4, 5) == DualPair{1, 4});
  CHECK(dual_pair(3, 22) == DualPair{1, 15});
  CHECK(dual_pair(3, 5) == DualPair{2, 2});
  for (long d = 3; d <= 30; ++d) CHECK(dual_pair(d - 1, d) == DualPair{1, d - 1});
  for (long m = 3; m <= 10; ++m)
    for (long k = 2; k <= 10; ++k) CHECK(dual_pair(m, k * m - 1) == DualPair{m - 1, k});
  CHECK_THROWS_AS(dual_pair(4, 6), InvalidInput);
  CHECK_THROWS_AS(dual_pair(1, 6), InvalidInput);
  CHECK_THROWS_AS(dual_pair(7, 5), InvalidInput);
  for_each_coprime_pair(120, [](const Integer& p, const Integer& q) {
    DualPair d = dual_pair(p, q);
    CHECK(p * d.q_prime + q * d.p_prime == p * q + 1);
    CHECK(d.q_prime == *mod_inverse(p, q));
  });
}

TEST_CASE("m bound table") {
  CHECK(m_bound(2, 3) == 9);
  for (long d = 3; d <= 12; ++d) CHECK(m_bound(d - 1, d) == d * d);
  CHECK(m_bound(5, 6) == 36);
  for (long k = 2; k <= 20; ++k) {
    CHECK(m_bound(2, 2 * k + 1) == 4 * k + 4);
    CHECK(m_bound(3, 3 * k + 1) == 9 * k + 6);
  }
  CHECK(m_bound(2, 7) == 16);
  CHECK(m_bound(3, 10) == 33);
}

TEST_CASE("defining inequality of the bound") {
  for_each_coprime_pair(300, [](const Integer& p, const Integer& q) {
    Rational gap = Rational(m_bound(p, q)) - Rational(p * q) - bound_excess(p, q);
    CHECK(gap > Rational(-1));
    CHECK(gap <= Rational(0));
  });
}

TEST_CASE("multiplicity sequences") {
  CuspInvariants a = cusp_invariants(2, 3);
  CHECK(a.multiplicities == std::vector<Integer>{2});
  CHECK(a.M == 4);
  CHECK(a.ell == 2);
  CuspInvariants b = cusp_invariants(2, 13);
  CHECK(b.multiplicities == std::vector<Integer>(6, 2));
  CHECK(b.M == 24);
  CuspInvariants c = cusp_invariants(3, 5);
  CHECK(c.multiplicities == std::vector<Integer>{3, 2});
  CHECK(c.M == 13);
  CHECK(c.ell == 2);
  for (long m = 3; m <= 20; ++m) CHECK(cusp_invariants(m - 1, m).multiplicities == std::vector<Integer>{m - 1});
  // delta invariant, with a sequence rebuilt here from the raw Euclidean algorithm
  for_each_coprime_pair(300, [](const Integer& p, const Integer& q) {
    CuspInvariants inv = cusp_invariants(p, q);
    Integer delta = 0;
    for (const auto& x : inv.multiplicities) delta += x * (x - 1);
    CHECK(delta == (p - 1) * (q - 1));
    std::vector<Integer> seq;
    Integer a = q, b = p;
    while (b > 0) {
      Integer t = a / b;
      for (Integer i = 0; i < t; ++i) seq.push_back(b);
      Integer r = a - t * b;
      a = b;
      b = r;
    }
    while (!seq.empty() && seq.back() == 1) seq.pop_back();
    CHECK(seq == inv.multiplicities);
  });
}

TEST_CASE("comparison with the multiplicity bound") {
  CHECK(gs_bound(2, 13) == 29);
  CHECK(m_bound(2, 13) == 28);
  CHECK(compare_bounds(2, 13) == BoundComparison::LT);
  CHECK(gs_bound(3, 5) == 18);
  CHECK(compare_bounds(3, 5) == BoundComparison::EQ);
  CHECK(compare_bounds(4, 9) == BoundComparison::LT);
  for_each_coprime_pair(300, [](const Integer& p, const Integer& q) {
    bool on_locus = (q == p + 1 && p >= 2) || (p >= 3 && (q + 1) % p == 0 && (q + 1) / p >= 2);
    CHECK(m_bound(p, q) <= gs_bound(p, q));
    CHECK((compare_bounds(p, q) == BoundComparison::EQ) == on_locus);
  });
}

TEST_CASE("blow-up monotonicity") {
  auto b = blowup_pair(2, 13);
  REQUIRE(b);
  CHECK(b->p == 2);
  CHECK(b->q == 11);
  CHECK(b->p_prime == 1);
  CHECK(b->q_prime == 6);
  auto c = blowup_pair(3, 5);
  REQUIRE(c);
  CHECK(c->p == 2);
  CHECK(c->q == 3);
  CHECK_FALSE(blowup_pair(2, 3));
  for_each_coprime_pair(300, [](const Integer& p, const Integer& q) {
    auto t = blowup_pair(p, q);
    if (!t) return;
    CHECK(m_bound(p, q) - p * p <= m_bound(t->p, t->q));
    DualPair d = dual_pair(p, q);
    if (q - p > p) {
      CHECK(t->p_prime == d.p_prime);
      CHECK(t->q_prime == d.q_prime - p + d.p_prime);
    }
  });
}

TEST_CASE("classification of the boundary") {
  MpqmClass below = classify_Mpqm(2, 3, 5);
  CHECK(below.kind == MpqmCase::Below);
  CHECK(*below.manifold == make_seifert({{1, 2}, {2, -1}, {3, -2}}));
  CHECK(below.contact.kind == ContactKind::Transverse);

  MpqmClass at = classify_Mpqm(2, 3, 6);
  CHECK(at.kind == MpqmCase::AtProduct);
  CHECK_FALSE(at.manifold);
  REQUIRE(at.summands.size() == 2);
  CHECK(lens_equal(at.summands[0], {2, 1}));
  CHECK(lens_equal(at.summands[1], {3, 2}));
  CHECK(at.contact.kind == ContactKind::FixedComponent);

  MpqmClass f5 = classify_Mpqm(3, 22, 64);
  CHECK(*f5.manifold == make_seifert({{2, 3}, {3, -1}, {22, -15}}));
  CHECK(same_seifert(*f5.manifold, make_seifert({{2, -1}, {3, 2}, {22, 7}})));

  MpqmClass lens = classify_Mpqm(2, 13, 25);
  CHECK(*lens.manifold == make_seifert({{1, 2}, {2, -1}, {13, -7}}));
  CHECK(exceptional_count(*lens.manifold) == 2);

  MpqmClass above = classify_Mpqm(2, 3, 9);
  CHECK(above.kind == MpqmCase::Above);
  CHECK(*above.manifold == make_seifert({{3, 2}, {2, -1}, {3, -2}}));
  CHECK(above.contact.kind == ContactKind::NonTransverse);
  CHECK(above.contact.dividing == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(classify_Mpqm(2, 3, 0), InvalidInput);
  CHECK_THROWS_AS(classify_Mpqm(2, 4, 5), InvalidInput);
}

TEST_CASE("homology order of the boundary") {
  for_each_coprime_pair(50, [](const Integer& p, const Integer& q) {
    Integer pq = p * q;
    bool ok = true;
    for (Integer m = 1; m <= 2 * pq; ++m) {
      MpqmClass c = classify_Mpqm(p, q, m);
      if (m == pq) {
        ok = ok && c.summands.size() == 2 && c.summands[0].a * c.summands[1].a == pq;
        continue;
      }
      auto order = h1(*c.manifold).order();
      ok = ok && order && *order == m;
    }
    CHECK_MESSAGE(ok, "p=", to_string(p), " q=", to_string(q));
  });
}

TEST_CASE("one below the product gives a lens space") {
  for_each_coprime_pair(60, [](const Integer& p, const Integer& q) {
    MpqmClass c = classify_Mpqm(p, q, p * q - 1);
    REQUIRE(c.manifold);
    CHECK(c.manifold->fibers[0] == Fiber{1, 2});
    CHECK(exceptional_count(*c.manifold) == 2);
    CHECK(lens_from_two_fibers(*c.manifold).a == p * q - 1);
  });
}

TEST_CASE("fillability") {
  CHECK(fillability_verdict(2, 3, 9) == Fillability::Fillable);
  CHECK(fillability_verdict(2, 3, 10) == Fillability::BeyondBound);
  CHECK(fillability_verdict(2, 3, 5) == Fillability::TransverseCase);
  CHECK(fillability_verdict(2, 3, 6) == Fillability::TransverseCase);
  for_each_coprime_pair(60, [](const Integer& p, const Integer& q) {
    Integer mb = m_bound(p, q);
    CHECK(fillability_verdict(p, q, mb) == (mb > p * q ? Fillability::Fillable : Fillability::TransverseCase));
    CHECK(fillability_verdict(p, q, mb + 1) == Fillability::BeyondBound);
  });
}

TEST_CASE("curve family catalog") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(11) == 89);
  CHECK(fibonacci(90) == Integer("2880067194370816120"));

  auto cat = family_catalog();
  int per_family[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& e : cat) {
    CatalogCheck c = check_catalog_entry(e);
    CHECK_MESSAGE(c.manifold_matches, "family ", e.family, " ", e.parameter);
    CHECK_MESSAGE(c.within_bound, "family ", e.family, " ", e.parameter);
    ++per_family[e.family];
  }
  for (int f = 1; f <= 6; ++f) CHECK(per_family[f] > 0);

  auto first = cat.front();
  CHECK(first.family == 1);
  CHECK(*classify_Mpqm(first.p, first.q, 9).manifold == make_seifert({{3, 2}, {2, -1}, {3, -2}}));
  CHECK(same_seifert(*classify_Mpqm(2, 7, 16).manifold, make_seifert({{2, 1}, {2, -1}, {7, -4}})));
  CHECK(classify_Mpqm(4, 25, 100).kind == MpqmCase::AtProduct);
  CHECK(same_seifert(*classify_Mpqm(6, 43, 256).manifold, make_seifert({{2, -1}, {6, 5}, {43, 7}})));
}
