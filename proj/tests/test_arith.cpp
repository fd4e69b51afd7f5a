#include <random>

#include "doctest.h"
#include "seifcalc/arith.hpp"
#include "seifcalc/errors.hpp"

using namespace seifcalc;

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");
  CHECK(Rational(Integer(6), Integer(3)).str() == "2");
  CHECK(Rational::parse("10/61") == Rational(Integer(20), Integer(122)));
  CHECK(Rational::parse(" -7 ") == Rational(-7));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
  CHECK(Rational(Integer(2), Integer(3)) < Rational(1));
  CHECK(Rational::parse("-3/5").inverse() == Rational::parse("-5/3"));
}

TEST_CASE("floor division and modulus round toward negative infinity") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(mod_floor(-1, 13) == 12);
  CHECK(mod_floor(26, 13) == 0);
  CHECK(lcm(4, 6) == 12);
}

TEST_CASE("egcd examples") {
  Egcd a = egcd(6, 4);
  CHECK(a.g == 2);
  CHECK(a.x == 1);
  CHECK(a.y == -1);
  Egcd b = egcd(13, 6);
  CHECK(b.g == 1);
  CHECK(b.x == 1);
  CHECK(b.y == -2);
  Egcd c = egcd(5, 0);
  CHECK(c.g == 5);
  CHECK(c.x == 1);
  CHECK(c.y == 0);
  CHECK_THROWS_AS(egcd(0, 0), InvalidInput);
}

TEST_CASE("egcd property on random pairs") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
  for (int i = 0; i < 10000; ++i) {
    Integer a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0) continue;
    Egcd e = egcd(a, b);
    REQUIRE(e.g > 0);
    REQUIRE(a % e.g == 0);
    REQUIRE(b % e.g == 0);
    REQUIRE(a * e.x + b * e.y == e.g);
    REQUIRE(e.g == gcd(a, b));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(*mod_inverse(2, 13) == 7);
  CHECK(*mod_inverse(1, 9) == 1);
  CHECK_FALSE(mod_inverse(4, 6).has_value());
  CHECK_THROWS_AS(mod_inverse(1, 1), InvalidInput);
  for (long n = 2; n < 60; ++n)
    for (long a = -70; a < 70; ++a) {
      auto x = mod_inverse(a, n);
      REQUIRE(x.has_value() == (gcd(a, n) == 1));
      if (x) {
        REQUIRE(*x > 0);
        REQUIRE(*x < n);
        REQUIRE(mod_floor(Integer(a) * *x, n) == 1);
      }
    }
}

TEST_CASE("negative continued fractions") {
  using V = std::vector<Integer>;
  CHECK(neg_cf(3, 1) == V{3});
  CHECK(neg_cf(13, 6) == V{3, 2, 2, 2, 2, 2});
  CHECK(neg_cf(25, 19) == V{2, 2, 2, 7});
  CHECK_THROWS_AS(neg_cf(4, 2), InvalidInput);
  CHECK_THROWS_AS(neg_cf(2, 3), InvalidInput);
  for (long num = 2; num < 120; ++num)
    for (long den = 1; den < num; ++den) {
      if (gcd(num, den) != 1) continue;
      auto cf = neg_cf(num, den);
      for (const auto& a : cf) REQUIRE(a >= 2);
      CfValue v = eval_neg_cf(cf);
      REQUIRE(v.num == num);
      REQUIRE(v.den == den);
    }
}

TEST_CASE("Smith elementary divisors") {
  using V = std::vector<Integer>;
  CHECK(smith_elementary_divisors(IntMatrix{{1, 0}, {0, 1}}) == V{1, 1});
  CHECK(smith_elementary_divisors(IntMatrix{{2, 0}, {0, 4}}) == V{2, 4});
  CHECK(smith_elementary_divisors(IntMatrix{{2, 0}, {0, 3}}) == V{1, 6});
  // rows 2q1+h, 2q2-h, 2q3-h, q1+q2+q3 in the basis (q1,q2,q3,h)
  IntMatrix m0{{2, 0, 0, 1}, {0, 2, 0, -1}, {0, 0, 2, -1}, {1, 1, 1, 0}};
  CHECK(smith_elementary_divisors(m0) == V{1, 1, 2, 2});
  CHECK(smith_elementary_divisors(IntMatrix{{0, 0}, {0, 0}}) == V{0, 0});
  CHECK(smith_elementary_divisors(IntMatrix{{1, 2, 3}}) == V{1, 0, 0});
}

TEST_CASE("Smith divisors: chain and determinant on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = size(rng);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    auto d = smith_elementary_divisors(m);
    REQUIRE(d.size() == n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
      else REQUIRE(d[i + 1] == 0);
    Integer det = determinant(m);
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    REQUIRE(prod == abs(det));
  }
}

TEST_CASE("determinant, minors and rational solve") {
  IntMatrix q{{-2, 1}, {1, -2}};
  CHECK(determinant(q) == 3);
  auto minors = leading_minors(q);
  CHECK(minors == std::vector<Integer>{-2, 3});
  auto z = solve_rational(q, {Rational(1), Rational(0)});
  CHECK(z[0] == Rational::parse("-2/3"));
  CHECK(z[1] == Rational::parse("-1/3"));
  CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}), InvalidInput);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}
