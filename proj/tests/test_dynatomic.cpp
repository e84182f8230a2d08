#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ratdyn/dynatomic.hpp"
#include "ratdyn/roots.hpp"
#include "test_support.hpp"

using namespace ratdyn;
using testing::R;
using testing::Rs;

namespace {

Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

// Every divisor of |n| (n != 0), by trial division.
std::vector<long> divisors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Rational root theorem by brute force for small integer coefficients.
std::set<Rational> brute_roots(const std::vector<long>& a) {
  std::set<Rational> out;
  std::size_t lo = 0;
  while (a[lo] == 0) ++lo;
  if (lo > 0) out.insert(Rational(0));
  for (long r : divisors(a[lo]))
    for (long s : divisors(a.back()))
      for (long sign : {1L, -1L}) {
        const Rational z(sign * r, s);
        Rational v(0);
        for (std::size_t i = a.size(); i-- > 0;) v = v * z + Rational(a[i]);
        if (v.is_zero()) out.insert(z);
      }
  return out;
}

}  // namespace

TEST_CASE("moebius") {
  const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (unsigned n = 1; n <= 12; ++n) CHECK(moebius(n) == expected[n - 1]);
  CHECK(moebius(30) == -1);
}

TEST_CASE("iterate_homogeneous") {
  const auto kb = iterate_homogeneous(KBMap(R("1"), R("1")), 1);
  CHECK(kb.f == HomogeneousForm(2, {R("1"), R("0"), R("1")}));
  CHECK(kb.g == HomogeneousForm(2, {R("0"), R("1"), R("0")}));

  const auto quad = iterate_homogeneous(QuadraticMap{R("5/2")}, 1);
  CHECK(quad.f == HomogeneousForm(2, {R("5/2"), R("0"), R("1")}));
  CHECK(quad.g == HomogeneousForm(2, {R("1"), R("0"), R("0")}));

  // (x^2 - y^2)^2 - y^4 = x^4 - 2 x^2 y^2.
  const auto two = iterate_homogeneous(QuadraticMap{R("-1")}, 2);
  CHECK(two.n == 2);
  CHECK(two.f == HomogeneousForm(4, {R("0"), R("0"), R("-2"), R("0"), R("1")}));
  CHECK(two.g == HomogeneousForm(4, {R("1"), R("0"), R("0"), R("0"), R("0")}));
}

TEST_CASE("iterates agree with repeated application") {
  testing::RationalSampler sample(17, 12, true);
  for (int i = 0; i < 15; ++i) {
    const Map m = i % 2 ? Map(QuadraticMap{sample()}) : Map(KBMap(sample(), sample()));
    const auto it = iterate_homogeneous(m, 3);
    CHECK(it.f.degree() == 8);
    CHECK(it.g.degree() == 8);
    for (int j = 0; j < 5; ++j) {
      const Rational z = sample();
      ProjectivePoint p(z);
      for (int s = 0; s < 3; ++s) p = apply_map(m, p);
      CHECK(ProjectivePoint(it.f.evaluate(z, Rational(1)).num() * it.g.evaluate(z, Rational(1)).den(),
                            it.g.evaluate(z, Rational(1)).num() * it.f.evaluate(z, Rational(1)).den()) == p);
    }
  }
}

TEST_CASE("period_polynomial") {
  CHECK(period_polynomial(QuadraticMap{R("-13")}, 1) == poly({-13, -1, 1}));
  CHECK(period_polynomial(QuadraticMap{R("0")}, 1) == poly({0, -1, 1}));
  CHECK(period_polynomial(KBMap(R("1"), R("1")), 1) == poly({1}));
  // (k - 1) z^2 + b in general.
  CHECK(period_polynomial(KBMap(R("3"), R("-1/2")), 1) == Polynomial({R("-1/2"), R("0"), R("2")}));
}

TEST_CASE("dynatomic_polynomial examples") {
  CHECK(dynatomic_polynomial(QuadraticMap{R("-3")}, 2) == poly({-2, 1, 1}));
  CHECK(rational_roots(dynatomic_polynomial(QuadraticMap{R("-3")}, 2)) == Rs({"1", "-2"}));
  CHECK(dynatomic_polynomial(QuadraticMap{R("-13")}, 1) == period_polynomial(QuadraticMap{R("-13")}, 1).canonical());
  const auto four = dynatomic_polynomial(KBMap(R("4/3"), R("-10/3")), 4);
  const auto pair = psi4_lambda4(R("4/3"), R("-10/3"));
  CHECK(four.proportional_to(pair.psi * pair.lambda));
}

TEST_CASE("psi4_lambda4") {
  const auto one = psi4_lambda4(R("1"), R("1"));
  CHECK(one.psi == poly({1, 0, 4, 0, 2}));
  CHECK(one.psi.to_string() == "2*z^4 + 4*z^2 + 1");
  CHECK(rational_roots(psi4_lambda4(R("4/3"), R("-10/3")).psi) == Rs({"2", "1", "-2", "-1"}));
  CHECK(rational_roots(psi4_lambda4(R("24/7"), R("-300/7")).lambda).empty());
  testing::RationalSampler sample(19, 40, true);
  for (int i = 0; i < 50; ++i) {
    const auto p = psi4_lambda4(sample(), sample());
    CHECK(p.psi.degree() == 4);
    CHECK(p.lambda.degree() == 8);
  }
}

TEST_CASE("Phi*_4 of a KB map is proportional to Psi4 * Lambda4") {
  testing::RationalSampler sample(23, 30, true);
  for (int i = 0; i < 100; ++i) {
    const Rational k = sample(), b = sample();
    const auto pair = psi4_lambda4(k, b);
    CHECK(dynatomic_polynomial(KBMap(k, b), 4).proportional_to(pair.psi * pair.lambda));
  }
}

TEST_CASE("dynatomic degrees") {
  CHECK(dynatomic_degree(1) == 3);
  CHECK(dynatomic_degree(2) == 2);
  CHECK(dynatomic_degree(3) == 6);
  CHECK(dynatomic_degree(4) == 12);
  testing::RationalSampler sample(29, 10, true);
  for (unsigned n = 1; n <= 5; ++n) {
    const Map quad = QuadraticMap{sample()};
    const Map kb = KBMap(sample(), sample());
    CHECK(dynatomic_form(quad, n).degree() == dynatomic_degree(n));
    CHECK(dynatomic_form(kb, n).degree() == dynatomic_degree(n));
  }
  // Quadratic polynomials fix infinity once, so the affine degree drops by one at n = 1 only.
  CHECK(dynatomic_polynomial(QuadraticMap{R("1/3")}, 1).degree() == 2);
  CHECK(dynatomic_polynomial(QuadraticMap{R("1/3")}, 3).degree() == 6);
}

TEST_CASE("dynatomic factors recompose to the period polynomial") {
  testing::RationalSampler sample(31, 10, true);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int i = 0; i < 3; ++i) {
      for (const Map& m : {Map(QuadraticMap{sample()}), Map(KBMap(sample(), sample()))}) {
        Polynomial product = Polynomial::constant(Rational(1));
        for (unsigned d = 1; d <= n; ++d)
          if (n % d == 0) product = product * dynatomic_polynomial(m, d);
        CHECK(product.proportional_to(period_polynomial(m, n)));
      }
    }
  }
}

TEST_CASE("rational_roots examples") {
  CHECK(rational_roots(poly({-2, 1, 1})) == Rs({"1", "-2"}));
  CHECK(rational_roots(poly({1, 0, 1})).empty());
  CHECK(rational_roots(poly({0, 0, 0, 5})) == Rs({"0"}));
  CHECK(rational_roots(poly({7})).empty());
  // (3z - 2)^2 (5z + 7) (z^2 - 2)
  const auto p = poly({-2, 0, 1}) * poly({7, 5}) * poly({-2, 3}) * poly({-2, 3});
  CHECK(rational_roots(p) == Rs({"2/3", "-7/5"}));
  CHECK(rational_roots(Polynomial({R("1/2"), R("-3/4")})) == Rs({"2/3"}));
  CHECK_THROWS_WITH_AS(rational_roots(Polynomial()), "zero polynomial has all roots", DomainError);
}

TEST_CASE("simplest_rational_between") {
  CHECK(simplest_rational_between(R("1/3"), R("1/2")) == R("1/2"));
  CHECK(simplest_rational_between(R("3/10"), R("2/5")) == R("1/3"));
  CHECK(simplest_rational_between(R("-7/4"), R("-5/3")) == R("-5/3"));
  CHECK(simplest_rational_between(R("-1/2"), R("1/2")) == R("0"));
  CHECK(simplest_rational_between(R("22/7"), R("22/7")) == R("22/7"));
}

TEST_CASE("rational_roots matches the brute-force divisor oracle") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> small(-6, 6), count(0, 3);
  for (int i = 0; i < 300; ++i) {
    // A product of random linear factors and one random quadratic.
    Polynomial p = poly({small(rng), small(rng), small(rng) == 0 ? 1 : 2});
    for (long j = count(rng); j > 0; --j) {
      long s = small(rng);
      if (s == 0) s = 1;
      p = p * poly({small(rng), s});
    }
    if (p.is_zero()) continue;
    const auto ints = p.canonical_integers();
    std::vector<long> a;
    for (const auto& v : ints) a.push_back(v.get_si());
    const auto expected = brute_roots(a);
    CHECK(rational_roots(p) == expected);
    CHECK(rational_roots_bounded(p, Integer(1000)) == expected);
  }
}

TEST_CASE("rational_roots_bounded drops roots above the bound") {
  const auto p = poly({-11, 3}) * poly({-1, 2});  // roots 11/3 and 1/2
  CHECK(rational_roots_bounded(p, Integer(10)) == Rs({"1/2"}));
  CHECK(rational_roots_bounded(p, Integer(11)) == Rs({"11/3", "1/2"}));
}

TEST_CASE("periodic_points_exact examples") {
  CHECK(periodic_points_exact(QuadraticMap{R("-13")}, 2) == Rs({"3", "-4"}));
  CHECK(periodic_points_exact(QuadraticMap{R("-13")}, 1).empty());
  CHECK(periodic_points_exact(KBMap(R("24/7"), R("-300/7")), 4) == Rs({"3", "-4", "-3", "4"}));
  CHECK(periodic_points_exact(QuadraticMap{R("-29/16")}, 3) == Rs({"5/4", "-1/4", "-7/4"}));
  // c = -3/4: the period-2 factor z^2 + z + 1/4 has the double root -1/2, which is fixed.
  CHECK(periodic_points_exact(QuadraticMap{R("-3/4")}, 2).empty());
  CHECK(periodic_points_exact(QuadraticMap{R("-3/4")}, 1) == Rs({"3/2", "-1/2"}));
}

TEST_CASE("periodic_points_exact agrees with a direct orbit scan") {
  const std::vector<Map> maps{QuadraticMap{R("-13")},       QuadraticMap{R("-29/16")},   QuadraticMap{R("-3/4")},
                              QuadraticMap{R("0")},         KBMap(R("24/7"), R("-300/7")), KBMap(R("4/3"), R("-2/15")),
                              KBMap(R("3"), R("-1/2")),     KBMap(R("-5/6"), R("-3/2"))};
  const auto candidates = enumerate_rationals(1000);
  for (const Map& m : maps) {
    const Integer escape = escape_height(m);
    std::map<std::size_t, std::set<Rational>> scanned;
    for (const Rational& z : candidates)
      if (auto n = exact_period(m, z, 8, escape)) scanned[*n].insert(z);
    for (unsigned n = 1; n <= 4; ++n) {
      std::set<Rational> expected;
      for (const auto& z : periodic_points_exact(m, n))
        if (height(z) <= 1000) expected.insert(z);
      CHECK(scanned[n] == expected);
    }
  }
}

TEST_CASE("no KB map has a rational point of exact period 3") {
  testing::RationalSampler sample(41, 30, true);
  for (int i = 0; i < 60; ++i) CHECK(periodic_points_exact(KBMap(sample(), sample()), 3).empty());
}
