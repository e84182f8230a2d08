#include <vector>

#include "doctest.h"
#include "ratdyn/classification.hpp"
#include "ratdyn/dynatomic.hpp"
#include "test_support.hpp"

using namespace ratdyn;
using testing::R;
using testing::Rs;

namespace {

std::vector<Rational> seq(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(R(t));
  return out;
}

}  // namespace

TEST_CASE("quad_periodic_points examples") {
  CHECK(quad_periodic_points(R("-3/4"), 1) == Rs({"3/2", "-1/2"}));
  CHECK(quad_periodic_points(R("-3"), 2) == Rs({"1", "-2"}));
  CHECK(quad_periodic_points(R("1/4"), 1) == Rs({"1/2"}));
  CHECK(quad_periodic_points(R("-3/4"), 2).empty());
  CHECK(quad_periodic_points(R("1"), 1).empty());

  const auto three = classify_quadratic(R("-29/16"), 3);
  CHECK(three.points == Rs({"5/4", "-1/4", "-7/4"}));
  REQUIRE(three.cycles.size() == 1);
  CHECK(three.cycles.front() == seq({"5/4", "-1/4", "-7/4"}));
  REQUIRE(three.witness.has_value());
  CHECK(quad_family_period3(*three.witness).c == R("-29/16"));

  CHECK(classify_quadratic(R("-3/4"), 1).witness == R("1"));
  CHECK(classify_quadratic(R("-3"), 2).witness == R("3/2"));
  CHECK_THROWS_AS(quad_periodic_points(R("1"), 4), DomainError);
}

TEST_CASE("quad_family_period3") {
  const auto one = quad_family_period3(R("1"));
  CHECK(one.c == R("-29/16"));
  CHECK(std::vector<Rational>{one.x1, one.x2, one.x3} == seq({"5/4", "-1/4", "-7/4"}));
  const auto two = quad_family_period3(R("2"));
  CHECK(two.c == R("-301/144"));
  CHECK(std::vector<Rational>{two.x1, two.x2, two.x3} == seq({"19/12", "5/12", "-23/12"}));
  const auto half = quad_family_period3(R("1/2"));
  CHECK(half.c == R("-421/144"));
  CHECK(half.x1 == R("17/12"));
  CHECK_THROWS_WITH_AS(quad_family_period3(R("0")), "parameter excluded: tau=0", DomainError);
  CHECK_THROWS_WITH_AS(quad_family_period3(R("-1")), "parameter excluded: tau=-1", DomainError);
}

TEST_CASE("quad_family_period3 cycles are permuted by z^2 + c") {
  testing::RationalSampler sample(43, 60, true);
  int checked = 0;
  while (checked < 100) {
    const Rational tau = sample();
    if (tau == Rational(-1)) continue;
    const auto f = quad_family_period3(tau);
    auto step = [&](const Rational& z) { return z * z + f.c; };
    CHECK(step(f.x1) == f.x2);
    CHECK(step(f.x2) == f.x3);
    CHECK(step(f.x3) == f.x1);
    CHECK(exact_period(QuadraticMap{f.c}, f.x1) == 3u);
    ++checked;
  }
}

TEST_CASE("kb_periodic_points examples") {
  CHECK(kb_periodic_points(R("3"), R("-1/2"), 1) == Rs({"1/2", "-1/2"}));
  CHECK(kb_periodic_points(R("-5/6"), R("-3/2"), 2) == Rs({"3", "-3"}));
  CHECK(kb_periodic_points(R("4/3"), R("-10/3"), 4) == Rs({"2", "1", "-2", "-1"}));
  CHECK(kb_periodic_points(R("1"), R("5"), 1).empty());
  CHECK(kb_periodic_points(R("-1"), R("5"), 2).empty());
  const auto four = classify_kb(R("4/3"), R("-10/3"), 4);
  REQUIRE(four.cycles.size() == 1);
  CHECK(four.cycles.front() == seq({"2", "1", "-2", "-1"}));
  // m is 2 or -1/2 up to the choice of starting point.
  REQUIRE(four.witness.has_value());
  const Rational m = *four.witness;
  CHECK(Rational(2) * m / (m.square() - Rational(1)) == R("4/3"));
  CHECK_THROWS_AS(kb_periodic_points(R("1"), R("1"), 3), DomainError);
}

TEST_CASE("kb_family_period4") {
  const auto two = kb_family_period4(R("2"));
  CHECK(two.k == R("4/3"));
  CHECK(two.b == R("-2/15"));
  CHECK(two.points == std::array<Rational, 4>{R("1/5"), R("-2/5"), R("-1/5"), R("2/5")});
  const auto three = kb_family_period4(R("3"));
  CHECK(three.k == R("3/4"));
  CHECK(three.b == R("-3/80"));
  CHECK(three.points[0] == R("1/10"));
  for (const char* bad : {"1", "-1", "0"}) CHECK_THROWS_AS(kb_family_period4(R(bad)), DomainError);
}

TEST_CASE("kb_family_period4 points form a 4-cycle in order") {
  testing::RationalSampler sample(47, 40, true);
  int checked = 0;
  while (checked < 100) {
    const Rational m = sample();
    if (m.square() == Rational(1)) continue;
    const auto f = kb_family_period4(m);
    const Map map = KBMap(f.k, f.b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(apply_affine(map, f.points[i]) == f.points[(i + 1) % 4]);
    CHECK(exact_period(map, f.points[0]) == 4u);
    ++checked;
  }
}

TEST_CASE("kb_from_fixed_and_period2") {
  const KBMap a = kb_from_fixed_and_period2(R("1"), R("2"));
  CHECK(a.k() == R("-5/3"));
  CHECK(a.b() == R("8/3"));
  CHECK(a.b() / (Rational(1) - a.k()) == R("1"));
  CHECK(a.b() / (a.k() + Rational(1)) == R("-4"));
  const KBMap b = kb_from_fixed_and_period2(R("2"), R("1"));
  CHECK(b.k() == R("5/3"));
  CHECK(b.b() == R("-8/3"));
  CHECK_THROWS_WITH_AS(kb_from_fixed_and_period2(R("1"), R("1")), "degenerate pair", DomainError);
  CHECK_THROWS_WITH_AS(kb_from_fixed_and_period2(R("3"), R("-3")), "degenerate pair", DomainError);

  testing::RationalSampler sample(53, 50, true);
  for (int i = 0; i < 100; ++i) {
    const Rational q1 = sample(), q2 = sample();
    if (q1.square() == q2.square()) continue;
    const KBMap m = kb_from_fixed_and_period2(q1, q2);
    CHECK(exact_period(m, q1) == 1u);
    CHECK(exact_period(m, q2) == 2u);
  }
}

TEST_CASE("closed-form quadratic classification agrees with the dynatomic oracle") {
  testing::RationalSampler sample(59, 50);
  for (int i = 0; i < 200; ++i) {
    const Rational c = sample();
    for (unsigned n = 1; n <= 3; ++n) CHECK(quad_periodic_points(c, n) == periodic_points_exact(QuadraticMap{c}, n));
  }
  // Members of the closed-form families, where the sets are nonempty.
  for (const char* text : {"1", "2", "1/2", "-1/2", "3/7", "-5/3"}) {
    const Rational p = R(text);
    const Rational fixed_c = p - p.square();
    CHECK(quad_periodic_points(fixed_c, 1) == periodic_points_exact(QuadraticMap{fixed_c}, 1));
    const Rational two_c = -(p.square() + p + Rational(1));
    CHECK(quad_periodic_points(two_c, 2) == periodic_points_exact(QuadraticMap{two_c}, 2));
    if (p != Rational(-1)) {
      const Rational three_c = quad_family_period3(p).c;
      CHECK(quad_periodic_points(three_c, 3).size() == 3);
    }
  }
}

TEST_CASE("closed-form KB classification agrees with the dynatomic oracle") {
  testing::RationalSampler sample(61, 30, true);
  for (int i = 0; i < 200; ++i) {
    const Rational k = sample(), b = sample();
    for (unsigned n : {1u, 2u, 4u}) CHECK(kb_periodic_points(k, b, n) == periodic_points_exact(KBMap(k, b), n));
  }
  for (const char* text : {"2", "3", "1/2", "-5/4", "7/3"}) {
    const auto f = kb_family_period4(R(text));
    CHECK(kb_periodic_points(f.k, f.b, 4) == periodic_points_exact(KBMap(f.k, f.b), 4));
    CHECK(kb_periodic_points(f.k, f.b, 4).size() == 4);
  }
}

TEST_CASE("a KB map never has both a period-4 point and a period-1 or period-2 point") {
  testing::RationalSampler sample(67, 12, true);
  for (int i = 0; i < 60; ++i) {
    const auto f = kb_family_period4(Rational(i + 2, 1 + i % 5));
    const Rational s = sample();
    const Rational b = f.b * s.square();
    CHECK(kb_periodic_points(f.k, b, 4).size() == 4);
    CHECK(kb_periodic_points(f.k, b, 1).empty());
    CHECK(kb_periodic_points(f.k, b, 2).empty());
  }
}

TEST_CASE("period3_parameters inverts the tau parametrization") {
  for (const char* text : {"1", "2", "1/2", "-1/2", "-3", "5/7"}) {
    const auto f = quad_family_period3(R(text));
    for (unsigned i = 1; i <= 3; ++i) {
      bool found = false;
      for (const auto& [tau, idx] : period3_parameters(f.x(i)))
        if (tau == f.tau && idx == i) found = true;
      CHECK(found);
    }
  }
}
