#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "ratdyn/maps.hpp"
#include "ratdyn/polynomial.hpp"

namespace ratdyn {

/// The period-3 family of z^2 + c, parametrized by tau outside {0, -1}.
/// x1 -> x2 -> x3 -> x1 under z^2 + c.
struct Period3Family {
  Rational tau;
  Rational c;
  Rational x1, x2, x3;

  const Rational& x(unsigned i) const;
};

/// The period-4 family of phi_{k,b}, m outside {0, 1, -1}.
struct KBPeriod4Family {
  Rational m;
  Rational k;
  Rational b;
  std::array<Rational, 4> points;  // in cycle order
};

/// Periodic points of one exact period, with their cycles and the witness
/// parameter of the closed-form criterion (rho, sigma, tau or m) when one exists.
struct PeriodClass {
  unsigned period = 0;
  std::set<Rational> points;
  /// Each cycle starts at its largest element.
  std::vector<std::vector<Rational>> cycles;
  std::optional<Rational> witness;
};

Period3Family quad_family_period3(const Rational& tau);
KBPeriod4Family kb_family_period4(const Rational& m);

/// n in {1, 2, 3}. n = 1, 2 use the discriminant criteria; n = 3 goes through
/// the dynatomic roots.
PeriodClass classify_quadratic(const Rational& c, unsigned n);
std::set<Rational> quad_periodic_points(const Rational& c, unsigned n);

/// n in {1, 2, 4}. n = 1, 2 use the square criteria; n = 4 takes the rational
/// roots of Psi_4 with an exact-period filter.
PeriodClass classify_kb(const Rational& k, const Rational& b, unsigned n);
std::set<Rational> kb_periodic_points(const Rational& k, const Rational& b, unsigned n);

/// The KB map with q1 fixed and q2 of exact period 2.
KBMap kb_from_fixed_and_period2(const Rational& q1, const Rational& q2);

/// Numerators of x1, x2, x3 as polynomials in tau; each x_i is N_i / (2 tau (tau + 1)).
const std::array<Polynomial, 3>& period3_numerators();

/// Every tau outside {0, -1} and index i in {1, 2, 3} with x_i(tau) = q, found
/// as the rational roots of N_i(tau) - 2 q tau (tau + 1).
std::vector<std::pair<Rational, unsigned>> period3_parameters(const Rational& q);

}  // namespace ratdyn
