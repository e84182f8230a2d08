#pragma once

#include <cstddef>
#include <set>
#include <utility>

#include "ratdyn/maps.hpp"
#include "ratdyn/orbit.hpp"
#include "ratdyn/polynomial.hpp"

namespace ratdyn {

/// Moebius function; n >= 1.
int moebius(unsigned n);

/// phi^n = [F_n : G_n], homogeneous of degree 2^n.
struct IteratePair {
  HomogeneousForm f;
  HomogeneousForm g;
  unsigned n = 0;
};

/// (F_1, G_1) is the homogenization; (F_{n+1}, G_{n+1}) = (F_1(F_n, G_n), G_1(F_n, G_n)).
IteratePair iterate_homogeneous(const Map& map, unsigned n);

/// Phi_n(z): y F_n - x G_n at y = 1, exact coefficients.
Polynomial period_polynomial(const Map& map, unsigned n);

/// Phi*_n(z) = prod_{d | n} Phi_d(z)^mu(n/d) in canonical form (primitive
/// integer coefficients, positive leading coefficient).
///
/// Computed from the integer-scaled iterates; each Phi_d is made primitive,
/// so by Gauss's lemma the quotient of the mu = +1 product by the mu = -1
/// product is again an integer polynomial and the division is exact over Z.
/// A nonzero remainder throws std::logic_error("dynatomic division failed").
Polynomial dynatomic_polynomial(const Map& map, unsigned n);
intpoly::Coeffs dynatomic_integer(const Map& map, unsigned n);

/// sum_{d | n} mu(n/d) (2^d + 1), the degree of the homogeneous Phi*_n.
std::size_t dynatomic_degree(unsigned n);

/// Phi*_n(x, y) as a binary form of degree dynatomic_degree(n); the powers of
/// y account for infinity.
HomogeneousForm dynatomic_form(const Map& map, unsigned n);

/// The factors of Phi*_4 for phi_{k,b}, with the closed-form coefficients.
struct Psi4Lambda4 {
  Polynomial psi;
  Polynomial lambda;
};
Psi4Lambda4 psi4_lambda4(const Rational& k, const Rational& b);

/// Rational roots of Phi*_n with exact period n.
std::set<Rational> periodic_points_exact(const Map& map, unsigned n, std::size_t max_steps = kDefaultMaxSteps);

/// Same, restricted to points of height <= max_height. Uses the bounded
/// rational-root search, which scales to large n.
std::set<Rational> periodic_points_exact_bounded(const Map& map, unsigned n, const Integer& max_height);

}  // namespace ratdyn
