#pragma once

#include <set>

#include "ratdyn/polynomial.hpp"

namespace ratdyn {

/// Every rational root of p, multiplicity discarded. Throws DomainError for
/// the zero polynomial.
///
/// Works on the primitive square-free part: real roots are isolated by
/// Descartes-rule bisection until each interval is narrower than 1/L^2, where
/// L is the leading coefficient. A rational root r/s has s | L, and two such
/// fractions are at least 1/L^2 apart, so the simplest fraction in the
/// interval is the only candidate.
std::set<Rational> rational_roots(const Polynomial& p);

/// Rational roots of height <= max_height, via the rational root theorem
/// restricted to divisor pairs (r, s) with r | a0, s | an and r, s <= bound.
std::set<Rational> rational_roots_bounded(const Polynomial& p, const Integer& max_height);
std::set<Rational> rational_roots_bounded(const intpoly::Coeffs& p, const Integer& max_height);

/// The fraction with least denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace ratdyn
