#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ratdyn/polynomial.hpp"
#include "ratdyn/projective.hpp"
#include "ratdyn/rational.hpp"

namespace ratdyn {

/// f(z) = z^2 + c.
struct QuadraticMap {
  Rational c;
  friend bool operator==(const QuadraticMap&, const QuadraticMap&) = default;
};

/// phi(z) = k z + b / z with k, b nonzero.
class KBMap {
 public:
  /// Throws DomainError when k or b is zero.
  KBMap(Rational k, Rational b);

  const Rational& k() const { return k_; }
  const Rational& b() const { return b_; }

  /// The map -phi = phi_{-k,-b}.
  KBMap negated() const { return KBMap(-k_, -b_); }

  friend bool operator==(const KBMap&, const KBMap&) = default;

 private:
  Rational k_;
  Rational b_;
};

using Map = std::variant<QuadraticMap, KBMap>;

/// Aut(phi) is exactly C2 (generated by z -> -z) unless k = -1/2.
bool aut_is_c2(const KBMap& map);

/// Homogenization [F : G] with exact coefficients: [x^2 + c y^2 : y^2] or
/// [k x^2 + b y^2 : x y].
std::pair<HomogeneousForm, HomogeneousForm> homogenization(const Map& map);

/// Same pair scaled by a common positive integer to integer coefficients.
std::pair<intpoly::Coeffs, intpoly::Coeffs> integer_homogenization(const Map& map);

ProjectivePoint apply_map(const Map& map, const ProjectivePoint& p);
Rational apply_affine(const Map& map, const Rational& z);  // throws at a pole

/// A height M such that any point of height > M has an orbit whose heights
/// strictly increase, hence is neither periodic nor preperiodic. Derived from
/// the resultant of the integer homogenization.
Integer escape_height(const Map& map);

/// "quad:c=<rat>" or "kb:k=<rat>,b=<rat>".
std::string to_string(const Map& map);
Map parse_map(std::string_view text);

bool is_quadratic(const Map& map);

}  // namespace ratdyn
