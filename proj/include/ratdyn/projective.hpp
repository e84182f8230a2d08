#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ratdyn/rational.hpp"

namespace ratdyn {

/// A point of P^1(Q) as a coprime integer pair [x : y]. Canonical sign is
/// y > 0, or y = 0 and x = 1, so infinity is exactly (1, 0) and the affine
/// rational n/d embeds as (n, d).
class ProjectivePoint {
 public:
  /// Throws DomainError for (0, 0).
  ProjectivePoint(Integer x, Integer y);
  ProjectivePoint(const Rational& r);  // NOLINT(google-explicit-constructor)

  static ProjectivePoint infinity() { return ProjectivePoint(Integer(1), Integer(0)); }

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }

  bool is_infinity() const { return y_ == 0; }
  /// The affine coordinate x/y; nullopt at infinity.
  std::optional<Rational> affine() const;

  /// Max(|x|, |y|); agrees with height() on affine points.
  Integer height() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

  /// Rational syntax, or "inf".
  std::string to_string() const;
  static ProjectivePoint parse(std::string_view text);

 private:
  Integer x_;
  Integer y_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

}  // namespace ratdyn
