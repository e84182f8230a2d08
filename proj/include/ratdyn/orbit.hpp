#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratdyn/maps.hpp"

namespace ratdyn {

inline constexpr std::size_t kDefaultMaxSteps = 64;

enum class OrbitStatus { periodic, bound_exceeded };

/// Forward orbit split into a pre-periodic tail and a cycle. When the step
/// bound is hit first, the cycle is empty and the tail holds every point whose
/// image was computed.
struct OrbitReport {
  std::vector<ProjectivePoint> tail;
  std::vector<ProjectivePoint> cycle;
  OrbitStatus status = OrbitStatus::bound_exceeded;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

/// Points above the escape height with more bits than this end an orbit early.
inline constexpr std::size_t kWanderingBits = 4096;

/// Iterates until a point repeats or max_steps images have been computed. A
/// provably wandering orbit whose heights pass kWanderingBits bits also stops,
/// with status bound_exceeded.
OrbitReport orbit(const Map& map, const ProjectivePoint& p, std::size_t max_steps = kDefaultMaxSteps);

/// Least n <= max_steps with map^n(p) = p, for purely periodic p. Empty for
/// wandering points, points with a tail, and periods above the bound.
std::optional<std::size_t> exact_period(const Map& map, const ProjectivePoint& p,
                                        std::size_t max_steps = kDefaultMaxSteps);
/// As above with a precomputed escape_height(map), for tight loops.
std::optional<std::size_t> exact_period(const Map& map, const ProjectivePoint& p, std::size_t max_steps,
                                        const Integer& escape);

/// The c for which A z^2 + B z + C is conjugate to z^2 + c via z -> A z + B/2.
Rational normalize_quadratic(const Rational& a, const Rational& b, const Rational& c);

/// phi_{k1,b1} and phi_{k2,b2} are linearly conjugate over Q.
bool kb_conjugate_equivalent(const KBMap& m1, const KBMap& m2);

}  // namespace ratdyn
