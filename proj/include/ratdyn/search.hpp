#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/maps.hpp"

namespace ratdyn {

enum class ScanKind { quadratic_conjecture, kb_conjecture, intersection_bound };
std::string to_string(ScanKind kind);

struct ScanHit {
  std::string map;
  Rational point;
  /// Exact period, for the conjecture scans.
  unsigned period = 0;
  /// Intersection scans only: the second map, the shared orbit points, and
  /// how the maps relate ("negated" when phi2 = -phi1, else "distinct").
  std::string map2;
  std::vector<ProjectivePoint> intersection;
  std::string relation;

  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

struct ScanReport {
  ScanKind kind = ScanKind::quadratic_conjecture;
  std::vector<std::pair<std::string, std::string>> parameter_box;
  std::vector<ScanHit> hits;  // enumeration order
  std::uint64_t scanned_count = 0;
  /// Pairs of maps compared (intersection scans).
  std::optional<std::uint64_t> pairs_checked;
  /// Wall-clock seconds; only filled when ScanOptions::timing is set, so that
  /// reports stay byte-identical across runs by default.
  std::optional<double> elapsed_seconds;
};

struct ScanOptions {
  unsigned workers = 1;
  bool timing = false;
};

/// c of height <= h_c, points of height <= h_p, periods in 1..8.
ScanReport scan_quadratic_conjecture(std::uint64_t h_c, std::uint64_t h_p, const std::set<unsigned>& periods,
                                     const ScanOptions& options = {});
ScanReport scan_kb_conjecture(std::uint64_t h_k, std::uint64_t h_b, std::uint64_t h_p,
                              const std::set<unsigned>& periods, const ScanOptions& options = {});
/// Quadratic and KB maps with parameters of height <= h; records every pair
/// (quad/KB or KB/KB) whose orbits through a common periodic point of height
/// <= h_p meet in three or more points.
ScanReport scan_intersection_bound(std::uint64_t h, std::uint64_t h_p, const ScanOptions& options = {});

/// y^2 = a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0.
struct QuarticCurve {
  Rational a4, a3, a2, a1, a0;

  QuarticCurve(Rational a4_, Rational a3_, Rational a2_, Rational a1_, Rational a0_);
  Rational evaluate(const Rational& t) const;
  std::string to_string() const;
};

struct QuarticPoint {
  Rational tau;
  Rational y;
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

struct QuarticSearchResult {
  std::vector<QuarticPoint> affine;  // sorted by (tau, y)
  bool points_at_infinity = false;   // a4 is a rational square
  std::uint64_t scanned_count = 0;
};

/// Affine rational points with height(tau) <= h.
QuarticSearchResult quartic_rational_points(const QuarticCurve& curve, std::uint64_t h,
                                            const ScanOptions& options = {});

}  // namespace ratdyn
