#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/classification.hpp"
#include "ratdyn/orbit.hpp"

namespace ratdyn {

/// Named free parameters of a family member, in the order they were given.
using Parameters = std::vector<std::pair<std::string, Rational>>;

/// z^2 + c and phi_{k,b} sharing a periodic point.
struct MixedFamilyTriple {
  Rational k, b, c;
  unsigned f_period = 0;
  unsigned phi_period = 0;
  Rational shared_point;
  Parameters parameters;

  QuadraticMap quadratic() const { return QuadraticMap{c}; }
  KBMap kb() const { return KBMap(k, b); }
};

/// Two KB maps sharing a periodic point.
struct KBPairQuadruple {
  Rational k1, b1, k2, b2;
  unsigned period1 = 0, period2 = 0;
  Rational shared_point;
  Parameters parameters;

  KBMap first() const { return KBMap(k1, b1); }
  KBMap second() const { return KBMap(k2, b2); }
};

struct SharedMapEntry {
  Rational c;
  unsigned period = 0;
  std::vector<Rational> cycle;  // starts at the query point
};

/// p is a fixed point of z^2 + c and has exact period n in {1, 2, 4} under
/// phi_{k,b}. param is q for n = 1, 2 and m for n = 4.
MixedFamilyTriple mixed_family_fixed(const Rational& p, unsigned n, const Rational& param);
/// As above with p of exact period 2 under z^2 + c.
MixedFamilyTriple mixed_family_period2(const Rational& p, unsigned n, const Rational& param);
/// x_i(tau) of exact period 3 under z^2 + c_tau and exact period n under phi_{k,b}.
MixedFamilyTriple mixed_family_period3(const Rational& tau, unsigned i, unsigned n, const Rational& param);

/// Orb(p) under map1 intersected with Orb(p) under map2; p must be periodic for both.
std::set<ProjectivePoint> orbit_intersection(const Map& map1, const Map& map2, const ProjectivePoint& p);

/// Mixed triples whose orbits through the shared point meet in exactly two points.
MixedFamilyTriple intersection2_family_mixed(const Rational& p, int sign);
MixedFamilyTriple intersection2_family_period3(const Rational& tau, unsigned i, unsigned j, int sign);

/// KB rows with p periodic: (1 - s, s p^2) fixes p, (s - 1, -s p^2) swaps
/// +-p, and the period-4 row has cycle (p, p/s, -p, -p/s).
KBMap kb_fixed_row(const Rational& p, const Rational& s);
KBMap kb_period2_row(const Rational& p, const Rational& s);
KBMap kb_period4_row(const Rational& p, const Rational& s);

/// Rows 1..6 pair (fixed, fixed), (2, 2), (4, 4), (fixed, 2), (fixed, 4), (2, 4).
KBPairQuadruple kb_pair_family(unsigned row, const Rational& p, const Rational& s1, const Rational& s2);
/// The three pairings whose orbits through p meet in exactly {p, -p}.
KBPairQuadruple intersection2_family_kbkb(unsigned which, const Rational& p, const Rational& s1, const Rational& s2);

/// One-parameter family of KB maps with both query points periodic.
struct FamilyDescriptor {
  unsigned period = 0;
  std::string k_formula;
  std::string b_formula;
  std::string domain;
  Rational p;
  std::function<KBMap(const Rational& s)> sample;
};

/// A KB map with the exact periods of both query points.
struct SimultaneousMap {
  KBMap map;
  unsigned period_a = 0;
  unsigned period_b = 0;
};

struct SimultaneousResult {
  bool infinite = false;
  std::vector<FamilyDescriptor> families;  // when a^2 = b^2
  std::vector<SimultaneousMap> maps;       // otherwise, complete and verified
};

SimultaneousResult simultaneous_point_maps(const Rational& a, const Rational& b);

/// Every c with q periodic of exact period <= 3 under z^2 + c. At most three.
std::vector<SharedMapEntry> shared_quadratic_maps(const Rational& q);

}  // namespace ratdyn
