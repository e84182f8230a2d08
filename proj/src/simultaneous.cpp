#include "ratdyn/simultaneous.hpp"

#include <algorithm>
#include <string>

namespace ratdyn {

namespace {

[[noreturn]] void excluded(const std::string& name, const Rational& value) {
  throw DomainError("parameter excluded: " + name + "=" + value.to_string());
}

void check_period(unsigned n) {
  if (n != 1 && n != 2 && n != 4) throw DomainError("unsupported period: n=" + std::to_string(n));
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) excluded("sign", Rational(sign));
}

bool is_unit(const Rational& s) { return s.square() == Rational(1); }

// Shared KB part of the three mixed families; q doubles as m for n = 4.
void fill_kb(MixedFamilyTriple& t, const Rational& p, unsigned n, const Rational& param, bool q_rows_by_s) {
  if (n == 4) {
    if (param.is_zero() || is_unit(param)) excluded("m", param);
    const KBMap kb = kb_period4_row(p, param);
    t.k = kb.k();
    t.b = kb.b();
    t.parameters.emplace_back("m", param);
    return;
  }
  t.parameters.emplace_back("q", param);
  if (q_rows_by_s) {
    // The period-3 rows are written directly in the row parameter.
    const KBMap kb = n == 1 ? kb_fixed_row(p, param) : kb_period2_row(p, param);
    t.k = kb.k();
    t.b = kb.b();
    return;
  }
  if (param.is_zero() || (n == 1 ? param == -p : param == p)) excluded("q", param);
  t.k = (n == 1 ? param + p : param - p) / p;
  t.b = -param * p;
}

std::vector<ProjectivePoint> cycle_of(const Map& map, const ProjectivePoint& p) {
  if (!exact_period(map, p)) return {};
  const auto report = orbit(map, p);
  if (report.status != OrbitStatus::periodic || !report.tail.empty()) return {};
  return report.cycle;
}

}  // namespace

KBMap kb_fixed_row(const Rational& p, const Rational& s) {
  if (p.is_zero()) excluded("p", p);
  if (s.is_zero() || s == Rational(1)) excluded("s", s);
  return KBMap(Rational(1) - s, s * p.square());
}

KBMap kb_period2_row(const Rational& p, const Rational& s) {
  if (p.is_zero()) excluded("p", p);
  if (s.is_zero() || s == Rational(1)) excluded("s", s);
  return KBMap(s - Rational(1), -s * p.square());
}

KBMap kb_period4_row(const Rational& p, const Rational& s) {
  if (p.is_zero()) excluded("p", p);
  if (s.is_zero() || is_unit(s)) excluded("s", s);
  const Rational s2 = s.square();
  return KBMap(Rational(2) * s / (s2 - Rational(1)), -p.square() * (s2 + Rational(1)) / (s * (s2 - Rational(1))));
}

MixedFamilyTriple mixed_family_fixed(const Rational& p, unsigned n, const Rational& param) {
  if (p.is_zero()) excluded("p", p);
  check_period(n);
  MixedFamilyTriple t;
  t.parameters.emplace_back("p", p);
  fill_kb(t, p, n, param, false);
  t.c = p - p.square();
  t.f_period = 1;
  t.phi_period = n;
  t.shared_point = p;
  return t;
}

MixedFamilyTriple mixed_family_period2(const Rational& p, unsigned n, const Rational& param) {
  if (p.is_zero() || p == Rational(-1, 2)) excluded("p", p);
  check_period(n);
  MixedFamilyTriple t;
  t.parameters.emplace_back("p", p);
  fill_kb(t, p, n, param, false);
  t.c = -(p.square() + p + Rational(1));
  t.f_period = 2;
  t.phi_period = n;
  t.shared_point = p;
  return t;
}

MixedFamilyTriple mixed_family_period3(const Rational& tau, unsigned i, unsigned n, const Rational& param) {
  const Period3Family family = quad_family_period3(tau);
  const Rational x = family.x(i);
  check_period(n);
  if (n != 4 && (param.is_zero() || param == Rational(1))) excluded("q", param);
  MixedFamilyTriple t;
  t.parameters.emplace_back("tau", tau);
  t.parameters.emplace_back("i", Rational(static_cast<long>(i)));
  fill_kb(t, x, n, param, true);
  t.c = family.c;
  t.f_period = 3;
  t.phi_period = n;
  t.shared_point = x;
  return t;
}

std::set<ProjectivePoint> orbit_intersection(const Map& map1, const Map& map2, const ProjectivePoint& p) {
  const auto c1 = cycle_of(map1, p);
  const auto c2 = cycle_of(map2, p);
  if (c1.empty() || c2.empty()) throw DomainError("not a common periodic point");
  const std::set<ProjectivePoint> s1(c1.begin(), c1.end());
  std::set<ProjectivePoint> out;
  for (const auto& q : c2)
    if (s1.contains(q)) out.insert(q);
  return out;
}

MixedFamilyTriple intersection2_family_mixed(const Rational& p, int sign) {
  if (p.is_zero() || p == Rational(-1, 2) || p == Rational(-1)) excluded("p", p);
  check_sign(sign);
  const Rational s(sign);
  const Rational p1 = p + Rational(1);
  const Rational d = Rational(2) * p + Rational(1);
  MixedFamilyTriple t;
  t.k = s * Rational(2) * p * p1 / d;
  t.b = -s * p * p1 * (p.square() + p1.square()) / d;
  t.c = -(p.square() + p + Rational(1));
  t.f_period = 2;
  t.phi_period = 4;
  t.shared_point = p;
  t.parameters = {{"p", p}, {"sign", s}};
  return t;
}

MixedFamilyTriple intersection2_family_period3(const Rational& tau, unsigned i, unsigned j, int sign) {
  check_sign(sign);
  if (i >= j) throw DomainError("parameter excluded: i<j required, got i=" + std::to_string(i) + ", j=" + std::to_string(j));
  const Period3Family family = quad_family_period3(tau);
  const Rational xi = family.x(i), xj = family.x(j);
  const Rational m = Rational(sign) * xi / xj;
  if (m.is_zero() || is_unit(m)) throw DomainError("degenerate m_tau=" + m.to_string());
  const KBMap kb = kb_period4_row(xi, m);
  MixedFamilyTriple t;
  t.k = kb.k();
  t.b = kb.b();
  t.c = family.c;
  t.f_period = 3;
  t.phi_period = 4;
  t.shared_point = xi;
  t.parameters = {{"tau", tau},
                  {"i", Rational(static_cast<long>(i))},
                  {"j", Rational(static_cast<long>(j))},
                  {"sign", Rational(sign)},
                  {"m", m}};
  return t;
}

KBPairQuadruple kb_pair_family(unsigned row, const Rational& p, const Rational& s1, const Rational& s2) {
  static constexpr unsigned kPeriods[6][2] = {{1, 1}, {2, 2}, {4, 4}, {1, 2}, {1, 4}, {2, 4}};
  if (row < 1 || row > 6) throw DomainError("parameter excluded: row=" + std::to_string(row));
  if (p.is_zero()) excluded("p", p);
  auto make = [&](unsigned period, const Rational& s, const char* name) {
    const bool unit_excluded = period == 4;
    if (s.is_zero() || s == Rational(1) || (unit_excluded && s == Rational(-1))) excluded(name, s);
    switch (period) {
      case 1: return kb_fixed_row(p, s);
      case 2: return kb_period2_row(p, s);
      default: return kb_period4_row(p, s);
    }
  };
  const KBMap first = make(kPeriods[row - 1][0], s1, "s1");
  const KBMap second = make(kPeriods[row - 1][1], s2, "s2");
  KBPairQuadruple out;
  out.k1 = first.k();
  out.b1 = first.b();
  out.k2 = second.k();
  out.b2 = second.b();
  out.period1 = kPeriods[row - 1][0];
  out.period2 = kPeriods[row - 1][1];
  out.shared_point = p;
  out.parameters = {{"row", Rational(static_cast<long>(row))}, {"p", p}, {"s1", s1}, {"s2", s2}};
  return out;
}

KBPairQuadruple intersection2_family_kbkb(unsigned which, const Rational& p, const Rational& s1, const Rational& s2) {
  static constexpr unsigned kRows[3] = {2, 6, 3};
  if (which < 1 || which > 3) throw DomainError("parameter excluded: case=" + std::to_string(which));
  if (which == 3 && s1.square() == s2.square()) throw DomainError("maps coincide up to sign");
  KBPairQuadruple out = kb_pair_family(kRows[which - 1], p, s1, s2);
  out.parameters.front() = {"case", Rational(static_cast<long>(which))};
  return out;
}

SimultaneousResult simultaneous_point_maps(const Rational& a, const Rational& b) {
  if (a.is_zero()) excluded("a", a);
  if (b.is_zero()) excluded("b", b);
  SimultaneousResult out;
  if (a.square() == b.square()) {
    out.infinite = true;
    out.families.push_back({1, "1 - s", "s*p^2", "s not in {0, 1}", a, [a](const Rational& s) { return kb_fixed_row(a, s); }});
    out.families.push_back(
        {2, "s - 1", "-s*p^2", "s not in {0, 1}", a, [a](const Rational& s) { return kb_period2_row(a, s); }});
    out.families.push_back({4, "2*s/(s^2 - 1)", "-p^2*(s^2 + 1)/(s*(s^2 - 1))", "s not in {0, 1, -1}", a,
                            [a](const Rational& s) { return kb_period4_row(a, s); }});
    return out;
  }
  std::vector<KBMap> candidates{kb_from_fixed_and_period2(a, b), kb_from_fixed_and_period2(b, a),
                                kb_period4_row(a, -a / b), kb_period4_row(a, a / b)};
  for (const KBMap& kb : candidates) {
    const Integer escape = escape_height(kb);
    const auto pa = exact_period(kb, a, kDefaultMaxSteps, escape);
    const auto pb = exact_period(kb, b, kDefaultMaxSteps, escape);
    if (!pa || !pb) continue;
    const bool seen = std::any_of(out.maps.begin(), out.maps.end(), [&](const SimultaneousMap& e) {
      return e.map.k() == kb.k() && e.map.b() == kb.b();
    });
    if (!seen) out.maps.push_back({kb, static_cast<unsigned>(*pa), static_cast<unsigned>(*pb)});
  }
  return out;
}

std::vector<SharedMapEntry> shared_quadratic_maps(const Rational& q) {
  std::vector<Rational> cs{q - q.square()};
  std::vector<unsigned> periods{1};
  if (q != Rational(-1, 2)) {
    cs.push_back(-(q.square() + q + Rational(1)));
    periods.push_back(2);
  }
  for (const auto& [tau, i] : period3_parameters(q)) {
    cs.push_back(quad_family_period3(tau).c);
    periods.push_back(3);
  }
  std::vector<SharedMapEntry> out;
  for (std::size_t idx = 0; idx < cs.size(); ++idx) {
    const Rational& c = cs[idx];
    if (std::any_of(out.begin(), out.end(), [&](const SharedMapEntry& e) { return e.c == c; })) continue;
    const Map map = QuadraticMap{c};
    if (exact_period(map, q) != periods[idx]) continue;
    SharedMapEntry entry{c, periods[idx], {q}};
    for (unsigned step = 1; step < periods[idx]; ++step) entry.cycle.push_back(apply_affine(map, entry.cycle.back()));
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace ratdyn
