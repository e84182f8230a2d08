// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ratdyn/classification.hpp"
#include "ratdyn/dynatomic.hpp"
#include "ratdyn/search.hpp"
#include "ratdyn/simultaneous.hpp"
#include "test_support.hpp"

using namespace ratdyn;
using testing::R;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void operator()(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::string(Checker&)> body;  // returns a short summary
};

std::optional<std::size_t> period(const Map& map, const Rational& p) { return exact_period(map, p); }

bool cycle_is(const Map& map, const Rational& start, const std::vector<Rational>& expected) {
  const auto report = orbit(map, start);
  if (report.status != OrbitStatus::periodic || !report.tail.empty()) return false;
  std::vector<Rational> got;
  for (const auto& p : report.cycle) got.push_back(*p.affine());
  return got == expected;
}

std::vector<Rational> seq(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(R(t));
  return out;
}

std::string criterion1(Checker& check) {
  // Mixed examples: the quadratic map, the KB map, the shared point and its periods.
  struct Mixed {
    MixedFamilyTriple t;
    const char *k, *b, *c, *p;
    unsigned f_period, phi_period;
  };
  const std::vector<Mixed> mixed{
      {mixed_family_fixed(R("3/2"), 1, R("1")), "5/3", "-3/2", "-3/4", "3/2", 1, 1},
      {mixed_family_fixed(R("3"), 2, R("1/2")), "-5/6", "-3/2", "-6", "3", 1, 2},
      {mixed_family_fixed(R("2"), 4, R("2")), "4/3", "-10/3", "-2", "2", 1, 4},
      {mixed_family_period2(R("1/2"), 1, R("1")), "3", "-1/2", "-7/4", "1/2", 2, 1},
      {mixed_family_period2(R("1"), 2, R("-1")), "-2", "1", "-3", "1", 2, 2},
      {mixed_family_period2(R("-1"), 4, R("3")), "3/4", "-5/12", "-1", "-1", 2, 4},
      {mixed_family_period3(R("1"), 2, 1, R("16")), "-15", "1", "-29/16", "-1/4", 3, 1},
      {mixed_family_period3(R("1/2"), 1, 2, R("9")), "8", "-289/16", "-421/144", "17/12", 3, 2},
      {mixed_family_period3(R("-1/2"), 3, 4, R("2")), "4/3", "-5/96", "-29/16", "-1/4", 3, 4},
  };
  for (const auto& m : mixed) {
    const std::string tag = "mixed (" + std::string(m.k) + ", " + m.b + ", " + m.c + ")";
    check(m.t.k == R(m.k) && m.t.b == R(m.b) && m.t.c == R(m.c), tag + " parameters");
    check(m.t.shared_point == R(m.p), tag + " shared point");
    check(period(m.t.quadratic(), R(m.p)) == m.f_period, tag + " quadratic period");
    check(period(m.t.kb(), R(m.p)) == m.phi_period, tag + " kb period");
  }
  const Map f13 = QuadraticMap{R("-13")}, phi13 = KBMap(R("24/7"), R("-300/7"));
  check(cycle_is(f13, R("3"), seq({"3", "-4"})), "z^2 - 13 cycle (3, -4)");
  check(cycle_is(phi13, R("3"), seq({"3", "-4", "-3", "4"})), "(24/7, -300/7) cycle (3, -4, -3, 4)");
  check(orbit_intersection(f13, phi13, R("3")) == std::set<ProjectivePoint>{R("3"), R("-4")}, "intersection {3, -4}");
  const auto i2 = intersection2_family_mixed(R("3"), 1);
  check(i2.k == R("24/7") && i2.b == R("-300/7") && i2.c == R("-13"), "intersection family at p = 3");

  const Map f301 = QuadraticMap{R("-301/144")}, phi301 = KBMap(R("-115/252"), R("31855/36288"));
  check(cycle_is(f301, R("19/12"), seq({"19/12", "5/12", "-23/12"})), "z^2 - 301/144 cycle");
  check(cycle_is(phi301, R("5/12"), seq({"5/12", "23/12", "-5/12", "-23/12"})), "(-115/252, 31855/36288) cycle");
  check(orbit_intersection(f301, phi301, R("5/12")) == std::set<ProjectivePoint>{R("5/12"), R("-23/12")},
        "intersection {5/12, -23/12}");
  const auto p3 = intersection2_family_period3(R("2"), 2, 3, -1);
  check(p3.k == R("-115/252") && p3.b == R("31855/36288") && p3.c == R("-301/144"), "period-3 intersection family");

  const auto pair = kb_pair_family(3, R("3/5"), R("2"), R("1/3"));
  check(pair.k1 == R("4/3") && pair.b1 == R("-3/10") && pair.k2 == R("-3/4") && pair.b2 == R("27/20"), "KB pair row 3");
  check(cycle_is(pair.first(), R("3/5"), seq({"3/5", "3/10", "-3/5", "-3/10"})), "first KB cycle");
  check(cycle_is(pair.second(), R("3/5"), seq({"3/5", "9/5", "-3/5", "-9/5"})), "second KB cycle");
  check(orbit_intersection(pair.first(), pair.second(), R("3/5")) == std::set<ProjectivePoint>{R("3/5"), R("-3/5")},
        "intersection {3/5, -3/5}");

  const auto shared = shared_quadratic_maps(R("101/40"));
  check(shared.size() == 3, "q = 101/40 has three maps");
  if (shared.size() == 3) {
    check(shared[0].c == R("-6161/1600") && shared[0].cycle == seq({"101/40"}), "f1 and its cycle");
    check(shared[1].c == R("-15841/1600") && shared[1].cycle == seq({"101/40", "-141/40"}), "f2 and its cycle");
    check(shared[2].c == R("-7841/1600") && shared[2].cycle == seq({"101/40", "59/40", "-109/40"}), "f3 and its cycle");
  }
  return std::to_string(check.count()) + " checks";
}

std::string criterion2(Checker& check) {
  testing::RationalSampler cs(1001, 50), kbs(1002, 30, true);
  for (int i = 0; i < 200; ++i) {
    const Rational c = cs();
    for (unsigned n = 1; n <= 3; ++n)
      check(quad_periodic_points(c, n) == periodic_points_exact(QuadraticMap{c}, n),
            "c = " + c.to_string() + ", n = " + std::to_string(n));
  }
  for (int i = 0; i < 200; ++i) {
    const Rational k = kbs(), b = kbs();
    for (unsigned n : {1u, 2u, 4u})
      check(kb_periodic_points(k, b, n) == periodic_points_exact(KBMap(k, b), n),
            "(k, b) = (" + k.to_string() + ", " + b.to_string() + "), n = " + std::to_string(n));
  }
  return "200 c x 3 periods, 200 (k, b) x 3 periods, " + std::to_string(check.failures().size()) + " discrepancies";
}

std::string criterion3(Checker& check) {
  testing::RationalSampler sample(1003, 30, true);
  for (int i = 0; i < 100; ++i) {
    const Rational k = sample(), b = sample();
    const auto f = psi4_lambda4(k, b);
    const Polynomial phi4 = dynatomic_polynomial(KBMap(k, b), 4);
    check(!phi4.is_zero() && phi4.proportional_to(f.psi * f.lambda),
          "(k, b) = (" + k.to_string() + ", " + b.to_string() + ")");
  }
  return "100 (k, b) samples";
}

std::string criterion4(Checker& check) {
  const auto three = scan_kb_conjecture(10, 10, 100, {3});
  check(three.hits.empty(), "period-3 hits in the box");
  // The m = 2 member (4/3, -2/15) has b of height 15; its conjugate under
  // z -> 5z, (4/3, -10/3), is in the box and must be found with its whole cycle.
  const auto family = kb_family_period4(R("2"));
  const auto four = scan_kb_conjecture(10, 10, 100, {4});
  std::set<Rational> found;
  for (const auto& h : four.hits) {
    const auto map = std::get<KBMap>(parse_map(h.map));
    if (map.k() == family.k && kb_conjugate_equivalent(map, KBMap(family.k, family.b)) && map.b() == R("-10/3"))
      found.insert(h.point);
  }
  std::set<Rational> scaled;
  for (const auto& p : family.points) scaled.insert(p * Rational(5));
  check(found == scaled, "m = 2 control (4/3, -10/3) with cycle 5 * (1/5, -2/5, -1/5, 2/5)");
  // The literal member, in a box wide enough to hold it.
  const auto wide = scan_kb_conjecture(4, 15, 10, {4});
  std::set<Rational> literal;
  for (const auto& h : wide.hits)
    if (h.map == "kb:k=4/3,b=-2/15") literal.insert(h.point);
  check(literal == std::set<Rational>(family.points.begin(), family.points.end()),
        "literal member (4/3, -2/15) found with H_b = 15");
  return std::to_string(three.scanned_count) + " maps, " + std::to_string(three.hits.size()) + " period-3 hits, " +
         std::to_string(four.hits.size()) + " period-4 hits";
}

std::string criterion5(Checker& check) {
  const auto quad = scan_quadratic_conjecture(20, 100, {4, 5, 6});
  const auto kb = scan_kb_conjecture(10, 10, 100, {5, 6});
  check(quad.hits.empty(), "quadratic periods 4, 5, 6");
  check(kb.hits.empty(), "KB periods 5, 6");
  return std::to_string(quad.scanned_count) + " quadratic maps, " + std::to_string(kb.scanned_count) + " KB maps, " +
         std::to_string(quad.hits.size() + kb.hits.size()) + " hits";
}

std::string criterion6(Checker& check) {
  const auto report = scan_intersection_bound(8, 50);
  std::size_t size4 = 0;
  for (const auto& h : report.hits) {
    const Map a = parse_map(h.map), b = parse_map(h.map2);
    check(!is_quadratic(a) && !is_quadratic(b), "quadratic/KB pair " + h.map + " " + h.map2);
    if (h.intersection.size() == 4 && !is_quadratic(a) && !is_quadratic(b)) {
      ++size4;
      const auto& ka = std::get<KBMap>(a);
      const auto& kb = std::get<KBMap>(b);
      check((ka.k() == kb.k() && ka.b() == kb.b()) || (ka.k() == -kb.k() && ka.b() == -kb.b()),
            "size-4 pair not +-: " + h.map + " " + h.map2);
    }
  }
  return std::to_string(report.scanned_count) + " maps, " + std::to_string(*report.pairs_checked) + " pairs, " +
         std::to_string(report.hits.size()) + " hits of size >= 3 (" + std::to_string(size4) + " of size 4)";
}

// z^2 + c with q = a/d periodic forces den(c) = d^2, so scanning m/d^2 over
// |m| <= 10^4 covers every candidate c of that height.
std::set<Rational> c_scan(const Rational& q) {
  const Integer d2 = q.den() * q.den();
  std::set<Rational> out;
  for (long m = -10000; m <= 10000; ++m) {
    const Rational c(Integer(m), d2);
    if (height(c) > 10000) continue;
    Rational z = q;
    for (int n = 1; n <= 3; ++n) {
      z = z * z + c;
      if (z == q) {
        out.insert(c);
        break;
      }
    }
  }
  return out;
}

std::string criterion7(Checker& check) {
  testing::RationalSampler sample(1007, 50);
  std::size_t entries = 0;
  for (int i = 0; i < 100; ++i) {
    const Rational q = sample();
    const auto shared = shared_quadratic_maps(q);
    entries += shared.size();
    check(shared.size() <= 3, "more than three maps for q = " + q.to_string());
    std::set<Rational> returned;
    for (const auto& e : shared) {
      returned.insert(e.c);
      // Direct verification of the printed cycle.
      Rational z = q;
      bool ok = e.cycle.size() == e.period && e.cycle.front() == q;
      for (std::size_t s = 0; ok && s < e.period; ++s) {
        ok = z == e.cycle[s];
        z = z * z + e.c;
      }
      check(ok && z == q, "cycle of c = " + e.c.to_string() + " for q = " + q.to_string());
    }
    check(returned == c_scan(q), "c-scan disagrees for q = " + q.to_string());
  }
  check(shared_quadratic_maps(R("101/40")).size() == 3, "q = 101/40 returns three maps");
  return "100 q, " + std::to_string(entries) + " entries, c-scan over 2*10^4 candidates each";
}

std::string criterion8(Checker& check) {
  const std::vector<QuarticPoint> expected{{R("-1"), R("-1")}, {R("-1"), R("1")}, {R("0"), R("-1")}, {R("0"), R("1")}};
  std::ostringstream summary;
  for (const auto& curve : {QuarticCurve(1, 6, 7, 2, 1), QuarticCurve(1, -2, -5, -2, 1), QuarticCurve(1, 2, 7, 6, 1)}) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = quartic_rational_points(curve, 10000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(result.affine == expected, curve.to_string() + ": affine points");
    check(result.points_at_infinity, curve.to_string() + ": points at infinity");
    check(secs <= 120, curve.to_string() + ": over 2 min");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.1fs", summary.str().empty() ? "" : ", ", secs);
    summary << buf;
  }
  return "3 curves at H = 10^4 (" + summary.str() + ")";
}

std::string criterion9(Checker& check) {
  const auto finite = simultaneous_point_maps(R("1"), R("2"));
  std::set<std::pair<Rational, Rational>> got;
  for (const auto& m : finite.maps) {
    got.emplace(m.map.k(), m.map.b());
    check(period(m.map, R("1")) == m.period_a && period(m.map, R("2")) == m.period_b,
          "periods of " + to_string(Map{m.map}));
  }
  check(!finite.infinite, "(1, 2) reported infinite");
  check(got == std::set<std::pair<Rational, Rational>>{{R("-5/3"), R("8/3")},
                                                       {R("5/3"), R("-8/3")},
                                                       {R("4/3"), R("-10/3")},
                                                       {R("-4/3"), R("10/3")}},
        "the four maps for (1, 2)");

  testing::RationalSampler sample(1009, 40, true);
  std::size_t members = 0;
  for (const char* a_text : {"3/5", "1", "-7/2"}) {
    const Rational a = R(a_text);
    const auto inf = simultaneous_point_maps(a, -a);
    check(inf.infinite && inf.families.size() == 3, "three families for a = " + a.to_string());
    for (const auto& f : inf.families) {
      int taken = 0;
      while (taken < 20) {
        const Rational s = sample();
        if (s == Rational(1) || (f.period == 4 && s == Rational(-1))) continue;
        const KBMap m = f.sample(s);
        check(period(m, a) == f.period && period(m, -a) == f.period,
              "member s = " + s.to_string() + " of period-" + std::to_string(f.period) + " family, a = " + a.to_string());
        ++taken;
        ++members;
      }
    }
  }
  return "4 maps for (1, 2); " + std::to_string(members) + " family members verified";
}

std::string criterion10(Checker& check) {
  const std::vector<std::vector<std::string>> scans{
      {"scan", "--kind", "quadratic", "--height-c", "20", "--height-p", "100", "--periods", "3,4,5,6"},
      {"scan", "--kind", "kb", "--height-k", "10", "--height-b", "10", "--height-p", "100", "--periods", "3,4"},
      {"scan", "--kind", "intersection", "--height", "8", "--height-p", "50"},
      {"quartic", "--curve", "1", "--height", "1000"},
  };
  for (const auto& base : scans)
    for (const char* format : {"json", "csv"}) {
      auto one = base, eight = base;
      one.insert(one.end(), {"--workers", "1", "--format", format});
      eight.insert(eight.end(), {"--workers", "8", "--format", format});
      const auto a = cli::run(one), b = cli::run(eight);
      check(a.exit_code == 0 && b.exit_code == 0 && a.output == b.output, base[0] + " " + base[2] + " " + format);
      // And the same invocation repeated.
      check(cli::run(one).output == a.output, "repeat " + base[2] + " " + format);
    }
  return "4 scans x 2 formats, 1 vs 8 workers";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked-example regression suite", 1, criterion1},
      {2, "dynatomic oracle equivalence", 60, criterion2},
      {3, "Phi*_4 = Psi_4 * Lambda_4 up to a scalar", 30, criterion3},
      {4, "no KB period 3, period-4 control found", 300, criterion4},
      {5, "desk-scale conjecture scans", 600, criterion5},
      {6, "intersection bound", 600, criterion6},
      {7, "at most three shared quadratic maps", 600, criterion7},
      {8, "quartic curve points", 360, criterion8},
      {9, "simultaneous periodic points", 10, criterion9},
      {10, "determinism across worker counts", 600, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    std::string summary;
    try {
      summary = c.body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) check(false, "over the time budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_seconds);
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << ": " << summary << " ["
              << timing << "]\n";
    for (std::size_t i = 0; i < check.failures().size() && i < 10; ++i)
      std::cout << "      " << check.failures()[i] << "\n";
    std::cout.flush();
    failed += !check.ok();
  }
  std::cout << (failed ? std::to_string(failed) + " of 10 criteria failed" : std::string("all 10 criteria passed"))
            << "\n";
  return failed ? 1 : 0;
}
