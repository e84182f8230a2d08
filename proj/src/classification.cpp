#include "ratdyn/classification.hpp"

#include <string>

#include "ratdyn/dynatomic.hpp"
#include "ratdyn/roots.hpp"

namespace ratdyn {

namespace {

[[noreturn]] void excluded(const char* name, const Rational& value) {
  throw DomainError(std::string("parameter excluded: ") + name + "=" + value.to_string());
}

[[noreturn]] void unsupported(unsigned n) {
  throw DomainError("unsupported period: n=" + std::to_string(n));
}

// Splits a set of exact-period-n points into cycles, largest element first.
std::vector<std::vector<Rational>> split_cycles(const Map& map, const std::set<Rational>& points) {
  std::vector<std::vector<Rational>> cycles;
  std::set<Rational> left = points;
  while (!left.empty()) {
    std::vector<Rational> cycle{*left.rbegin()};
    left.erase(std::prev(left.end()));
    for (;;) {
      const Rational next = apply_affine(map, cycle.back());
      if (next == cycle.front()) break;
      left.erase(next);
      cycle.push_back(next);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

PeriodClass from_points(const Map& map, unsigned n, std::set<Rational> points) {
  PeriodClass out;
  out.period = n;
  out.cycles = split_cycles(map, points);
  out.points = std::move(points);
  return out;
}

}  // namespace

const Rational& Period3Family::x(unsigned i) const {
  switch (i) {
    case 1: return x1;
    case 2: return x2;
    case 3: return x3;
    default: throw DomainError("parameter excluded: i=" + std::to_string(i));
  }
}

const std::array<Polynomial, 3>& period3_numerators() {
  static const std::array<Polynomial, 3> numerators{
      Polynomial({Rational(1), Rational(1), Rational(2), Rational(1)}),
      Polynomial({Rational(-1), Rational(-1), Rational(0), Rational(1)}),
      Polynomial({Rational(-1), Rational(-3), Rational(-2), Rational(-1)}),
  };
  return numerators;
}

Period3Family quad_family_period3(const Rational& tau) {
  if (tau.is_zero() || tau == Rational(-1)) excluded("tau", tau);
  const Rational t2 = tau.square();
  const Rational denom = Rational(2) * tau * (tau + Rational(1));
  Period3Family f;
  f.tau = tau;
  const auto& num = period3_numerators();
  f.x1 = num[0].evaluate(tau) / denom;
  f.x2 = num[1].evaluate(tau) / denom;
  f.x3 = num[2].evaluate(tau) / denom;
  const Polynomial c_num({Rational(1), Rational(4), Rational(9), Rational(8), Rational(4), Rational(2), Rational(1)});
  f.c = -c_num.evaluate(tau) / (Rational(4) * t2 * (tau + Rational(1)).square());
  return f;
}

KBPeriod4Family kb_family_period4(const Rational& m) {
  const Rational m2 = m.square();
  if (m.is_zero() || m2 == Rational(1)) excluded("m", m);
  KBPeriod4Family f;
  f.m = m;
  f.k = Rational(2) * m / (m2 - Rational(1));
  f.b = -m / (m2.square() - Rational(1));
  const Rational x1 = Rational(1) / (m2 + Rational(1));
  f.points = {x1, -m * x1, -x1, m * x1};
  return f;
}

PeriodClass classify_quadratic(const Rational& c, unsigned n) {
  const Map map = QuadraticMap{c};
  switch (n) {
    case 1: {
      // z^2 - z + c; rho^2 = 1/4 - c.
      PeriodClass out;
      out.period = 1;
      if (auto rho = rational_square_root(Rational(1, 4) - c)) {
        out.witness = *rho;
        out.points = {Rational(1, 2) + *rho, Rational(1, 2) - *rho};
        out.cycles = split_cycles(map, out.points);
      }
      return out;
    }
    case 2: {
      // z^2 + z + c + 1; sigma^2 = -3/4 - c, sigma != 0.
      PeriodClass out;
      out.period = 2;
      auto sigma = rational_square_root(Rational(-3, 4) - c);
      if (sigma && !sigma->is_zero()) {
        out.witness = *sigma;
        out.points = {Rational(-1, 2) + *sigma, Rational(-1, 2) - *sigma};
        out.cycles = split_cycles(map, out.points);
      }
      return out;
    }
    case 3: {
      PeriodClass out = from_points(map, 3, periodic_points_exact(map, 3));
      for (const auto& cycle : out.cycles) {
        std::optional<Rational> fallback;
        for (const auto& [tau, i] : period3_parameters(cycle.front())) {
          if (quad_family_period3(tau).c != c) continue;
          if (i == 1) {
            out.witness = tau;
            break;
          }
          if (!fallback) fallback = tau;
        }
        if (!out.witness) out.witness = fallback;
        if (out.witness) break;
      }
      return out;
    }
    default: unsupported(n);
  }
}

std::set<Rational> quad_periodic_points(const Rational& c, unsigned n) { return classify_quadratic(c, n).points; }

PeriodClass classify_kb(const Rational& k, const Rational& b, unsigned n) {
  const KBMap kb(k, b);
  const Map map = kb;
  PeriodClass out;
  out.period = n;
  switch (n) {
    case 1:
      if (k != Rational(1)) {
        if (auto m = rational_square_root(b / (Rational(1) - k))) {
          out.witness = *m;
          out.points = {*m, -*m};
        }
      }
      break;
    case 2:
      if (k != Rational(-1)) {
        if (auto m = rational_square_root(-b / (k + Rational(1)))) {
          out.witness = *m;
          out.points = {*m, -*m};
        }
      }
      break;
    case 4: {
      const Integer escape = escape_height(map);
      for (const auto& z : rational_roots(psi4_lambda4(k, b).psi))
        if (exact_period(map, z, 4, escape) == 4u) out.points.insert(z);
      break;
    }
    default: unsupported(n);
  }
  out.cycles = split_cycles(map, out.points);
  if (n == 4 && !out.cycles.empty()) {
    // The cycle is (p, p/m, -p, -p/m).
    const auto& cycle = out.cycles.front();
    out.witness = cycle[0] / cycle[1];
  }
  return out;
}

std::set<Rational> kb_periodic_points(const Rational& k, const Rational& b, unsigned n) {
  return classify_kb(k, b, n).points;
}

KBMap kb_from_fixed_and_period2(const Rational& q1, const Rational& q2) {
  if (q1.is_zero()) excluded("q1", q1);
  if (q2.is_zero()) excluded("q2", q2);
  const Rational s1 = q1.square(), s2 = q2.square();
  if (s1 == s2) throw DomainError("degenerate pair");
  const Rational d = s2 - s1;
  return KBMap((-s2 - s1) / d, Rational(2) * s1 * s2 / d);
}

std::vector<std::pair<Rational, unsigned>> period3_parameters(const Rational& q) {
  // 2 tau (tau + 1) = 2 tau^2 + 2 tau
  const Polynomial denom({Rational(0), Rational(2), Rational(2)});
  std::vector<std::pair<Rational, unsigned>> out;
  const auto& num = period3_numerators();
  for (unsigned i = 0; i < 3; ++i) {
    for (const auto& tau : rational_roots(num[i] - q * denom)) {
      if (tau.is_zero() || tau == Rational(-1)) continue;
      out.emplace_back(tau, i + 1);
    }
  }
  return out;
}

}  // namespace ratdyn
