#include "ratdyn/orbit.hpp"

#include <map>
#include <set>

namespace ratdyn {

OrbitReport orbit(const Map& map, const ProjectivePoint& p, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("max_steps must be positive");
  std::vector<ProjectivePoint> seq{p};
  std::map<ProjectivePoint, std::size_t> index{{p, 0}};
  const Integer escape = escape_height(map);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    // Above the escape height heights grow strictly, so nothing repeats; stop
    // before the doubling sizes get out of hand.
    const auto& last = seq.back();
    if (last.height() > escape && mpz_sizeinbase(last.height().get_mpz_t(), 2) > kWanderingBits) break;
    ProjectivePoint next = apply_map(map, seq.back());
    if (auto it = index.find(next); it != index.end()) {
      const auto split = static_cast<std::ptrdiff_t>(it->second);
      OrbitReport report;
      report.tail.assign(seq.begin(), seq.begin() + split);
      report.cycle.assign(seq.begin() + split, seq.end());
      report.status = OrbitStatus::periodic;
      return report;
    }
    if (step == max_steps) break;
    index.emplace(next, seq.size());
    seq.push_back(std::move(next));
  }
  OrbitReport report;
  report.tail = std::move(seq);
  return report;
}

std::optional<std::size_t> exact_period(const Map& map, const ProjectivePoint& p, std::size_t max_steps) {
  return exact_period(map, p, max_steps, escape_height(map));
}

std::optional<std::size_t> exact_period(const Map& map, const ProjectivePoint& p, std::size_t max_steps,
                                        const Integer& escape) {
  if (max_steps == 0) throw DomainError("max_steps must be positive");
  if (p.height() > escape) return std::nullopt;
  std::set<ProjectivePoint> seen{p};
  ProjectivePoint q = p;
  for (std::size_t n = 1; n <= max_steps; ++n) {
    q = apply_map(map, q);
    if (q == p) return n;
    if (q.height() > escape) return std::nullopt;
    // A repeat that is not p means p sits on a tail.
    if (!seen.insert(q).second) return std::nullopt;
  }
  return std::nullopt;
}

Rational normalize_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw DomainError("not quadratic");
  return a * c + b / Rational(2) - b.square() / Rational(4);
}

bool kb_conjugate_equivalent(const KBMap& m1, const KBMap& m2) {
  return m1.k() == m2.k() && is_rational_square(m1.b() / m2.b());
}

}  // namespace ratdyn
