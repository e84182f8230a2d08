#include "ratdyn/dynatomic.hpp"

#include <stdexcept>
#include <vector>

#include "ratdyn/roots.hpp"

namespace ratdyn {

int moebius(unsigned n) {
  if (n == 0) throw DomainError("moebius needs n >= 1");
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

IteratePair iterate_homogeneous(const Map& map, unsigned n) {
  if (n == 0) throw DomainError("iterate needs n >= 1");
  const auto [f1, g1] = homogenization(map);
  IteratePair it{f1, g1, 1};
  while (it.n < n) {
    HomogeneousForm f = f1.substitute(it.f, it.g);
    HomogeneousForm g = g1.substitute(it.f, it.g);
    it = {std::move(f), std::move(g), it.n + 1};
  }
  return it;
}

Polynomial period_polynomial(const Map& map, unsigned n) {
  const IteratePair it = iterate_homogeneous(map, n);
  return (it.f.times_y() - it.g.times_x()).dehomogenize();
}

namespace {

using intpoly::Coeffs;

// F1(P, Q) for a degree-2 form F1 given by its coefficients.
Coeffs substitute2(const Coeffs& f1, const Coeffs& pp, const Coeffs& pq, const Coeffs& qq) {
  Coeffs out;
  auto coeff = [&](std::size_t i) { return i < f1.size() ? f1[i] : Integer(0); };
  if (coeff(2) != 0) out = intpoly::add(out, intpoly::scale(pp, coeff(2)));
  if (coeff(1) != 0) out = intpoly::add(out, intpoly::scale(pq, coeff(1)));
  if (coeff(0) != 0) out = intpoly::add(out, intpoly::scale(qq, coeff(0)));
  return out;
}

// Primitive integer Phi_1, ..., Phi_n (index 0 unused), dehomogenized.
std::vector<Coeffs> integer_period_polynomials(const Map& map, unsigned n) {
  const auto [f1, g1] = integer_homogenization(map);
  std::vector<Coeffs> phis(n + 1);
  Coeffs f = f1, g = g1;
  for (unsigned j = 1; j <= n; ++j) {
    if (j > 1) {
      const Coeffs pp = intpoly::mul(f, f);
      const Coeffs pq = intpoly::mul(f, g);
      const Coeffs qq = intpoly::mul(g, g);
      Coeffs nf = substitute2(f1, pp, pq, qq);
      Coeffs ng = substitute2(g1, pp, pq, qq);
      // A common scalar does not change the iterate.
      Integer c = intpoly::content(nf);
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), intpoly::content(ng).get_mpz_t());
      if (c > 1) {
        for (auto& v : nf) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        for (auto& v : ng) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      }
      f = std::move(nf);
      g = std::move(ng);
    }
    // y F - x G at y = 1.
    Coeffs xg(g.size() + 1);
    for (std::size_t i = 0; i < g.size(); ++i) xg[i + 1] = g[i];
    phis[j] = intpoly::primitive(intpoly::sub(f, xg));
  }
  return phis;
}

}  // namespace

Coeffs dynatomic_integer(const Map& map, unsigned n) {
  if (n == 0) throw DomainError("dynatomic polynomial needs n >= 1");
  const auto phis = integer_period_polynomials(map, n);
  Coeffs num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 1) num = intpoly::mul(num, phis[d]);
    if (mu == -1) den = intpoly::mul(den, phis[d]);
  }
  auto quotient = intpoly::exact_divide(num, den);
  if (!quotient) throw std::logic_error("dynatomic division failed");
  return intpoly::primitive(std::move(*quotient));
}

Polynomial dynatomic_polynomial(const Map& map, unsigned n) {
  const Coeffs c = dynatomic_integer(map, n);
  return Polynomial::from_integers(c);
}

std::size_t dynatomic_degree(unsigned n) {
  long total = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) total += moebius(n / d) * ((1L << d) + 1);
  return static_cast<std::size_t>(total);
}

HomogeneousForm dynatomic_form(const Map& map, unsigned n) {
  return HomogeneousForm::homogenize(dynatomic_polynomial(map, n), dynatomic_degree(n));
}

Psi4Lambda4 psi4_lambda4(const Rational& k, const Rational& b) {
  if (k.is_zero() || b.is_zero()) throw DomainError("psi4/lambda4 need k, b nonzero");
  const Rational k2 = k.pow(2), k3 = k.pow(3), k4 = k.pow(4), k5 = k.pow(5), k6 = k.pow(6), k7 = k.pow(7),
                 k8 = k.pow(8), k9 = k.pow(9);
  const Rational b2 = b.pow(2), b3 = b.pow(3), b4 = b.pow(4);
  const Rational two(2), three(3), four(4), six(6);
  Polynomial psi({b2 * k, 0, two * b + two * b * k2, 0, k + k3});
  Polynomial lambda({
      b4 * k5,
      0,
      b3 + b3 * k2 + two * b3 * k4 + four * b3 * k6,
      0,
      b2 * k + three * b2 * k3 + four * b2 * k5 + six * b2 * k7,
      0,
      b * k4 + two * b * k6 + four * b * k8,
      0,
      k9,
  });
  return {std::move(psi), std::move(lambda)};
}

std::set<Rational> periodic_points_exact(const Map& map, unsigned n, std::size_t max_steps) {
  std::set<Rational> out;
  for (const auto& r : rational_roots(dynatomic_polynomial(map, n)))
    if (exact_period(map, ProjectivePoint(r), max_steps) == n) out.insert(r);
  return out;
}

std::set<Rational> periodic_points_exact_bounded(const Map& map, unsigned n, const Integer& max_height) {
  std::set<Rational> out;
  for (const auto& r : rational_roots_bounded(dynatomic_integer(map, n), max_height))
    if (exact_period(map, ProjectivePoint(r), std::max<std::size_t>(n, 1)) == n) out.insert(r);
  return out;
}

}  // namespace ratdyn
