#include "ratdyn/roots.hpp"

#include <cstdint>
#include <numeric>

namespace ratdyn {

namespace {

using intpoly::Coeffs;

int sign_variations(const Coeffs& a) {
  int count = 0;
  int last = 0;
  for (const auto& c : a) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// q(x + 1), in place.
void taylor_shift_one(Coeffs& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
}

// Descartes bound for the number of roots of q in (0, 1).
int roots_in_unit_interval_bound(const Coeffs& q) {
  Coeffs r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

// 2^deg q(x / 2).
Coeffs halve(const Coeffs& q) {
  Coeffs r = q;
  const std::size_t n = r.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(r[i].get_mpz_t(), r[i].get_mpz_t(), n - i);
  return r;
}

struct Isolator {
  Integer scale;     // roots of the original polynomial are scale * x
  Integer max_den;   // target width is scale / 2^k < 1 / max_den^2
  std::set<Rational>* out;
  const Coeffs* original;

  bool narrow_enough(unsigned long k) const {
    // scale * max_den^2 < 2^k
    Integer lhs = scale * max_den * max_den;
    return mpz_sizeinbase(lhs.get_mpz_t(), 2) < k;
  }

  Rational at(const Integer& c, unsigned long k) const {
    Integer d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k);
    return Rational(scale * c, d);
  }

  void check_candidate(const Rational& r) const {
    if (intpoly::evaluate_homogeneous(*original, r.num_ref(), r.den_ref(), original->size() - 1) == 0)
      out->insert(r);
  }

  // q describes the original on (c / 2^k, (c + 1) / 2^k) in x.
  void run(Coeffs q, const Integer& c, unsigned long k) {
    if (!q.empty() && q.front() == 0) {
      out->insert(at(c, k));
      q.erase(q.begin());
    }
    if (q.size() <= 1) return;
    const int v = roots_in_unit_interval_bound(q);
    if (v == 0) return;
    if (v == 1 && narrow_enough(k)) {
      check_candidate(simplest_rational_between(at(c, k), at(c + 1, k)));
      return;
    }
    Coeffs left = intpoly::primitive(halve(q));
    Coeffs right = left;
    taylor_shift_one(right);
    run(std::move(left), 2 * c, k + 1);
    run(std::move(right), 2 * c + 1, k + 1);
  }
};

// Positive rational roots of a square-free primitive polynomial with a
// nonzero constant term.
void positive_roots(const Coeffs& p, std::set<Rational>& out) {
  const std::size_t n = p.size() - 1;
  // Cauchy bound: every root has |z| < 1 + max |a_i / a_n| <= 2^e.
  Integer ratio = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), Integer(::abs(p[i])).get_mpz_t(), Integer(::abs(p[n])).get_mpz_t());
    if (q > ratio) ratio = q;
  }
  const unsigned long e = mpz_sizeinbase(Integer(ratio + 1).get_mpz_t(), 2);
  Coeffs scaled = p;
  for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(scaled[i].get_mpz_t(), scaled[i].get_mpz_t(), e * i);
  Isolator iso;
  mpz_mul_2exp(iso.scale.get_mpz_t(), Integer(1).get_mpz_t(), e);
  iso.max_den = ::abs(p[n]);
  iso.out = &out;
  iso.original = &p;
  iso.run(intpoly::primitive(std::move(scaled)), 0, 0);
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);
  Integer ceil_lo;
  mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.num_ref().get_mpz_t(), lo.den_ref().get_mpz_t());
  if (Rational(ceil_lo) <= hi) return Rational(ceil_lo);
  Integer floor_lo;
  mpz_fdiv_q(floor_lo.get_mpz_t(), lo.num_ref().get_mpz_t(), lo.den_ref().get_mpz_t());
  const Rational f(floor_lo);
  return f + simplest_rational_between((hi - f).reciprocal(), (lo - f).reciprocal()).reciprocal();
}

std::set<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has all roots");
  std::set<Rational> out;
  Coeffs a = intpoly::from_rational(p);
  if (a.front() == 0) {
    out.insert(Rational(0));
    std::size_t shift = 0;
    while (a[shift] == 0) ++shift;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (a.size() <= 1) return out;
  // Square-free part.
  const Polynomial pa = Polynomial::from_integers(a);
  const Polynomial g = gcd(pa, pa.derivative());
  Coeffs sf = g.degree() > 0 ? intpoly::from_rational(divide(pa, g).quotient) : a;

  positive_roots(sf, out);
  Coeffs neg = sf;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  std::set<Rational> negative;
  positive_roots(intpoly::primitive(std::move(neg)), negative);
  for (const auto& r : negative) out.insert(-r);
  return out;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const Wide t = static_cast<Wide>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(t & kPrime) + static_cast<std::uint64_t>(t >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

// Divisors of n in [1, bound].
std::vector<unsigned long> small_divisors(const Integer& n, unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= bound; ++d)
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) out.push_back(d);
  return out;
}

}  // namespace

std::set<Rational> rational_roots_bounded(const intpoly::Coeffs& poly, const Integer& max_height) {
  Coeffs a = intpoly::primitive(poly);
  if (a.empty()) throw DomainError("zero polynomial has all roots");
  std::set<Rational> out;
  if (a.front() == 0) {
    out.insert(Rational(0));
    std::size_t shift = 0;
    while (a[shift] == 0) ++shift;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (a.size() <= 1 || max_height < 1) return out;
  const unsigned long bound = max_height.fits_ulong_p() ? max_height.get_ui() : ~0UL;
  if (bound > (1UL << 24)) throw DomainError("height bound too large for divisor search");
  const auto nums = small_divisors(a.front(), bound);
  const auto dens = small_divisors(a.back(), bound);

  // Residues mod a Mersenne prime screen candidates before exact evaluation.
  Integer prime;
  mpz_ui_pow_ui(prime.get_mpz_t(), 2, 61);
  prime -= 1;
  std::vector<std::uint64_t> res(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a[i].get_mpz_t(), prime.get_mpz_t());
    res[i] = mpz_get_ui(r.get_mpz_t());
  }
  const std::size_t deg = a.size() - 1;
  auto screen = [&](std::uint64_t r, std::uint64_t s) {
    // sum a_i r^i s^(deg - i) mod p, Horner in r.
    std::uint64_t acc = 0, spow = 1;
    for (std::size_t i = deg + 1; i-- > 0;) {
      acc = mulmod(acc, r);
      acc += mulmod(res[i], spow);
      if (acc >= kPrime) acc -= kPrime;
      spow = mulmod(spow, s);
    }
    return acc == 0;
  };
  for (unsigned long s : dens) {
    for (unsigned long r : nums) {
      if (std::gcd(r, s) != 1) continue;
      for (int sign : {1, -1}) {
        const std::uint64_t rm = sign > 0 ? r : kPrime - r;
        if (!screen(rm, s)) continue;
        const Integer num = sign * static_cast<long>(r);
        if (intpoly::evaluate_homogeneous(a, num, Integer(s), deg) == 0) out.insert(Rational(num, Integer(s)));
      }
    }
  }
  return out;
}

std::set<Rational> rational_roots_bounded(const Polynomial& p, const Integer& max_height) {
  if (p.is_zero()) throw DomainError("zero polynomial has all roots");
  return rational_roots_bounded(intpoly::from_rational(p), max_height);
}

}  // namespace ratdyn
