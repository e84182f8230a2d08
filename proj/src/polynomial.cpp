#include "ratdyn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ratdyn {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(std::span<const Integer> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (const auto& c : coefficients) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::evaluate(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

std::vector<Integer> Polynomial::canonical_integers() const { return intpoly::from_rational(*this); }

Polynomial Polynomial::canonical() const {
  const auto ints = canonical_integers();
  return from_integers(ints);
}

bool Polynomial::proportional_to(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return false;
  return canonical() == other.canonical();
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv_lead = b.leading().reciprocal();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] * inv_lead;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coefficients()[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = divide(u, v).remainder;
    // Keep coefficient growth in check.
    u = std::move(v);
    v = r.is_zero() ? r : r.canonical();
  }
  if (u.is_zero()) return u;
  return u.leading().reciprocal() * u;
}

HomogeneousForm::HomogeneousForm(std::size_t degree, std::vector<Rational> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != degree_ + 1) throw DomainError("homogeneous form needs degree+1 coefficients");
}

HomogeneousForm HomogeneousForm::zero(std::size_t degree) {
  return HomogeneousForm(degree, std::vector<Rational>(degree + 1));
}

HomogeneousForm HomogeneousForm::homogenize(const Polynomial& p, std::size_t degree) {
  if (p.degree() > static_cast<int>(degree)) throw DomainError("homogenization degree below polynomial degree");
  std::vector<Rational> v(degree + 1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) v[i] = p.coefficients()[i];
  return HomogeneousForm(degree, std::move(v));
}

bool HomogeneousForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Polynomial HomogeneousForm::dehomogenize() const { return Polynomial(coeffs_); }

Rational HomogeneousForm::evaluate(const Rational& x, const Rational& y) const {
  Rational acc;
  Rational ypow(1);
  // sum c_i x^i y^(d-i), Horner in x with y powers accumulated.
  for (std::size_t i = degree_ + 1; i-- > 0;) {
    acc = acc * x + coeffs_[i] * ypow;
    ypow *= y;
  }
  return acc;
}

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.degree_ != b.degree_) throw DomainError("adding forms of different degree");
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return HomogeneousForm(a.degree_, std::move(v));
}

HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) { return a + Rational(-1) * b; }

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  std::vector<Rational> v(a.degree_ + b.degree_ + 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return HomogeneousForm(a.degree_ + b.degree_, std::move(v));
}

HomogeneousForm operator*(const Rational& s, const HomogeneousForm& f) {
  std::vector<Rational> v = f.coeffs_;
  for (auto& c : v) c *= s;
  return HomogeneousForm(f.degree_, std::move(v));
}

HomogeneousForm HomogeneousForm::times_x() const {
  std::vector<Rational> v(degree_ + 2);
  for (std::size_t i = 0; i <= degree_; ++i) v[i + 1] = coeffs_[i];
  return HomogeneousForm(degree_ + 1, std::move(v));
}

HomogeneousForm HomogeneousForm::times_y() const {
  std::vector<Rational> v = coeffs_;
  v.emplace_back(0);
  return HomogeneousForm(degree_ + 1, std::move(v));
}

HomogeneousForm HomogeneousForm::substitute(const HomogeneousForm& p, const HomogeneousForm& q) const {
  if (p.degree_ != q.degree_) throw DomainError("substituted forms must share a degree");
  // Powers p^i and q^j for 0 <= i, j <= degree.
  std::vector<HomogeneousForm> ppow{HomogeneousForm(0, {Rational(1)})};
  std::vector<HomogeneousForm> qpow{HomogeneousForm(0, {Rational(1)})};
  for (std::size_t i = 1; i <= degree_; ++i) {
    ppow.push_back(ppow.back() * p);
    qpow.push_back(qpow.back() * q);
  }
  HomogeneousForm out = zero(degree_ * p.degree_);
  for (std::size_t i = 0; i <= degree_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out = out + coeffs_[i] * (ppow[i] * qpow[degree_ - i]);
  }
  return out;
}

std::string HomogeneousForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = degree_ + 1; i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const std::size_t j = degree_ - i;
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << mono;
    }
  }
  return first ? std::string("0") : os.str();
}

namespace intpoly {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.size()) v[i] += a[i];
    if (i < b.size()) v[i] += b[i];
  }
  trim(v);
  return v;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.size()) v[i] += a[i];
    if (i < b.size()) v[i] -= b[i];
  }
  trim(v);
  return v;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(v);
  return v;
}

Coeffs scale(const Coeffs& a, const Integer& s) {
  Coeffs v = a;
  for (auto& c : v) c *= s;
  trim(v);
  return v;
}

Integer content(const Coeffs& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Coeffs primitive(Coeffs a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

std::optional<Coeffs> exact_divide(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  if (a.empty()) return Coeffs{};
  if (a.size() < b.size()) return std::nullopt;
  Coeffs rem = a;
  const std::size_t db = b.size() - 1;
  Coeffs quo(a.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (mpz_divisible_p(rem[i].get_mpz_t(), b.back().get_mpz_t()) == 0) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    quo[i - db] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  trim(quo);
  return quo;
}

Integer evaluate_homogeneous(const Coeffs& a, const Integer& x, const Integer& y, std::size_t degree) {
  Integer acc = 0;
  Integer ypow = 1;
  for (std::size_t i = degree + 1; i-- > 0;) {
    acc *= x;
    if (i < a.size() && a[i] != 0) acc += a[i] * ypow;
    ypow *= y;
  }
  return acc;
}

Coeffs from_rational(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  Coeffs v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer n = l / c.den_ref();
    v.push_back(n * c.num_ref());
  }
  return primitive(std::move(v));
}

}  // namespace intpoly

}  // namespace ratdyn
