#include "ratdyn/projective.hpp"

namespace ratdyn {

ProjectivePoint::ProjectivePoint(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw DomainError("(0, 0) is not a point of P^1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(x_.get_mpz_t(), x_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(y_.get_mpz_t(), y_.get_mpz_t(), g.get_mpz_t());
  }
  if (y_ < 0 || (y_ == 0 && x_ < 0)) {
    x_ = -x_;
    y_ = -y_;
  }
}

ProjectivePoint::ProjectivePoint(const Rational& r) : x_(r.num()), y_(r.den()) {}

std::optional<Rational> ProjectivePoint::affine() const {
  if (is_infinity()) return std::nullopt;
  return Rational(x_, y_);
}

Integer ProjectivePoint::height() const {
  Integer a = ::abs(x_);
  return a > y_ ? a : y_;
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  // Affine points by value, infinity last.
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
    return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.affine() <=> *b.affine();
}

std::string ProjectivePoint::to_string() const {
  return is_infinity() ? std::string("inf") : affine()->to_string();
}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ProjectivePoint(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) { return os << p.to_string(); }

}  // namespace ratdyn
