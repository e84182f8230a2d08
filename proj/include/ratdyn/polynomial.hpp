#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/rational.hpp"

namespace ratdyn {

/// Dense univariate polynomial over Q. coefficients()[i] multiplies z^i and
/// the last entry is nonzero; the zero polynomial has no entries.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// Integer coefficients, index = degree.
  static Polynomial from_integers(std::span<const Integer> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of z^i, zero past the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& z) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Primitive integer coefficients with positive leading coefficient.
  Polynomial canonical() const;
  /// Integer coefficient vector of canonical().
  std::vector<Integer> canonical_integers() const;
  /// a = s * b for some nonzero rational s (both nonzero).
  bool proportional_to(const Polynomial& other) const;

  /// Descending degree, e.g. "2*z^4 + 4*z^2 + 1"; "0" for zero.
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws DomainError on a zero divisor.
DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Binary form of fixed degree d over Q; coefficients()[i] multiplies
/// x^i * y^(d-i). Zero forms keep their degree.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  HomogeneousForm(std::size_t degree, std::vector<Rational> coefficients);
  static HomogeneousForm zero(std::size_t degree);
  /// Homogenize p to the given degree (must be >= deg p).
  static HomogeneousForm homogenize(const Polynomial& p, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t x_power) const { return coeffs_.at(x_power); }
  bool is_zero() const;

  /// Set y = 1.
  Polynomial dehomogenize() const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b);
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b);
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
  friend HomogeneousForm operator*(const Rational& s, const HomogeneousForm& f);
  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

  /// Multiply by x (raises degree by one).
  HomogeneousForm times_x() const;
  /// Multiply by y (raises degree by one).
  HomogeneousForm times_y() const;

  /// This form with x := p, y := q (p and q of equal degree).
  HomogeneousForm substitute(const HomogeneousForm& p, const HomogeneousForm& q) const;

  std::string to_string() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

// Integer coefficient vectors, index = power of the first variable. These back
// the heavy symbolic iteration; the zero polynomial is the empty vector.
namespace intpoly {

using Coeffs = std::vector<Integer>;

void trim(Coeffs& a);
Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs mul(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, const Integer& s);
Integer content(const Coeffs& a);
/// Divide out the content and make the leading coefficient positive.
Coeffs primitive(Coeffs a);
/// Quotient a / b when b divides a over Z with zero remainder, else nullopt.
std::optional<Coeffs> exact_divide(const Coeffs& a, const Coeffs& b);
/// Homogeneous evaluation sum a_i x^i y^(degree-i).
Integer evaluate_homogeneous(const Coeffs& a, const Integer& x, const Integer& y, std::size_t degree);
/// Clear denominators of a rational polynomial and make primitive.
Coeffs from_rational(const Polynomial& p);

}  // namespace intpoly

}  // namespace ratdyn
