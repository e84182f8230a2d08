#pragma once

// Exact rational numbers over GMP, plus the height and square utilities
// used by every scan.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ratdyn/errors.hpp"

namespace ratdyn {

using Integer = mpz_class;

/// Canonical fraction: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError("division by zero") when d == 0.
  Rational(const Integer& n, const Integer& d);
  Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

  static Rational from_mpq(mpq_class q);

  const mpq_class& mpq() const { return value_; }
  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpz_class& num_ref() const { return value_.get_num(); }
  const mpz_class& den_ref() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return from_mpq(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return from_mpq(::abs(value_)); }
  Rational square() const { return *this * *this; }
  Rational pow(unsigned e) const;
  Rational reciprocal() const;

  /// "n" or "n/d".
  std::string to_string() const;
  /// Accepts "n" or "n/d" with an optional leading minus and no whitespace.
  static Rational parse(std::string_view text);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Reduced representative of n/d with the sign on the numerator.
Rational normalize_rational(const Integer& n, const Integer& d);

/// Naive height max(|num|, den).
Integer height(const Rational& r);

/// Nonnegative s with s^2 = r, if r is the square of a rational.
std::optional<Rational> rational_square_root(const Rational& r);
bool is_rational_square(const Rational& r);

/// Exact integer square root if n is a perfect square.
std::optional<Integer> integer_square_root(const Integer& n);

/// Every rational of height <= H exactly once, ordered by (height, numerator,
/// denominator).
class RationalEnumerator {
 public:
  explicit RationalEnumerator(std::uint64_t max_height);

  /// Next value, or nullopt once the sequence is exhausted.
  std::optional<Rational> next();

 private:
  void advance_height();

  std::uint64_t max_height_;
  std::uint64_t h_ = 1;
  // Candidate list for the current height, as (num, den) in order.
  std::vector<std::pair<std::int64_t, std::int64_t>> current_;
  std::size_t pos_ = 0;
};

std::vector<Rational> enumerate_rationals(std::uint64_t max_height);

/// Same sequence restricted to nonzero values.
std::vector<Rational> enumerate_nonzero_rationals(std::uint64_t max_height);

std::size_t count_rationals(std::uint64_t max_height);

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept;
};

}  // namespace ratdyn
