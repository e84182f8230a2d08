#include "ratdyn/rational.hpp"

#include <numeric>

namespace ratdyn {

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("division by zero");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  r.value_ = std::move(q);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  // num^e / den^e is already reduced.
  mpq_class q;
  q.get_num() = n;
  q.get_den() = d;
  return from_mpq(std::move(q));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("division by zero");
  return from_mpq(1 / value_);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() { return ParseError("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num_text) || !digits(den_text)) throw bad();
  Integer n(std::string(num_text), 10);
  Integer d(std::string(den_text), 10);
  if (negative) n = -n;
  return normalize_rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational normalize_rational(const Integer& n, const Integer& d) { return Rational(n, d); }

Integer height(const Rational& r) {
  Integer a = ::abs(r.num_ref());
  return a > r.den_ref() ? a : Integer(r.den_ref());
}

std::optional<Integer> integer_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

std::optional<Rational> rational_square_root(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = integer_square_root(r.num_ref());
  if (!n) return std::nullopt;
  auto d = integer_square_root(r.den_ref());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

bool is_rational_square(const Rational& r) { return rational_square_root(r).has_value(); }

RationalEnumerator::RationalEnumerator(std::uint64_t max_height) : max_height_(max_height) {
  if (max_height_ >= 1) advance_height();
}

void RationalEnumerator::advance_height() {
  current_.clear();
  pos_ = 0;
  const auto h = static_cast<std::int64_t>(h_);
  // Numerator -h, denominators ascending.
  for (std::int64_t d = 1; d <= h; ++d)
    if (std::gcd(h, d) == 1) current_.emplace_back(-h, d);
  // |numerator| < h with denominator h.
  for (std::int64_t n = -h + 1; n <= h - 1; ++n)
    if (std::gcd(n < 0 ? -n : n, h) == 1) current_.emplace_back(n, h);
  for (std::int64_t d = 1; d <= h; ++d)
    if (std::gcd(h, d) == 1) current_.emplace_back(h, d);
}

std::optional<Rational> RationalEnumerator::next() {
  while (h_ <= max_height_) {
    if (pos_ < current_.size()) {
      const auto [n, d] = current_[pos_++];
      return Rational(static_cast<long>(n), static_cast<long>(d));
    }
    ++h_;
    if (h_ <= max_height_) advance_height();
  }
  return std::nullopt;
}

std::vector<Rational> enumerate_rationals(std::uint64_t max_height) {
  std::vector<Rational> out;
  RationalEnumerator e(max_height);
  while (auto r = e.next()) out.push_back(std::move(*r));
  return out;
}

std::vector<Rational> enumerate_nonzero_rationals(std::uint64_t max_height) {
  std::vector<Rational> out;
  RationalEnumerator e(max_height);
  while (auto r = e.next())
    if (!r->is_zero()) out.push_back(std::move(*r));
  return out;
}

std::size_t count_rationals(std::uint64_t max_height) {
  // 0 plus +-r/s for coprime 1 <= r, s <= H, which is 2 * sum(phi) - 1 pairs.
  if (max_height == 0) return 1;
  std::vector<std::uint64_t> phi(max_height + 1);
  std::iota(phi.begin(), phi.end(), std::uint64_t{0});
  for (std::uint64_t p = 2; p <= max_height; ++p)
    if (phi[p] == p)
      for (std::uint64_t k = p; k <= max_height; k += p) phi[k] -= phi[k] / p;
  std::uint64_t sum = 0;
  for (std::uint64_t n = 1; n <= max_height; ++n) sum += phi[n];
  return 1 + 2 * (2 * sum - 1);
}

std::size_t RationalHash::operator()(const Rational& r) const noexcept {
  const std::size_t a = mpz_get_ui(r.num_ref().get_mpz_t()) ^ (r.sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t b = mpz_get_ui(r.den_ref().get_mpz_t());
  return a * 1000003u ^ b;
}

}  // namespace ratdyn
