#include "ratdyn/maps.hpp"

#include <array>

namespace ratdyn {

KBMap::KBMap(Rational k, Rational b) : k_(std::move(k)), b_(std::move(b)) {
  if (k_.is_zero()) throw DomainError("parameter excluded: k=0");
  if (b_.is_zero()) throw DomainError("parameter excluded: b=0");
}

bool aut_is_c2(const KBMap& map) { return map.k() != Rational(-1, 2); }

bool is_quadratic(const Map& map) { return std::holds_alternative<QuadraticMap>(map); }

std::pair<HomogeneousForm, HomogeneousForm> homogenization(const Map& map) {
  if (const auto* q = std::get_if<QuadraticMap>(&map))
    return {HomogeneousForm(2, {q->c, 0, 1}), HomogeneousForm(2, {1, 0, 0})};
  const auto& kb = std::get<KBMap>(map);
  return {HomogeneousForm(2, {kb.b(), 0, kb.k()}), HomogeneousForm(2, {0, 1, 0})};
}

std::pair<intpoly::Coeffs, intpoly::Coeffs> integer_homogenization(const Map& map) {
  if (const auto* q = std::get_if<QuadraticMap>(&map)) {
    // [v x^2 + u y^2 : v y^2] for c = u/v.
    const Integer& u = q->c.num_ref();
    const Integer& v = q->c.den_ref();
    return {{u, 0, v}, {v, 0, 0}};
  }
  const auto& kb = std::get<KBMap>(map);
  const Integer& kn = kb.k().num_ref();
  const Integer& kd = kb.k().den_ref();
  const Integer& bn = kb.b().num_ref();
  const Integer& bd = kb.b().den_ref();
  return {{bn * kd, 0, kn * bd}, {0, kd * bd, 0}};
}

ProjectivePoint apply_map(const Map& map, const ProjectivePoint& p) {
  const Integer& x = p.x();
  const Integer& y = p.y();
  if (const auto* q = std::get_if<QuadraticMap>(&map)) {
    const Integer& u = q->c.num_ref();
    const Integer& v = q->c.den_ref();
    const Integer yy = y * y;
    return ProjectivePoint(v * x * x + u * yy, v * yy);
  }
  const auto& kb = std::get<KBMap>(map);
  const Integer& kn = kb.k().num_ref();
  const Integer& kd = kb.k().den_ref();
  const Integer& bn = kb.b().num_ref();
  const Integer& bd = kb.b().den_ref();
  return ProjectivePoint(kn * bd * x * x + bn * kd * y * y, kd * bd * x * y);
}

Rational apply_affine(const Map& map, const Rational& z) {
  const auto image = apply_map(map, ProjectivePoint(z));
  if (image.is_infinity()) throw DomainError("point maps to infinity");
  return *image.affine();
}

namespace {

// Solves the 4x4 system m * u = rhs over Q by Gaussian elimination; m must be
// nonsingular.
std::array<Rational, 4> solve4(std::array<std::array<Rational, 4>, 4> m, std::array<Rational, 4> rhs) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 4) throw DomainError("map has a degenerate homogenization (zero resultant)");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<Rational, 4> u;
  for (std::size_t i = 0; i < 4; ++i) u[i] = rhs[i] / m[i][i];
  return u;
}

}  // namespace

Integer escape_height(const Map& map) {
  const auto [f, g] = integer_homogenization(map);
  auto coeff = [](const intpoly::Coeffs& c, std::size_t i) { return i < c.size() ? Rational(c[i]) : Rational(0); };
  const Rational a2 = coeff(f, 2), a1 = coeff(f, 1), a0 = coeff(f, 0);
  const Rational c2 = coeff(g, 2), c1 = coeff(g, 1), c0 = coeff(g, 0);

  // Unknowns (alpha1, alpha0, beta1, beta0) of A = alpha1 x + alpha0 y and
  // B = beta1 x + beta0 y; rows are the coefficients of x^3, x^2y, xy^2, y^3
  // in A F + B G.
  const std::array<std::array<Rational, 4>, 4> sylvester{{
      {a2, 0, c2, 0},
      {a1, a2, c1, c2},
      {a0, a1, c0, c1},
      {0, a0, 0, c0},
  }};
  auto l1 = [](const std::array<Rational, 4>& u) {
    Rational s;
    for (const auto& v : u) s += v.abs();
    return s;
  };
  // With A F + B G = x^3 and A' F + B' G = y^3 we get, for coprime (x, y) of
  // height H, max(|F|, |G|) >= H^2 / M1. The gcd of F(x, y), G(x, y) divides
  // the resultant, so the image height is at least H^2 / (M1 |Res|).
  const Rational m1 = std::max(l1(solve4(sylvester, {1, 0, 0, 0})), l1(solve4(sylvester, {0, 0, 0, 1})));
  const Rational res = (a2 * c0 - a0 * c2).square() - (a2 * c1 - a1 * c2) * (a1 * c0 - a0 * c1);
  const Rational bound = m1 * res.abs();
  Integer ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), bound.num_ref().get_mpz_t(), bound.den_ref().get_mpz_t());
  return ceil;
}

std::string to_string(const Map& map) {
  if (const auto* q = std::get_if<QuadraticMap>(&map)) return "quad:c=" + q->c.to_string();
  const auto& kb = std::get<KBMap>(map);
  return "kb:k=" + kb.k().to_string() + ",b=" + kb.b().to_string();
}

Map parse_map(std::string_view text) {
  auto bad = [&]() { return ParseError("malformed map descriptor: '" + std::string(text) + "'"); };
  constexpr std::string_view quad = "quad:c=";
  constexpr std::string_view kb = "kb:k=";
  if (text.starts_with(quad)) return QuadraticMap{Rational::parse(text.substr(quad.size()))};
  if (text.starts_with(kb)) {
    std::string_view rest = text.substr(kb.size());
    const auto comma = rest.find(",b=");
    if (comma == std::string_view::npos) throw bad();
    return KBMap(Rational::parse(rest.substr(0, comma)), Rational::parse(rest.substr(comma + 3)));
  }
  throw bad();
}

}  // namespace ratdyn
