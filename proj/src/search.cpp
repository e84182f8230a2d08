#include "ratdyn/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

#include "ratdyn/dynatomic.hpp"

namespace ratdyn {

namespace {

__extension__ using Wide = __int128;

// Runs fn(begin, end, chunk) over `workers` contiguous chunks of [0, count).
// Chunk outputs are owned by the caller and concatenated in chunk order, so the
// merged result does not depend on the worker count.
template <class Fn>
void run_chunks(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers, end = count * (w + 1) / workers;
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

unsigned chunk_count(std::size_t count, unsigned workers) {
  return std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

void check_bounds(std::initializer_list<std::uint64_t> bounds) {
  for (auto b : bounds)
    if (b < 1) throw DomainError("height bounds must be >= 1");
}

void check_periods(const std::set<unsigned>& periods) {
  if (periods.empty()) throw DomainError("no periods requested");
  for (unsigned n : periods)
    if (n < 1 || n > 8) throw DomainError("unsupported period: n=" + std::to_string(n));
}

std::string join(const std::set<unsigned>& periods) {
  std::string out;
  for (unsigned n : periods) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

// Period hits for one map, ascending period then point.
void scan_map(const Map& map, const std::set<unsigned>& periods, const Integer& h_p, std::vector<ScanHit>& out) {
  const std::string name = to_string(map);
  for (unsigned n : periods)
    for (const auto& p : periodic_points_exact_bounded(map, n, h_p)) out.push_back({name, p, n, {}, {}, {}});
}

template <class Body>
ScanReport timed(const ScanOptions& options, Body body) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report = body();
  if (options.timing)
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::string to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::quadratic_conjecture: return "quadratic_conjecture";
    case ScanKind::kb_conjecture: return "kb_conjecture";
    case ScanKind::intersection_bound: return "intersection_bound";
  }
  return "unknown";
}

ScanReport scan_quadratic_conjecture(std::uint64_t h_c, std::uint64_t h_p, const std::set<unsigned>& periods,
                                     const ScanOptions& options) {
  check_bounds({h_c, h_p});
  check_periods(periods);
  return timed(options, [&] {
    const auto cs = enumerate_rationals(h_c);
    const Integer bound(static_cast<unsigned long>(h_p));
    std::vector<std::vector<ScanHit>> parts(chunk_count(cs.size(), options.workers));
    run_chunks(cs.size(), options.workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
      for (std::size_t i = begin; i < end; ++i) scan_map(QuadraticMap{cs[i]}, periods, bound, parts[chunk]);
    });
    ScanReport report;
    report.kind = ScanKind::quadratic_conjecture;
    report.parameter_box = {{"H_c", std::to_string(h_c)}, {"H_p", std::to_string(h_p)}, {"periods", join(periods)}};
    report.hits = concat(std::move(parts));
    report.scanned_count = cs.size();
    return report;
  });
}

ScanReport scan_kb_conjecture(std::uint64_t h_k, std::uint64_t h_b, std::uint64_t h_p,
                              const std::set<unsigned>& periods, const ScanOptions& options) {
  check_bounds({h_k, h_b, h_p});
  check_periods(periods);
  return timed(options, [&] {
    const auto ks = enumerate_nonzero_rationals(h_k);
    const auto bs = enumerate_nonzero_rationals(h_b);
    const std::size_t count = ks.size() * bs.size();
    const Integer bound(static_cast<unsigned long>(h_p));
    std::vector<std::vector<ScanHit>> parts(chunk_count(count, options.workers));
    run_chunks(count, options.workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
      for (std::size_t i = begin; i < end; ++i)
        scan_map(KBMap(ks[i / bs.size()], bs[i % bs.size()]), periods, bound, parts[chunk]);
    });
    ScanReport report;
    report.kind = ScanKind::kb_conjecture;
    report.parameter_box = {{"H_k", std::to_string(h_k)},
                            {"H_b", std::to_string(h_b)},
                            {"H_p", std::to_string(h_p)},
                            {"periods", join(periods)}};
    report.hits = concat(std::move(parts));
    report.scanned_count = count;
    return report;
  });
}

ScanReport scan_intersection_bound(std::uint64_t h, std::uint64_t h_p, const ScanOptions& options) {
  check_bounds({h, h_p});
  return timed(options, [&] {
    std::vector<Map> maps;
    for (const auto& c : enumerate_rationals(h)) maps.emplace_back(QuadraticMap{c});
    const auto nonzero = enumerate_nonzero_rationals(h);
    for (const auto& k : nonzero)
      for (const auto& b : nonzero) maps.emplace_back(KBMap(k, b));

    // Periodic points of each map with their cycles.
    struct Cycle {
      Rational point;
      std::vector<Rational> members;  // sorted
    };
    const Integer bound(static_cast<unsigned long>(h_p));
    std::vector<std::vector<Cycle>> cycles(maps.size());
    run_chunks(maps.size(), options.workers, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t i = begin; i < end; ++i) {
        const Map& map = maps[i];
        const std::vector<unsigned> periods = is_quadratic(map) ? std::vector<unsigned>{1, 2, 3}
                                                                : std::vector<unsigned>{1, 2, 3, 4};
        for (unsigned n : periods)
          for (const auto& p : periodic_points_exact_bounded(map, n, bound)) {
            Cycle c{p, {p}};
            for (unsigned s = 1; s < n; ++s) c.members.push_back(apply_affine(map, c.members.back()));
            std::sort(c.members.begin(), c.members.end());
            cycles[i].push_back(std::move(c));
          }
      }
    });

    std::map<Rational, std::vector<std::pair<std::size_t, const std::vector<Rational>*>>> by_point;
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (const auto& c : cycles[i]) by_point[c.point].emplace_back(i, &c.members);

    ScanReport report;
    report.kind = ScanKind::intersection_bound;
    report.parameter_box = {{"H", std::to_string(h)}, {"H_p", std::to_string(h_p)}};
    report.scanned_count = maps.size();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::tuple<std::size_t, std::size_t, ScanHit>> found;
    for (const auto& [point, entries] : by_point) {
      for (std::size_t x = 0; x < entries.size(); ++x)
        for (std::size_t y = x + 1; y < entries.size(); ++y) {
          const auto [i, ci] = entries[x];
          const auto [j, cj] = entries[y];
          if (is_quadratic(maps[i]) && is_quadratic(maps[j])) continue;
          std::vector<Rational> common;
          std::set_intersection(ci->begin(), ci->end(), cj->begin(), cj->end(), std::back_inserter(common));
          // A pair sharing a cycle meets at several points; count it once.
          if (!seen.emplace(i, j).second) continue;
          if (common.size() < 3) continue;
          ScanHit hit;
          hit.map = to_string(maps[i]);
          hit.map2 = to_string(maps[j]);
          hit.point = point;
          for (const auto& r : common) hit.intersection.emplace_back(r);
          hit.relation = "distinct";
          if (!is_quadratic(maps[i]) && !is_quadratic(maps[j])) {
            const auto& a = std::get<KBMap>(maps[i]);
            const auto& b = std::get<KBMap>(maps[j]);
            if (a.k() == -b.k() && a.b() == -b.b()) hit.relation = "negated";
          }
          found.emplace_back(i, j, std::move(hit));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a).point) <
             std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b).point);
    });
    for (auto& f : found) report.hits.push_back(std::move(std::get<2>(f)));
    report.pairs_checked = seen.size();
    return report;
  });
}

QuarticCurve::QuarticCurve(Rational a4_, Rational a3_, Rational a2_, Rational a1_, Rational a0_)
    : a4(std::move(a4_)), a3(std::move(a3_)), a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_)) {
  if (a4.is_zero()) throw DomainError("not a quartic: a4=0");
}

Rational QuarticCurve::evaluate(const Rational& t) const { return (((a4 * t + a3) * t + a2) * t + a1) * t + a0; }

std::string QuarticCurve::to_string() const {
  return Polynomial({a0, a1, a2, a3, a4}).to_string('t');
}

namespace {

// Squares modulo 64 * 63 * 65 * 11, so one table lookup rejects about 99% of
// non-squares before any wide arithmetic.
constexpr std::uint64_t kScreen = 64ULL * 63 * 65 * 11;

const std::vector<bool>& square_screen() {
  static const std::vector<bool> table = [] {
    std::vector<bool> ok(kScreen, false);
    for (std::uint64_t x = 0; x < kScreen; ++x) ok[x * x % kScreen] = true;
    return ok;
  }();
  return table;
}

std::uint64_t mod_screen(const Integer& a) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), kScreen);
  return r.get_ui();
}

}  // namespace

QuarticSearchResult quartic_rational_points(const QuarticCurve& curve, std::uint64_t h, const ScanOptions& options) {
  check_bounds({h});
  if (h > (1ULL << 20)) throw DomainError("height bound too large: H=" + std::to_string(h));
  // Integer model: A_i = L a_i, so L s^4 f(r/s) = V(r, s) and y = sqrt(L V) / (L s^2).
  const std::array<const Rational*, 5> coeffs{&curve.a0, &curve.a1, &curve.a2, &curve.a3, &curve.a4};
  Integer lcm = 1;
  for (const auto* c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c->den_ref().get_mpz_t());
  std::array<Integer, 5> a;
  Integer amax = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    a[i] = coeffs[i]->num() * (lcm / coeffs[i]->den());
    amax = std::max<Integer>(amax, abs(a[i]));
  }
  // |L V| <= 5 L amax h^4 must fit comfortably in 126 bits.
  Integer worst = Integer(5) * lcm * amax;
  Integer hp;
  mpz_ui_pow_ui(hp.get_mpz_t(), h, 4);
  worst *= hp;
  if (mpz_sizeinbase(worst.get_mpz_t(), 2) > 125) throw DomainError("curve coefficients too large for the search bound");
  if (!lcm.fits_slong_p() || !amax.fits_slong_p()) throw DomainError("curve coefficients too large for the search bound");
  const Wide big_l = static_cast<Wide>(lcm.get_si());
  std::array<Wide, 5> w;
  for (std::size_t i = 0; i < 5; ++i) w[i] = static_cast<Wide>(a[i].get_si());

  const auto& screen = square_screen();
  // Coefficients of L V, reduced for the screen.
  std::array<std::uint64_t, 5> m;
  for (std::size_t i = 0; i < 5; ++i) m[i] = mod_screen(a[i] * lcm);
  const std::size_t count = h;  // s = 1..h
  std::vector<std::vector<QuarticPoint>> parts(chunk_count(count, options.workers));
  const auto ih = static_cast<std::int64_t>(h);
  run_chunks(count, options.workers, [&](std::size_t begin, std::size_t end, unsigned chunk) {
    for (std::size_t si = begin; si < end; ++si) {
      const auto s = static_cast<std::int64_t>(si + 1);
      const Wide s2 = static_cast<Wide>(s) * s;
      const Wide c3 = w[3] * s, c2 = w[2] * s2, c1 = w[1] * s2 * s, c0 = w[0] * s2 * s2;
      const std::uint64_t sm = static_cast<std::uint64_t>(s) % kScreen, sm2 = sm * sm % kScreen;
      const std::uint64_t m3 = m[3] * sm % kScreen, m2 = m[2] * sm2 % kScreen, m1 = m[1] * sm2 % kScreen * sm % kScreen,
                          m0 = m[0] * sm2 % kScreen * sm2 % kScreen;
      for (std::int64_t r = -ih; r <= ih; ++r) {
        const std::uint64_t rm = static_cast<std::uint64_t>(r + static_cast<std::int64_t>(kScreen)) % kScreen;
        const std::uint64_t vm = (((m[4] * rm + m3) % kScreen * rm + m2) % kScreen * rm + m1) % kScreen * rm + m0;
        if (!screen[vm % kScreen]) continue;
        const Wide lv = ((((w[4] * r + c3) * r + c2) * r + c1) * r + c0) * big_l;
        if (lv < 0) continue;
        if (std::gcd(r < 0 ? -r : r, s) != 1) continue;
        Integer big = static_cast<unsigned long>(lv >> 62);
        big <<= 62;
        big += static_cast<unsigned long>(lv & ((Wide(1) << 62) - 1));
        if (!mpz_perfect_square_p(big.get_mpz_t())) continue;
        Integer root;
        mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
        const Rational tau(Integer(static_cast<long>(r)), Integer(static_cast<long>(s)));
        const Rational y(root, lcm * Integer(static_cast<long>(s)) * Integer(static_cast<long>(s)));
        parts[chunk].push_back({tau, y});
        if (!y.is_zero()) parts[chunk].push_back({tau, -y});
      }
    }
  });
  QuarticSearchResult out;
  out.affine = concat(std::move(parts));
  std::sort(out.affine.begin(), out.affine.end(),
            [](const QuarticPoint& x, const QuarticPoint& y) { return std::tie(x.tau, x.y) < std::tie(y.tau, y.y); });
  out.points_at_infinity = is_rational_square(curve.a4);
  // Reduced pairs (r, s) with |r| <= h, 1 <= s <= h.
  out.scanned_count = count_rationals(h);
  return out;
}

}  // namespace ratdyn
