#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratdyn/classification.hpp"
#include "ratdyn/dynatomic.hpp"
#include "ratdyn/roots.hpp"
#include "ratdyn/search.hpp"
#include "ratdyn/simultaneous.hpp"

namespace ratdyn::cli {

namespace {

using Json = nlohmann::ordered_json;

// Missing or inconsistent flags that CLI11 cannot express; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string str(const Rational& r) { return r.to_string(); }
std::string str(const ProjectivePoint& p) { return p.to_string(); }

template <class Range>
Json strings(const Range& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(str(v));
  return out;
}

Json integers(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json parameters_json(const Parameters& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = str(value);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// Every flag of every subcommand; unset rationals stay empty.
struct Options {
  std::string format = "json";
  std::string map, map1, map2, point;
  unsigned n = 0;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string kind;
  std::string p, q, m, s, s1, s2, tau, a, b, q1, q2;
  unsigned i = 0, j = 0, row = 0, which = 0;
  int sign = 0;
  std::string normalize, conjugate, poly, coeffs;
  unsigned curve = 0;
  std::uint64_t height = 0, height_c = 20, height_k = 10, height_b = 10, height_p = 100;
  std::string periods;
  unsigned workers = 1;
  bool timing = false;
  unsigned samples = 20;
};

Rational need(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required option --") + flag);
  return Rational::parse(text);
}

std::vector<Rational> rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(need(item, flag));
  return out;
}

Json map_json(const KBMap& m) {
  return Json{{"map", to_string(Map{m})}, {"k", str(m.k())}, {"b", str(m.b())}};
}

Json triple_json(const std::string& kind, const MixedFamilyTriple& t) {
  return Json{{"kind", kind},
              {"parameters", parameters_json(t.parameters)},
              {"c", str(t.c)},
              {"k", str(t.k)},
              {"b", str(t.b)},
              {"quadratic", to_string(Map{t.quadratic()})},
              {"kb", to_string(Map{t.kb()})},
              {"f_period", t.f_period},
              {"phi_period", t.phi_period},
              {"shared_point", str(t.shared_point)}};
}

Json quadruple_json(const std::string& kind, const KBPairQuadruple& t) {
  return Json{{"kind", kind},
              {"parameters", parameters_json(t.parameters)},
              {"k1", str(t.k1)},
              {"b1", str(t.b1)},
              {"k2", str(t.k2)},
              {"b2", str(t.b2)},
              {"map1", to_string(Map{t.first()})},
              {"map2", to_string(Map{t.second()})},
              {"period1", t.period1},
              {"period2", t.period2},
              {"shared_point", str(t.shared_point)}};
}

Json cmd_orbit(const Options& o) {
  const Map map = parse_map(o.map);
  const auto point = ProjectivePoint::parse(o.point);
  const auto report = orbit(map, point, o.max_steps);
  return Json{{"map", to_string(map)},
              {"point", str(point)},
              {"max_steps", o.max_steps},
              {"status", report.status == OrbitStatus::periodic ? "periodic" : "bound_exceeded"},
              {"tail", strings(report.tail)},
              {"cycle", strings(report.cycle)}};
}

Json cmd_period(const Options& o) {
  const Map map = parse_map(o.map);
  const auto point = ProjectivePoint::parse(o.point);
  const auto n = exact_period(map, point, o.max_steps);
  return Json{{"map", to_string(map)},
              {"point", str(point)},
              {"max_steps", o.max_steps},
              {"exact_period", n ? Json(*n) : Json(nullptr)}};
}

Json cmd_dynatomic(const Options& o) {
  if (!o.poly.empty()) {
    // Rational roots of an arbitrary polynomial, coefficients in ascending degree.
    const Polynomial poly(rational_list(o.poly, "poly"));
    return Json{{"polynomial", poly.to_string()}, {"roots", strings(rational_roots(poly))}};
  }
  if (o.map.empty()) throw UsageError("missing required option --map");
  if (o.n < 1) throw UsageError("missing required option --n");
  const Map map = parse_map(o.map);
  const auto iterate = iterate_homogeneous(map, o.n);
  const Polynomial dyn = dynatomic_polynomial(map, o.n);
  Json out{{"map", to_string(map)},
           {"n", o.n},
           {"moebius", moebius(o.n)},
           {"iterate", {{"f", iterate.f.to_string()}, {"g", iterate.g.to_string()}}},
           {"period_polynomial", period_polynomial(map, o.n).to_string()},
           {"dynatomic_polynomial", dyn.to_string()},
           {"coefficients", integers(dyn.canonical_integers())},
           {"form_degree", dynatomic_degree(o.n)},
           {"periodic_points", strings(periodic_points_exact(map, o.n, o.max_steps))}};
  if (o.n == 4 && !is_quadratic(map)) {
    const auto& kb = std::get<KBMap>(map);
    const auto factors = psi4_lambda4(kb.k(), kb.b());
    out["psi4"] = factors.psi.to_string();
    out["lambda4"] = factors.lambda.to_string();
  }
  return out;
}

Json cmd_classify(const Options& o) {
  if (!o.normalize.empty()) {
    const auto abc = rational_list(o.normalize, "normalize");
    if (abc.size() != 3) throw UsageError("--normalize takes A,B,C");
    return Json{{"A", str(abc[0])}, {"B", str(abc[1])}, {"C", str(abc[2])},
                {"c", str(normalize_quadratic(abc[0], abc[1], abc[2]))}};
  }
  if (o.map.empty()) throw UsageError("missing required option --map");
  const Map map = parse_map(o.map);
  if (!o.conjugate.empty()) {
    const Map other = parse_map(o.conjugate);
    if (is_quadratic(map) || is_quadratic(other)) throw UsageError("--conjugate compares two kb maps");
    return Json{{"map", to_string(map)},
                {"conjugate", to_string(other)},
                {"equivalent", kb_conjugate_equivalent(std::get<KBMap>(map), std::get<KBMap>(other))}};
  }
  if (o.n < 1) throw UsageError("missing required option --n");
  const PeriodClass cls = is_quadratic(map) ? classify_quadratic(std::get<QuadraticMap>(map).c, o.n)
                                            : classify_kb(std::get<KBMap>(map).k(), std::get<KBMap>(map).b(), o.n);
  Json cycles = Json::array();
  for (const auto& c : cls.cycles) cycles.push_back(strings(c));
  return Json{{"map", to_string(map)},
              {"n", o.n},
              {"points", strings(cls.points)},
              {"cycles", cycles},
              {"witness", cls.witness ? Json(str(*cls.witness)) : Json(nullptr)}};
}

// The n = 1, 2 rows take --q and the n = 4 row takes --m.
Rational row_parameter(const Options& o) {
  if (o.n < 1) throw UsageError("missing required option --n");
  return o.n == 4 ? need(o.m, "m") : need(o.q, "q");
}

Json cmd_family(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "quad3") {
    const auto f = quad_family_period3(need(o.tau, "tau"));
    return Json{{"kind", kind}, {"tau", str(f.tau)}, {"c", str(f.c)}, {"cycle", strings(std::vector{f.x1, f.x2, f.x3})}};
  }
  if (kind == "kb4") {
    const auto f = kb_family_period4(need(o.m, "m"));
    return Json{{"kind", kind}, {"m", str(f.m)}, {"k", str(f.k)}, {"b", str(f.b)}, {"cycle", strings(f.points)}};
  }
  if (kind == "mixed1") return triple_json(kind, mixed_family_fixed(need(o.p, "p"), o.n, row_parameter(o)));
  if (kind == "mixed2") return triple_json(kind, mixed_family_period2(need(o.p, "p"), o.n, row_parameter(o)));
  if (kind == "mixed3") return triple_json(kind, mixed_family_period3(need(o.tau, "tau"), o.i, o.n, row_parameter(o)));
  if (kind == "int2-mixed") return triple_json(kind, intersection2_family_mixed(need(o.p, "p"), o.sign));
  if (kind == "int2-period3")
    return triple_json(kind, intersection2_family_period3(need(o.tau, "tau"), o.i, o.j, o.sign));
  if (kind == "kb-pair") return quadruple_json(kind, kb_pair_family(o.row, need(o.p, "p"), need(o.s1, "s1"), need(o.s2, "s2")));
  if (kind == "int2-kbkb")
    return quadruple_json(kind, intersection2_family_kbkb(o.which, need(o.p, "p"), need(o.s1, "s1"), need(o.s2, "s2")));
  if (kind == "kb-row") {
    const Rational p = need(o.p, "p"), s = need(o.s, "s");
    Json out{{"kind", kind}, {"n", o.n}};
    switch (o.n) {
      case 1: out.update(map_json(kb_fixed_row(p, s))); break;
      case 2: out.update(map_json(kb_period2_row(p, s))); break;
      case 4: out.update(map_json(kb_period4_row(p, s))); break;
      default: throw DomainError("unsupported period: n=" + std::to_string(o.n));
    }
    return out;
  }
  if (kind == "fixed-period2") {
    Json out{{"kind", kind}, {"q1", o.q1}, {"q2", o.q2}};
    out.update(map_json(kb_from_fixed_and_period2(need(o.q1, "q1"), need(o.q2, "q2"))));
    return out;
  }
  throw UsageError("unknown family kind: " + kind);
}

Json cmd_intersect(const Options& o) {
  const Map m1 = parse_map(o.map1), m2 = parse_map(o.map2);
  const auto point = ProjectivePoint::parse(o.point);
  const auto common = orbit_intersection(m1, m2, point);
  return Json{{"map1", to_string(m1)},
              {"map2", to_string(m2)},
              {"point", str(point)},
              {"intersection", strings(common)},
              {"size", common.size()}};
}

Json cmd_shared(const Options& o) {
  const Rational q = need(o.q, "q");
  Json entries = Json::array();
  for (const auto& e : shared_quadratic_maps(q))
    entries.push_back(Json{{"c", str(e.c)}, {"period", e.period}, {"cycle", strings(e.cycle)}});
  return Json{{"q", str(q)}, {"count", entries.size()}, {"entries", entries}};
}

Json cmd_simul(const Options& o) {
  const Rational a = need(o.a, "a"), b = need(o.b, "b");
  const auto result = simultaneous_point_maps(a, b);
  Json out{{"a", str(a)}, {"b", str(b)}, {"infinite", result.infinite}};
  if (result.infinite) {
    Json families = Json::array();
    for (const auto& f : result.families) {
      // A few members, s = 2, 3, ..., as a sanity aid.
      Json members = Json::array();
      for (unsigned s = 2; members.size() < o.samples; ++s) members.push_back(map_json(f.sample(Rational(static_cast<long>(s))))["map"]);
      families.push_back(Json{{"period", f.period},
                              {"p", str(f.p)},
                              {"k", f.k_formula},
                              {"b", f.b_formula},
                              {"domain", f.domain},
                              {"members", members}});
    }
    out["families"] = families;
  } else {
    Json maps = Json::array();
    for (const auto& m : result.maps) {
      Json entry = map_json(m.map);
      entry["period_a"] = m.period_a;
      entry["period_b"] = m.period_b;
      maps.push_back(entry);
    }
    out["maps"] = maps;
  }
  return out;
}

std::set<unsigned> period_set(const std::string& text) {
  std::set<unsigned> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw UsageError("invalid period list: " + text);
    }
  }
  return out;
}

Json scan_json(const ScanReport& r) {
  Json box = Json::object();
  for (const auto& [k, v] : r.parameter_box) box[k] = v;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    if (r.kind == ScanKind::intersection_bound)
      hits.push_back(Json{{"map1", h.map},
                          {"map2", h.map2},
                          {"point", str(h.point)},
                          {"intersection", strings(h.intersection)},
                          {"relation", h.relation}});
    else
      hits.push_back(Json{{"map", h.map}, {"point", str(h.point)}, {"period", h.period}});
  }
  Json out{{"scan_kind", to_string(r.kind)}, {"parameter_box", box}, {"scanned_count", r.scanned_count}};
  if (r.pairs_checked) out["pairs_checked"] = *r.pairs_checked;
  out["hit_count"] = r.hits.size();
  out["hits"] = hits;
  if (r.elapsed_seconds) out["elapsed_seconds"] = *r.elapsed_seconds;
  return out;
}

Json cmd_scan(const Options& o) {
  const ScanOptions so{o.workers, o.timing};
  if (o.kind == "quadratic")
    return scan_json(scan_quadratic_conjecture(o.height_c, o.height_p, period_set(o.periods.empty() ? "4" : o.periods), so));
  if (o.kind == "kb")
    return scan_json(
        scan_kb_conjecture(o.height_k, o.height_b, o.height_p, period_set(o.periods.empty() ? "3" : o.periods), so));
  if (o.kind == "intersection") return scan_json(scan_intersection_bound(o.height ? o.height : 8, o.height_p, so));
  throw UsageError("unknown scan kind: " + o.kind);
}

Json cmd_quartic(const Options& o) {
  static const std::map<unsigned, std::array<long, 5>> kPresets{
      {1, {1, 6, 7, 2, 1}}, {2, {1, -2, -5, -2, 1}}, {3, {1, 2, 7, 6, 1}}};
  std::vector<Rational> a;
  if (!o.coeffs.empty()) {
    a = rational_list(o.coeffs, "coeffs");
    if (a.size() != 5) throw UsageError("--coeffs takes a4,a3,a2,a1,a0");
  } else {
    const auto it = kPresets.find(o.curve);
    if (it == kPresets.end()) throw UsageError("give --coeffs or --curve 1|2|3");
    for (long c : it->second) a.emplace_back(c);
  }
  const QuarticCurve curve(a[0], a[1], a[2], a[3], a[4]);
  const std::uint64_t h = o.height ? o.height : 10000;
  const auto result = quartic_rational_points(curve, h, {o.workers, false});
  Json points = Json::array();
  for (const auto& pt : result.affine) points.push_back(Json{{"tau", str(pt.tau)}, {"y", str(pt.y)}});
  return Json{{"curve", "y^2 = " + curve.to_string()},
              {"height", h},
              {"scanned_count", result.scanned_count},
              {"affine", points},
              {"points_at_infinity", result.points_at_infinity}};
}

// ---- rendering ----

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
    return out + "]";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : " ") + k + "=" + scalar(x);
    return out;
  }
  return v.dump();
}

bool is_row_list(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

std::string render_table(const Json& j) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [k, v] : j.items())
    if (!is_row_list(v)) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_row_list(v)) continue;
    os << k << std::string(width - k.size() + 2, ' ') << scalar(v) << '\n';
  }
  for (const auto& [k, v] : j.items()) {
    if (!is_row_list(v)) continue;
    os << '\n' << k << ":\n";
    std::vector<std::string> cols;
    for (const auto& [c, x] : v.front().items()) cols.push_back(c);
    std::vector<std::size_t> w;
    for (const auto& c : cols) w.push_back(c.size());
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : v) {
      rows.emplace_back();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        rows.back().push_back(row.contains(cols[c]) ? scalar(row[cols[c]]) : "");
        w[c] = std::max(w[c], rows.back().back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string out = " ";
      for (std::size_t c = 0; c < cells.size(); ++c) out += " " + cells[c] + std::string(w[c] - cells[c].size(), ' ');
      while (!out.empty() && out.back() == ' ') out.pop_back();
      os << out << '\n';
    };
    line(cols);
    for (const auto& r : rows) line(r);
  }
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
  return out + "\n";
}

// Scan hits: scan_kind, map parameters, point, period (or intersection data).
std::string render_scan_csv(const Json& j) {
  const std::string kind = j["scan_kind"];
  std::string out;
  if (kind == "intersection_bound") {
    out += csv_line({"scan_kind", "map1", "map2", "point", "intersection", "relation"});
    for (const auto& h : j["hits"]) {
      std::string pts;
      for (const auto& p : h["intersection"]) pts += (pts.empty() ? "" : ";") + p.get<std::string>();
      out += csv_line({kind, h["map1"], h["map2"], h["point"], pts, h["relation"]});
    }
    return out;
  }
  const bool quad = kind == "quadratic_conjecture";
  out += csv_line(quad ? std::vector<std::string>{"scan_kind", "c", "point", "period"}
                       : std::vector<std::string>{"scan_kind", "k", "b", "point", "period"});
  for (const auto& h : j["hits"]) {
    std::vector<std::string> row{kind};
    const Map map = parse_map(h["map"].get<std::string>());
    if (quad) {
      row.push_back(str(std::get<QuadraticMap>(map).c));
    } else {
      row.push_back(str(std::get<KBMap>(map).k()));
      row.push_back(str(std::get<KBMap>(map).b()));
    }
    row.push_back(h["point"]);
    row.push_back(std::to_string(h["period"].get<unsigned>()));
    out += csv_line(row);
  }
  return out;
}

// Other commands: the first list of records as rows, else key,value pairs.
std::string render_csv(const Json& j) {
  if (j.contains("scan_kind")) return render_scan_csv(j);
  for (const auto& [k, v] : j.items()) {
    if (!is_row_list(v)) continue;
    std::vector<std::string> cols;
    for (const auto& [c, x] : v.front().items()) cols.push_back(c);
    std::string out = csv_line(cols);
    for (const auto& row : v) {
      std::vector<std::string> cells;
      for (const auto& c : cols) cells.push_back(row.contains(c) ? scalar(row[c]) : "");
      out += csv_line(cells);
    }
    return out;
  }
  std::string out = csv_line({"key", "value"});
  for (const auto& [k, v] : j.items()) out += csv_line({k, scalar(v)});
  return out;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact periodic points and orbit intersections of z^2 + c and kz + b/z.", "ratdyn-cli"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "INI file of defaults: [scan] height_c=20, or scan.height_c=20");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  std::map<std::string, std::function<Json(const Options&)>> handlers;
  auto sub = [&](const char* name, const char* help, Json (*fn)(const Options&)) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* orbit_cmd = sub("orbit", "Forward orbit of a point: tail and cycle", cmd_orbit);
  orbit_cmd->add_option("--map", o.map, "quad:c=<r> or kb:k=<r>,b=<r>")->required();
  orbit_cmd->add_option("--point", o.point, "Rational or inf")->required();
  orbit_cmd->add_option("--max-steps", o.max_steps)->capture_default_str()->check(CLI::PositiveNumber);

  auto* period_cmd = sub("period", "Exact period of a point, or null", cmd_period);
  period_cmd->add_option("--map", o.map)->required();
  period_cmd->add_option("--point", o.point)->required();
  period_cmd->add_option("--max-steps", o.max_steps)->capture_default_str()->check(CLI::PositiveNumber);

  auto* dyn_cmd = sub("dynatomic", "Dynatomic polynomial and its exact-period roots; or --poly roots", cmd_dynatomic);
  dyn_cmd->add_option("--map", o.map);
  dyn_cmd->add_option("--n", o.n)->check(CLI::Range(1u, 12u));
  dyn_cmd->add_option("--max-steps", o.max_steps)->capture_default_str()->check(CLI::PositiveNumber);
  dyn_cmd->add_option("--poly", o.poly, "Rational roots of c0,c1,...,cd instead");

  auto* cls_cmd = sub("classify", "Periodic points of exact period n by the closed-form criteria", cmd_classify);
  cls_cmd->add_option("--map", o.map);
  cls_cmd->add_option("--n", o.n, "1, 2, 3 (quad) or 1, 2, 4 (kb)");
  cls_cmd->add_option("--conjugate", o.conjugate, "Second kb map: report linear conjugacy instead");
  cls_cmd->add_option("--normalize", o.normalize, "A,B,C: normal form c of A z^2 + B z + C instead");

  auto* fam_cmd = sub("family", "Members of the parametrized families", cmd_family);
  fam_cmd->add_option("--kind", o.kind,
                      "quad3 kb4 mixed1 mixed2 mixed3 int2-mixed int2-period3 kb-pair int2-kbkb kb-row fixed-period2")
      ->required();
  for (auto [flag, target] : {std::pair{"--p", &o.p}, {"--q", &o.q}, {"--m", &o.m}, {"--s", &o.s}, {"--s1", &o.s1},
                              {"--s2", &o.s2}, {"--tau", &o.tau}, {"--q1", &o.q1}, {"--q2", &o.q2}})
    fam_cmd->add_option(flag, *target);
  fam_cmd->add_option("--n", o.n);
  fam_cmd->add_option("--i", o.i);
  fam_cmd->add_option("--j", o.j);
  fam_cmd->add_option("--sign", o.sign);
  fam_cmd->add_option("--row", o.row);
  fam_cmd->add_option("--case", o.which);

  auto* int_cmd = sub("intersect", "Intersection of the two orbits through a common periodic point", cmd_intersect);
  int_cmd->add_option("--map1", o.map1)->required();
  int_cmd->add_option("--map2", o.map2)->required();
  int_cmd->add_option("--point", o.point)->required();

  auto* shared_cmd = sub("shared", "Every z^2 + c with q periodic of period <= 3", cmd_shared);
  shared_cmd->add_option("--q", o.q)->required();

  auto* simul_cmd = sub("simul", "KB maps with both a and b periodic", cmd_simul);
  simul_cmd->add_option("--a", o.a)->required();
  simul_cmd->add_option("--b", o.b)->required();
  simul_cmd->add_option("--samples", o.samples, "Members listed per family when a^2 = b^2")->capture_default_str();

  auto* scan_cmd = sub("scan", "Height-bounded scans", cmd_scan);
  scan_cmd->add_option("--kind", o.kind, "quadratic, kb or intersection")->required();
  scan_cmd->add_option("--height-c,--height_c", o.height_c)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--height-k,--height_k", o.height_k)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--height-b,--height_b", o.height_b)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--height-p,--height_p", o.height_p)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--height", o.height, "Parameter box for intersection scans (default 8)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--periods", o.periods, "Comma-separated, 1..8 (default 4 quadratic, 3 kb)");
  scan_cmd->add_option("--workers", o.workers)->capture_default_str()->check(CLI::Range(1u, 256u));
  scan_cmd->add_flag("--timing", o.timing, "Include elapsed_seconds");

  auto* quartic_cmd = sub("quartic", "Rational points of y^2 = quartic(t) up to a height", cmd_quartic);
  quartic_cmd->add_option("--coeffs", o.coeffs, "a4,a3,a2,a1,a0");
  quartic_cmd->add_option("--curve", o.curve, "Built-in curve 1, 2 or 3");
  quartic_cmd->add_option("--height", o.height, "Default 10000")->check(CLI::PositiveNumber);
  quartic_cmd->add_option("--workers", o.workers)->capture_default_str()->check(CLI::Range(1u, 256u));

  RunResult result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.output = out.str();
    result.error = err.str();
    return result;
  }

  try {
    const auto* chosen = app.get_subcommands().front();
    const Json j = handlers.at(chosen->get_name())(o);
    if (o.format == "table")
      result.output = render_table(j);
    else if (o.format == "csv")
      result.output = render_csv(j);
    else
      result.output = j.dump(2) + "\n";
  } catch (const DomainError& e) {
    result.exit_code = 1;
    result.error = std::string(e.what()) + "\n";
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n";
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace ratdyn::cli
