#pragma once

/**
 * @file io.hpp
 * @brief JSON documents for every object kind, with strict schema checks.
 *
 * Every top-level document carries "kind" and "version": "1". Sub-objects
 * (a monoid inside a hom, a fan inside a groupoid) may omit both. Integers
 * are JSON numbers, or decimal strings when they do not fit in 64 bits;
 * rationals are strings "a/b" (plain integers are accepted too). Unknown
 * fields are rejected and every error names the offending field path.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "katofan/stack.hpp"
#include "katofan/trop.hpp"

namespace katofan::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1";

// ---------------------------------------------------------------------------
// Field access

/// Object view that remembers which keys were read, for unknown-field checks.
class Fields {
 public:
  Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_ + ": expected an object");
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "." + key; }

  const Json& required(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(at(key) + ": required");
    return *it;
  }

  const Json* optional(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  /// Rejects keys nobody asked for.
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) throw SchemaError(at(it.key()) + ": unknown field");
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

/// Checks "kind"/"version" when present (or when `top` demands them).
inline void header(Fields& f, const std::string& kind, bool top) {
  const Json* k = top ? &f.required("kind") : f.optional("kind");
  const Json* v = top ? &f.required("version") : f.optional("version");
  if (k && (!k->is_string() || k->get<std::string>() != kind))
    throw SchemaError(f.at("kind") + ": expected \"" + kind + "\"");
  if (v && (!v->is_string() || v->get<std::string>() != kVersion))
    throw SchemaError(f.at("version") + ": unsupported version, expected \"" + std::string(kVersion) + "\"");
}

inline Int read_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  throw SchemaError(path + ": expected an integer");
}

inline std::size_t read_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path + ": expected a nonnegative integer");
  return static_cast<std::size_t>(j.get<std::uint64_t>());
}

inline Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(read_int(j, path));
  if (!j.is_string()) throw SchemaError(path + ": expected a rational string \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  return j;
}

inline IntVector read_vector(const Json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) {
  read_array(j, path);
  if (len && j.size() != *len)
    throw SchemaError(path + ": expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
  IntVector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(read_int(j[k], path + "[" + std::to_string(k) + "]"));
  return v;
}

inline std::vector<std::size_t> read_indices(const Json& j, const std::string& path) {
  read_array(j, path);
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(read_index(j[k], path + "[" + std::to_string(k) + "]"));
  return v;
}

inline std::vector<Rational> read_rationals(const Json& j, const std::string& path) {
  read_array(j, path);
  std::vector<Rational> v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(read_rational(j[k], path + "[" + std::to_string(k) + "]"));
  return v;
}

/// Matrix as a list of rows; the column count is needed for empty lists.
inline IntMatrix read_matrix(const Json& j, const std::string& path, std::optional<std::size_t> rows,
                             std::optional<std::size_t> cols) {
  read_array(j, path);
  if (rows && j.size() != *rows)
    throw SchemaError(path + ": expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
  std::size_t c = cols ? *cols : (j.empty() ? 0 : read_array(j[0], path + "[0]").size());
  std::vector<IntVector> rs;
  for (std::size_t k = 0; k < j.size(); ++k) rs.push_back(read_vector(j[k], path + "[" + std::to_string(k) + "]", c));
  return IntMatrix::from_rows(rs, c);
}

inline Json int_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

inline Json indices_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json rational_json(const Rational& q) { return Json(to_string(q)); }

inline Json extended_json(const ExtendedNonneg& x) { return Json(x.str()); }

inline Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(int_json(m(i, j)));
    a.push_back(std::move(r));
  }
  return a;
}

inline Json document(const std::string& kind) {
  Json j = Json::object();
  j["kind"] = kind;
  j["version"] = kVersion;
  return j;
}

// ---------------------------------------------------------------------------
// Monoids and homs

/**
 * Monoid from {rank, generators}. With `canonical` the generators must
 * already be in canonical form, since other fields index into them.
 */
inline AffineMonoid read_monoid(const Json& j, const std::string& path, bool top = false, bool canonical = true) {
  Fields f(j, path);
  header(f, "monoid", top);
  const Json& r = f.required("rank");
  std::size_t rank = read_index(r, f.at("rank"));
  const Json& g = read_array(f.required("generators"), f.at("generators"));
  std::vector<IntVector> gens;
  for (std::size_t k = 0; k < g.size(); ++k)
    gens.push_back(read_vector(g[k], f.at("generators") + "[" + std::to_string(k) + "]", rank));
  f.finish();
  AffineMonoid P = make_monoid(rank, gens);
  if (canonical && (P.rank() != rank || P.generators() != gens))
    throw SchemaError(path + ": monoid is not in canonical form (run `monoid canonical` or list generators as "
                             "emitted by this tool)");
  return P;
}

inline Json monoid_body(const AffineMonoid& P) {
  Json j = Json::object();
  j["rank"] = P.rank();
  Json g = Json::array();
  for (const auto& v : P.generators()) g.push_back(vector_json(v));
  j["generators"] = std::move(g);
  return j;
}

inline Json monoid_json(const AffineMonoid& P) {
  Json j = document("monoid");
  j.update(monoid_body(P));
  return j;
}

/// Hom {matrix, source, target}, validated and classified.
inline HomReport read_hom(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "hom", top);
  AffineMonoid P = read_monoid(f.required("source"), f.at("source"));
  AffineMonoid Q = read_monoid(f.required("target"), f.at("target"));
  IntMatrix m = read_matrix(f.required("matrix"), f.at("matrix"), Q.rank(), P.rank());
  f.finish();
  return validate_hom(m, P, Q);
}

inline Json hom_body(const MonoidHom& h) {
  Json j = Json::object();
  j["matrix"] = matrix_json(h.matrix);
  j["source"] = monoid_body(h.source);
  j["target"] = monoid_body(h.target);
  return j;
}

inline Json hom_json(const MonoidHom& h) {
  Json j = document("hom");
  j.update(hom_body(h));
  return j;
}

// ---------------------------------------------------------------------------
// Fans, morphisms, toric input

inline Face read_face(const Json& j, const std::string& path, const AffineMonoid& P) {
  Face F{read_indices(j, path)};
  for (auto i : F.generators)
    if (i >= P.size()) throw SchemaError(path + ": generator index " + std::to_string(i) + " out of range");
  if (!std::is_sorted(F.generators.begin(), F.generators.end()) ||
      std::adjacent_find(F.generators.begin(), F.generators.end()) != F.generators.end())
    throw SchemaError(path + ": indices must be strictly increasing");
  return F;
}

inline Prime read_prime(const Json& j, const std::string& path, const AffineMonoid& P) {
  return Prime{read_face(j, path, P).generators};
}

inline KatoFan read_fan(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "fan", top);
  const Json& cs = read_array(f.required("charts"), f.at("charts"));
  std::vector<AffineMonoid> charts;
  for (std::size_t k = 0; k < cs.size(); ++k) charts.push_back(read_monoid(cs[k], f.at("charts") + "[" + std::to_string(k) + "]"));
  std::vector<Gluing> gluings;
  if (const Json* gs = f.optional("gluings")) {
    read_array(*gs, f.at("gluings"));
    for (std::size_t k = 0; k < gs->size(); ++k) {
      Fields g((*gs)[k], f.at("gluings") + "[" + std::to_string(k) + "]");
      Gluing gl;
      gl.i = read_index(g.required("i"), g.at("i"));
      gl.j = read_index(g.required("j"), g.at("j"));
      if (gl.i >= charts.size()) throw SchemaError(g.at("i") + ": chart index out of range");
      if (gl.j >= charts.size()) throw SchemaError(g.at("j") + ": chart index out of range");
      gl.face_i = read_face(g.required("face_i"), g.at("face_i"), charts[gl.i]);
      gl.face_j = read_face(g.required("face_j"), g.at("face_j"), charts[gl.j]);
      gl.iso = read_matrix(g.required("iso"), g.at("iso"), std::nullopt, std::nullopt);
      g.finish();
      gluings.push_back(std::move(gl));
    }
  }
  f.finish();
  return KatoFan(std::move(charts), std::move(gluings));
}

inline Json fan_body(const KatoFan& F) {
  Json j = Json::object();
  Json cs = Json::array();
  for (const auto& P : F.charts()) cs.push_back(monoid_body(P));
  j["charts"] = std::move(cs);
  Json gs = Json::array();
  for (const auto& g : F.gluings()) {
    Json e = Json::object();
    e["i"] = g.i;
    e["face_i"] = indices_json(g.face_i.generators);
    e["j"] = g.j;
    e["face_j"] = indices_json(g.face_j.generators);
    e["iso"] = matrix_json(g.iso);
    gs.push_back(std::move(e));
  }
  j["gluings"] = std::move(gs);
  return j;
}

inline Json fan_json(const KatoFan& F) {
  Json j = document("fan");
  j.update(fan_body(F));
  return j;
}

/// Chart maps of a morphism between known fans.
inline std::vector<ChartMap> read_chart_maps(const Json& j, const std::string& path, const KatoFan& S,
                                             const KatoFan& T) {
  read_array(j, path);
  std::vector<ChartMap> maps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    Fields c(j[k], path + "[" + std::to_string(k) + "]");
    ChartMap m;
    m.target_chart = read_index(c.required("target"), c.at("target"));
    if (m.target_chart >= T.chart_count()) throw SchemaError(c.at("target") + ": chart index out of range");
    if (k >= S.chart_count()) throw SchemaError(c.path() + ": more chart maps than source charts");
    m.matrix = read_matrix(c.required("matrix"), c.at("matrix"), S.chart(k).rank(), T.chart(m.target_chart).rank());
    c.finish();
    maps.push_back(std::move(m));
  }
  return maps;
}

inline Json chart_maps_json(const std::vector<ChartMap>& maps) {
  Json a = Json::array();
  for (const auto& m : maps) {
    Json e = Json::object();
    e["target"] = m.target_chart;
    e["matrix"] = matrix_json(m.matrix);
    a.push_back(std::move(e));
  }
  return a;
}

inline KatoFanMorphism read_morphism(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "morphism", top);
  KatoFan S = read_fan(f.required("source"), f.at("source"));
  KatoFan T = read_fan(f.required("target"), f.at("target"));
  auto maps = read_chart_maps(f.required("charts"), f.at("charts"), S, T);
  f.finish();
  return KatoFanMorphism(std::move(S), std::move(T), std::move(maps));
}

inline Json morphism_body(const KatoFanMorphism& m) {
  Json j = Json::object();
  j["source"] = fan_body(m.source());
  j["target"] = fan_body(m.target());
  j["charts"] = chart_maps_json(m.chart_maps());
  return j;
}

inline Json morphism_json(const KatoFanMorphism& m) {
  Json j = document("morphism");
  j.update(morphism_body(m));
  return j;
}

inline ToricFan read_toric(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "toric", top);
  ToricFan t;
  t.dimension = read_index(f.required("dimension"), f.at("dimension"));
  const Json& cs = read_array(f.required("cones"), f.at("cones"));
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::string p = f.at("cones") + "[" + std::to_string(k) + "]";
    read_array(cs[k], p);
    std::vector<IntVector> rays;
    for (std::size_t r = 0; r < cs[k].size(); ++r)
      rays.push_back(read_vector(cs[k][r], p + "[" + std::to_string(r) + "]", t.dimension));
    t.cones.push_back(std::move(rays));
  }
  f.finish();
  return t;
}

inline Json toric_json(const ToricFan& t) {
  Json j = document("toric");
  j["dimension"] = t.dimension;
  Json cs = Json::array();
  for (const auto& c : t.cones) {
    Json rs = Json::array();
    for (const auto& r : c) rs.push_back(vector_json(r));
    cs.push_back(std::move(rs));
  }
  j["cones"] = std::move(cs);
  return j;
}

// ---------------------------------------------------------------------------
// Groupoids and actions

/// s or t: {"charts": [...]}, optionally repeating "source" and "target".
inline KatoFanMorphism read_structure_map(const Json& j, const std::string& path, const KatoFan& R,
                                          const KatoFan& U) {
  Fields f(j, path);
  header(f, "morphism", false);
  if (const Json* s = f.optional("source"))
    if (fan_body(read_fan(*s, f.at("source"))) != fan_body(R)) throw SchemaError(f.at("source") + ": must equal R");
  if (const Json* t = f.optional("target"))
    if (fan_body(read_fan(*t, f.at("target"))) != fan_body(U)) throw SchemaError(f.at("target") + ": must equal U");
  auto maps = read_chart_maps(f.required("charts"), f.at("charts"), R, U);
  f.finish();
  return KatoFanMorphism(R, U, std::move(maps));
}

inline KatoGroupoid read_groupoid(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "groupoid", top);
  KatoFan U = read_fan(f.required("U"), f.at("U"));
  KatoFan R = read_fan(f.required("R"), f.at("R"));
  KatoFanMorphism s = read_structure_map(f.required("s"), f.at("s"), R, U);
  KatoFanMorphism t = read_structure_map(f.required("t"), f.at("t"), R, U);
  const Json* comp = f.optional("composition");
  const Json* unit = f.optional("unit");
  const Json* inv = f.optional("inverse");
  std::optional<GroupoidTables> tables;
  if (comp || unit || inv) {
    if (!comp) throw SchemaError(f.at("composition") + ": required when unit or inverse is given");
    if (!unit) throw SchemaError(f.at("unit") + ": required when composition or inverse is given");
    if (!inv) throw SchemaError(f.at("inverse") + ": required when composition or unit is given");
    GroupoidTables tb;
    read_array(*comp, f.at("composition"));
    for (std::size_t k = 0; k < comp->size(); ++k) {
      auto v = read_indices((*comp)[k], f.at("composition") + "[" + std::to_string(k) + "]");
      if (v.size() != 3) throw SchemaError(f.at("composition") + "[" + std::to_string(k) + "]: expected [a, b, c]");
      tb.composition.push_back({v[0], v[1], v[2]});
    }
    tb.unit = read_indices(*unit, f.at("unit"));
    tb.inverse = read_indices(*inv, f.at("inverse"));
    tables = std::move(tb);
  }
  f.finish();
  return KatoGroupoid{std::move(U), std::move(R), std::move(s), std::move(t), std::move(tables)};
}

inline Json groupoid_json(const KatoGroupoid& g) {
  Json j = document("groupoid");
  j["U"] = fan_body(g.U);
  j["R"] = fan_body(g.R);
  j["s"] = Json{{"charts", chart_maps_json(g.s.chart_maps())}};
  j["t"] = Json{{"charts", chart_maps_json(g.t.chart_maps())}};
  if (g.tables) {
    Json c = Json::array();
    for (const auto& [a, b, r] : g.tables->composition) c.push_back(Json::array({a, b, r}));
    j["composition"] = std::move(c);
    j["unit"] = indices_json(g.tables->unit);
    j["inverse"] = indices_json(g.tables->inverse);
  }
  return j;
}

inline GroupAction read_action(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "action", top);
  GroupAction a;
  a.monoid = read_monoid(f.required("monoid"), f.at("monoid"));
  const Json& gs = read_array(f.required("generators"), f.at("generators"));
  for (std::size_t k = 0; k < gs.size(); ++k)
    a.generators.push_back(read_matrix(gs[k], f.at("generators") + "[" + std::to_string(k) + "]", a.monoid.rank(),
                                       a.monoid.rank()));
  f.finish();
  return a;
}

inline Json action_json(const GroupAction& a) {
  Json j = document("action");
  j["monoid"] = monoid_body(a.monoid);
  Json gs = Json::array();
  for (const auto& m : a.generators) gs.push_back(matrix_json(m));
  j["generators"] = std::move(gs);
  return j;
}

// ---------------------------------------------------------------------------
// Points, arcs, polynomials

/// A point together with the chart it sits on (0 for affine documents).
struct PointDoc {
  std::size_t chart = 0;
  ExtendedConePoint point;
  bool has_monoid = false;  ///< the document carried its own monoid
};

/// The sign check runs before anything else so it is reported first.
inline void check_finite_part(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("finite_part") || !j["finite_part"].is_array()) return;
  const Json& a = j["finite_part"];
  for (std::size_t k = 0; k < a.size(); ++k)
    if (read_rational(a[k], path + ".finite_part[" + std::to_string(k) + "]") < 0)
      throw SchemaError("finite_part must be nonnegative");
}

/**
 * Point {monoid?, chart?, infinity_prime, finite_part}. The monoid comes
 * from the document or, failing that, from chart `chart` of `fan`.
 */
inline PointDoc read_point_fields(Fields& f, const KatoFan* fan) {
  PointDoc d;
  auto values = read_rationals(f.required("finite_part"), f.at("finite_part"));
  std::optional<AffineMonoid> P;
  if (const Json* m = f.optional("monoid")) {
    P = read_monoid(*m, f.at("monoid"));
    d.has_monoid = true;
  }
  if (const Json* c = f.optional("chart")) d.chart = read_index(*c, f.at("chart"));
  if (fan) {
    if (d.chart >= fan->chart_count()) throw SchemaError(f.at("chart") + ": chart index out of range");
    if (P && !(*P == fan->chart(d.chart))) throw SchemaError(f.at("monoid") + ": does not match the chart");
    P = fan->chart(d.chart);
  }
  if (!P) throw SchemaError(f.at("monoid") + ": required");
  Prime q = read_prime(f.required("infinity_prime"), f.at("infinity_prime"), *P);
  d.point = ExtendedConePoint::make(*P, q, values);
  return d;
}

inline PointDoc read_point(const Json& j, const std::string& path, bool top = false, const KatoFan* fan = nullptr) {
  check_finite_part(j, path);
  Fields f(j, path);
  header(f, "point", top);
  PointDoc d = read_point_fields(f, fan);
  f.finish();
  return d;
}

inline Json point_fields(const ExtendedConePoint& u, std::optional<std::size_t> chart, bool with_monoid) {
  Json j = Json::object();
  if (with_monoid) j["monoid"] = monoid_body(u.monoid());
  if (chart) j["chart"] = *chart;
  j["infinity_prime"] = indices_json(u.infinity_prime().generators);
  Json fp = Json::array();
  for (const auto& v : u.finite_part()) fp.push_back(rational_json(v));
  j["finite_part"] = std::move(fp);
  return j;
}

inline Json point_json(const ExtendedConePoint& u, std::optional<std::size_t> chart = std::nullopt,
                       bool with_monoid = true) {
  Json j = document("point");
  j.update(point_fields(u, chart, with_monoid));
  return j;
}

struct ArcDoc {
  std::size_t chart = 0;
  ArcPoint point;
};

inline ArcDoc read_arcpoint(const Json& j, const std::string& path, bool top = false, const KatoFan* fan = nullptr) {
  check_finite_part(j, path);
  Fields f(j, path);
  header(f, "arcpoint", top);
  PointDoc d = read_point_fields(f, fan);
  auto coeffs = read_rationals(f.required("coeffs"), f.at("coeffs"));
  f.finish();
  return ArcDoc{d.chart, ArcPoint::make(d.point, coeffs)};
}

inline Json arcpoint_json(const ArcPoint& x, std::optional<std::size_t> chart = std::nullopt,
                          bool with_monoid = true) {
  Json j = document("arcpoint");
  j.update(point_fields(x.exponents(), chart, with_monoid));
  Json cs = Json::array();
  for (const auto& c : x.coeffs()) cs.push_back(rational_json(c));
  j["coeffs"] = std::move(cs);
  return j;
}

inline MonPolynomial read_polynomial(const Json& j, const std::string& path, bool top = false) {
  Fields f(j, path);
  header(f, "polynomial", top);
  AffineMonoid P = read_monoid(f.required("monoid"), f.at("monoid"));
  const Json& ts = read_array(f.required("terms"), f.at("terms"));
  MonPolynomial poly(P);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    Fields t(ts[k], f.at("terms") + "[" + std::to_string(k) + "]");
    IntVector e = read_vector(t.required("exp"), t.at("exp"), P.rank());
    Rational c = read_rational(t.required("coeff"), t.at("coeff"));
    t.finish();
    poly.add_term(e, c);
  }
  f.finish();
  return poly;
}

inline Json polynomial_json(const MonPolynomial& p) {
  Json j = document("polynomial");
  j["monoid"] = monoid_body(p.monoid());
  Json ts = Json::array();
  for (const auto& [e, c] : p.terms()) ts.push_back(Json{{"exp", vector_json(e)}, {"coeff", rational_json(c)}});
  j["terms"] = std::move(ts);
  return j;
}

// ---------------------------------------------------------------------------
// Files

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(origin + ": JSON parse error: " + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_text(text, path);
}

/// The "kind" of a top-level document, checked against the known kinds.
inline std::string kind_of(const Json& j) {
  if (!j.is_object()) throw SchemaError("document: expected an object");
  auto it = j.find("kind");
  if (it == j.end()) throw SchemaError("document.kind: required");
  if (!it->is_string()) throw SchemaError("document.kind: expected a string");
  static const std::set<std::string> kinds{"monoid", "hom",      "fan",        "morphism", "groupoid", "action",
                                           "point",  "arcpoint", "polynomial", "report",   "toric"};
  std::string k = it->get<std::string>();
  if (!kinds.count(k)) throw SchemaError("document.kind: unknown kind \"" + k + "\"");
  return k;
}

namespace detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const Json& x) {
                            return x.is_primitive();
                          })))
      return false;
  return true;
}

/// Compact form with a space after each comma.
inline std::string spaced(const Json& j) {
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + spaced(j[k]);
  return s + "]";
}

inline void write_json(const Json& j, std::string& out, int indent) {
  if (is_flat(j)) {
    out += spaced(j);
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write_json(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad + Json(it.key()).dump() + ": ";
    write_json(it.value(), out, indent + 2);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += close + "}";
}

}  // namespace detail

/// Two-space indentation; arrays of scalars (or of scalar arrays) stay on one line.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write_json(j, out, 0);
  return out + "\n";
}

}  // namespace katofan::io
