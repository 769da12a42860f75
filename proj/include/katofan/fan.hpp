#pragma once

/**
 * @file fan.hpp
 * @brief Kato fans presented by sharp fs charts glued along face localizations.
 *
 * A gluing (i, A, j, B, iso) identifies the open subset D(A) of Spec P_i with
 * D(B) of Spec P_j through an isomorphism of the sharp localizations.
 * Points are (chart, prime) pairs up to the equivalence these gluings
 * generate. Morphisms are stored contravariantly, one monoid hom per source
 * chart.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "katofan/monoid.hpp"

namespace katofan {

struct Gluing {
  std::size_t i = 0;
  Face face_i;
  std::size_t j = 0;
  Face face_j;
  IntMatrix iso;  ///< sharp_localize(P_i, face_i) -> sharp_localize(P_j, face_j)
};

struct FanPoint {
  std::size_t chart = 0;
  Prime prime;
  friend auto operator<=>(const FanPoint&, const FanPoint&) = default;
};

/// A gluing read in one direction.
struct GluingEdge {
  std::size_t gluing = 0;
  bool forward = true;
  std::size_t from = 0;
  std::size_t to = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

class KatoFan {
 public:
  KatoFan() : KatoFan(std::vector<AffineMonoid>{zero_monoid()}, {}) {}

  /**
   * Validates and saturates the charts, checks every gluing iso and the
   * induced identification of points. Throws DomainError on failure.
   */
  KatoFan(std::vector<AffineMonoid> charts, std::vector<Gluing> gluings)
      : charts_(std::move(charts)), gluings_(std::move(gluings)) {
    for (std::size_t c = 0; c < charts_.size(); ++c) {
      if (!charts_[c].is_sharp()) throw DomainError("fan chart " + std::to_string(c) + " is not sharp");
      AffineMonoid sat = saturate(charts_[c]);
      saturation_homs_.push_back(MonoidHom{charts_[c], sat, IntMatrix::identity(sat.rank())});
      charts_[c] = std::move(sat);
      faces_.push_back(faces(charts_[c]));
    }
    for (std::size_t g = 0; g < gluings_.size(); ++g) prepare_gluing(g);
    build_points();
  }

  std::size_t chart_count() const { return charts_.size(); }
  const std::vector<AffineMonoid>& charts() const { return charts_; }
  const AffineMonoid& chart(std::size_t c) const {
    if (c >= charts_.size()) throw DomainError("chart index " + std::to_string(c) + " out of range");
    return charts_[c];
  }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  /// P -> P^sat for each chart as supplied.
  const std::vector<MonoidHom>& saturation_homs() const { return saturation_homs_; }
  const std::vector<Face>& chart_faces(std::size_t c) const { return faces_.at(c); }

  /// Directed gluing edges leaving chart c.
  std::vector<GluingEdge> edges_from(std::size_t c) const {
    std::vector<GluingEdge> out;
    for (std::size_t g = 0; g < gluings_.size(); ++g) {
      if (gluings_[g].i == c) out.push_back({g, true, gluings_[g].i, gluings_[g].j});
      if (gluings_[g].j == c) out.push_back({g, false, gluings_[g].j, gluings_[g].i});
    }
    return out;
  }

  const Face& edge_face_from(const GluingEdge& e) const {
    return e.forward ? gluings_[e.gluing].face_i : gluings_[e.gluing].face_j;
  }
  const MonoidHom& edge_localization_from(const GluingEdge& e) const {
    return e.forward ? local_[e.gluing].first : local_[e.gluing].second;
  }
  const MonoidHom& edge_localization_to(const GluingEdge& e) const {
    return e.forward ? local_[e.gluing].second : local_[e.gluing].first;
  }
  /// Iso between the localized charts in the direction of the edge.
  const IntMatrix& edge_iso(const GluingEdge& e) const {
    return e.forward ? gluings_[e.gluing].iso : iso_inverse_[e.gluing];
  }

  /// Image of the point with face G across an edge, if it lies in the glued open.
  std::optional<Face> transport_face(const GluingEdge& e, const Face& G) const {
    const Face& A = edge_face_from(e);
    if (!std::includes(G.generators.begin(), G.generators.end(), A.generators.begin(), A.generators.end()))
      return std::nullopt;
    const MonoidHom& lam = edge_localization_from(e);
    const MonoidHom& mu = edge_localization_to(e);
    std::vector<IntVector> imgs;
    for (auto k : G.generators) imgs.push_back(edge_iso(e).apply(lam(charts_[e.from].generator(k))));
    Face H = face_closure(mu.target, imgs);
    return preimage_face(mu, H);
  }

  /**
   * Iso of local sharp monoids P_from/G -> P_to/G' induced by an edge, where
   * G' = transport_face(e, G).
   */
  IntMatrix transport_local(const GluingEdge& e, const Face& G) const {
    auto Gp = transport_face(e, G);
    if (!Gp) throw DomainError("transport_local: point outside the glued open");
    auto [Ma, nu_a] = sharp_localize(charts_[e.from], G);
    auto [Mb, nu_b] = sharp_localize(charts_[e.to], *Gp);
    const MonoidHom& mu = edge_localization_to(e);
    IntMatrix rho_b = factor_through(nu_b.matrix, mu.matrix);
    IntMatrix h = rho_b * edge_iso(e) * edge_localization_from(e).matrix;
    return factor_through(h, nu_a.matrix);
  }

  /// Canonical representative of the class of a point.
  FanPoint canonical(const FanPoint& x) const { return points_[point_index(x)]; }

  /// Index into points() of the class containing x.
  std::size_t point_index(const FanPoint& x) const {
    return class_of_.at(node_of(x.chart, face_of(chart(x.chart), x.prime)));
  }

  bool same_point(const FanPoint& a, const FanPoint& b) const { return point_index(a) == point_index(b); }

  /// Class representatives, ordered by (chart, prime) of the representative.
  const std::vector<FanPoint>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }

  /// All (chart, prime) pairs in the class of points()[k].
  std::vector<FanPoint> members(std::size_t k) const {
    std::vector<FanPoint> out;
    for (std::size_t n = 0; n < nodes_.size(); ++n)
      if (class_of_[n] == k) out.push_back(FanPoint{nodes_[n].first, prime_of(charts_[nodes_[n].first], faces_[nodes_[n].first][nodes_[n].second])});
    return out;
  }

  /// True when b lies in the closure of a.
  bool specializes(const FanPoint& a, const FanPoint& b) const {
    for (const auto& x : members(point_index(a)))
      for (const auto& y : members(point_index(b)))
        if (x.chart == y.chart &&
            std::includes(y.prime.generators.begin(), y.prime.generators.end(), x.prime.generators.begin(),
                          x.prime.generators.end()))
          return true;
    return false;
  }

  /// A chain of edges leading from chart representative a to b, both in one class.
  std::optional<std::vector<GluingEdge>> path_between(const FanPoint& a, const FanPoint& b) const {
    using State = std::pair<std::size_t, Face>;
    State start{a.chart, face_of(chart(a.chart), a.prime)};
    State goal{b.chart, face_of(chart(b.chart), b.prime)};
    std::map<State, std::pair<State, GluingEdge>> parent;
    std::set<State> seen{start};
    std::queue<State> q;
    q.push(start);
    while (!q.empty()) {
      State cur = q.front();
      q.pop();
      if (cur == goal) {
        std::vector<GluingEdge> path;
        while (cur != start) {
          auto& [prev, e] = parent.at(cur);
          path.push_back(e);
          cur = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (const auto& e : edges_from(cur.first)) {
        auto next = transport_face(e, cur.second);
        if (!next) continue;
        State s{e.to, *next};
        if (seen.insert(s).second) {
          parent.emplace(s, std::make_pair(cur, e));
          q.push(s);
        }
      }
    }
    return std::nullopt;
  }

  /// Iso M_a -> M_b of local sharp monoids for two representatives of one point.
  IntMatrix local_transport(const FanPoint& a, const FanPoint& b) const {
    auto path = path_between(a, b);
    if (!path) throw DomainError("local_transport: points are not identified");
    Face G = face_of(chart(a.chart), a.prime);
    IntMatrix acc = IntMatrix::identity(sharp_localize(chart(a.chart), G).first.rank());
    for (const auto& e : *path) {
      acc = transport_local(e, G) * acc;
      G = *transport_face(e, G);
    }
    return acc;
  }

  /// Local sharp monoid at a point, with the localization from its chart.
  std::pair<AffineMonoid, MonoidHom> local_monoid(const FanPoint& x) const {
    return sharp_localize(chart(x.chart), face_of(chart(x.chart), x.prime));
  }

 private:
  std::size_t node_of(std::size_t c, const Face& F) const {
    const auto& fs = faces_.at(c);
    auto it = std::find(fs.begin(), fs.end(), F);
    if (it == fs.end()) throw DomainError("not a prime of chart " + std::to_string(c));
    return offsets_[c] + static_cast<std::size_t>(it - fs.begin());
  }

  void prepare_gluing(std::size_t g) {
    const Gluing& gl = gluings_[g];
    const std::string tag = "gluing " + std::to_string(g);
    if (gl.i >= charts_.size() || gl.j >= charts_.size()) throw DomainError(tag + ": chart index out of range");
    if (!is_face(charts_[gl.i], gl.face_i)) throw DomainError(tag + ": face_i is not a face");
    if (!is_face(charts_[gl.j], gl.face_j)) throw DomainError(tag + ": face_j is not a face");
    auto a = sharp_localize(charts_[gl.i], gl.face_i);
    auto b = sharp_localize(charts_[gl.j], gl.face_j);
    if (gl.iso.rows() != b.first.rank() || gl.iso.cols() != a.first.rank())
      throw DimensionError(tag + ": iso has the wrong shape");
    if (!detail::is_monoid_iso(gl.iso, a.first, b.first)) throw DomainError(tag + ": iso is not an isomorphism");
    local_.emplace_back(a.second, b.second);
    iso_inverse_.push_back(inverse_unimodular(gl.iso));
  }

  void build_points() {
    std::size_t total = 0;
    for (const auto& fs : faces_) {
      offsets_.push_back(total);
      for (std::size_t k = 0; k < fs.size(); ++k) nodes_.emplace_back(offsets_.size() - 1, k);
      total += fs.size();
    }
    detail::UnionFind uf(total);
    for (std::size_t c = 0; c < charts_.size(); ++c)
      for (const auto& e : edges_from(c)) {
        if (!e.forward) continue;
        for (const auto& G : faces_[c])
          if (auto H = transport_face(e, G)) uf.unite(node_of(c, G), node_of(e.to, *H));
      }
    std::map<std::size_t, std::size_t> root_class;
    class_of_.assign(total, 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::size_t root = uf.find(n);
      auto [it, fresh] = root_class.emplace(root, points_.size());
      if (fresh) {
        std::size_t c = nodes_[n].first;
        points_.push_back(FanPoint{c, prime_of(charts_[c], faces_[c][nodes_[n].second])});
      } else if (nodes_[n].first == nodes_[root].first) {
        throw DomainError("gluings identify two distinct points of chart " + std::to_string(nodes_[n].first));
      }
      class_of_[n] = it->second;
    }
  }

  std::vector<AffineMonoid> charts_;
  std::vector<Gluing> gluings_;
  std::vector<MonoidHom> saturation_homs_;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::pair<MonoidHom, MonoidHom>> local_;
  std::vector<IntMatrix> iso_inverse_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::size_t, std::size_t>> nodes_;
  std::vector<std::size_t> class_of_;
  std::vector<FanPoint> points_;
};

/// Spec P as a one-chart fan.
inline KatoFan spec_fan(const AffineMonoid& P) {
  if (!P.is_sharp()) throw DomainError("spec_fan: monoid is not sharp");
  if (!P.is_saturated()) throw DomainError("spec_fan: monoid is not saturated");
  return KatoFan({P}, {});
}

// ---------------------------------------------------------------------------
// Morphisms

struct ChartMap {
  std::size_t target_chart = 0;
  IntMatrix matrix;  ///< P^target_{target_chart} -> P^source_i
};

class KatoFanMorphism {
 public:
  KatoFanMorphism() = default;

  /// Validates every chart hom and the compatibility of the point map with gluings.
  KatoFanMorphism(KatoFan source, KatoFan target, std::vector<ChartMap> charts)
      : source_(std::move(source)), target_(std::move(target)), maps_(std::move(charts)) {
    if (maps_.size() != source_.chart_count())
      throw DomainError("morphism: expected one chart map per source chart");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      const auto& m = maps_[i];
      const AffineMonoid& Q = target_.chart(m.target_chart);
      try {
        reports_.push_back(validate_hom(m.matrix, Q, source_.chart(i)));
      } catch (const DomainError& e) {
        throw DomainError("morphism chart " + std::to_string(i) + ": " + e.what());
      }
    }
    for (std::size_t k = 0; k < source_.point_count(); ++k) {
      auto ms = source_.members(k);
      FanPoint image = apply(ms.front());
      for (const auto& x : ms)
        if (!target_.same_point(apply(x), image))
          throw DomainError("morphism: point map is not compatible with the gluings");
    }
  }

  const KatoFan& source() const { return source_; }
  const KatoFan& target() const { return target_; }
  const std::vector<ChartMap>& chart_maps() const { return maps_; }
  const HomReport& chart_report(std::size_t i) const { return reports_.at(i); }
  MonoidHom chart_hom(std::size_t i) const { return reports_.at(i).hom; }

  /// Image of a source point, in canonical form.
  FanPoint apply(const FanPoint& x) const {
    const auto& m = maps_.at(x.chart);
    const MonoidHom& h = reports_.at(x.chart).hom;
    Face G = face_of(source_.chart(x.chart), x.prime);
    Face pre = preimage_face(h, G);
    return target_.canonical(FanPoint{m.target_chart, prime_of(target_.chart(m.target_chart), pre)});
  }

  /**
   * Local hom M_{f(x)} -> M_x between the sharp local monoids at x and its
   * image, for x given in a source chart.
   */
  std::pair<FanPoint, IntMatrix> germ(const FanPoint& x) const {
    const auto& m = maps_.at(x.chart);
    const MonoidHom& h = reports_.at(x.chart).hom;
    Face G = face_of(source_.chart(x.chart), x.prime);
    Face pre = preimage_face(h, G);
    auto [Mx, nu] = sharp_localize(source_.chart(x.chart), G);
    auto [My, nu_t] = sharp_localize(target_.chart(m.target_chart), pre);
    IntMatrix g = factor_through(nu.matrix * h.matrix, nu_t.matrix);
    return {FanPoint{m.target_chart, prime_of(target_.chart(m.target_chart), pre)}, g};
  }

 private:
  KatoFan source_;
  KatoFan target_;
  std::vector<ChartMap> maps_;
  std::vector<HomReport> reports_;
};

inline KatoFanMorphism identity_morphism(const KatoFan& F) {
  std::vector<ChartMap> maps;
  for (std::size_t i = 0; i < F.chart_count(); ++i) maps.push_back({i, IntMatrix::identity(F.chart(i).rank())});
  return KatoFanMorphism(F, F, maps);
}

/// Strict iff every chart hom is an isomorphism onto a face localization.
inline bool is_strict(const KatoFanMorphism& f) {
  for (std::size_t i = 0; i < f.chart_maps().size(); ++i)
    if (!f.chart_report(i).is_face_localization) return false;
  return true;
}

/// Surjectivity of the point map.
inline bool is_surjective(const KatoFanMorphism& f) {
  std::vector<bool> hit(f.target().point_count(), false);
  for (std::size_t i = 0; i < f.source().chart_count(); ++i)
    for (const auto& G : f.source().chart_faces(i))
      hit[f.target().point_index(f.apply(FanPoint{i, prime_of(f.source().chart(i), G)}))] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Toric input

/// A fan of pointed rational cones in Z^dimension, each given by ray generators.
struct ToricFan {
  std::size_t dimension = 0;
  std::vector<std::vector<IntVector>> cones;
};

struct ToricFanResult {
  KatoFan fan;
  std::vector<std::vector<IntVector>> maximal_cones;  ///< primitive rays, one entry per chart
  std::size_t cone_count = 0;                         ///< all faces of all cones
};

namespace detail {

inline std::vector<IntVector> normalize_rays(const std::vector<IntVector>& rays, std::size_t n) {
  std::set<IntVector> out;
  for (const auto& r : rays) {
    if (r.size() != n) throw DimensionError("toric fan: ray length does not match the dimension");
    if (is_zero(r)) continue;
    out.insert(primitive(r));
  }
  return {out.begin(), out.end()};
}

// Ray subsets cutting out the faces of the pointed cone spanned by `rays`.
inline std::set<std::vector<IntVector>> cone_faces(const std::vector<IntVector>& rays, std::size_t n) {
  std::set<std::vector<IntVector>> out{std::vector<IntVector>{}};
  if (rays.empty()) return out;
  auto basis = saturated_span(rays, n);
  const std::size_t k = basis.size();
  std::vector<IntVector> coords;
  for (const auto& r : rays) coords.push_back(*lattice_membership(basis, r));
  auto facets = cone_facets(coords, k);
  if (!lineality_basis(facets, k).empty()) throw DomainError("toric fan: cone is not pointed");
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue(1);
  for (std::size_t i = 0; i < rays.size(); ++i) queue[0].push_back(i);
  seen.insert(queue[0]);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& f : facets) {
      std::vector<std::size_t> meet;
      for (auto i : queue[h])
        if (dot(f, coords[i]) == 0) meet.push_back(i);
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  for (const auto& s : seen) {
    std::vector<IntVector> face;
    for (auto i : s) face.push_back(rays[i]);
    out.insert(face);
  }
  return out;
}

// Exists h with h = 0 on shared rays, h >= 1 on the rest of a, h <= -1 on the rest of b?
inline bool cones_meet_in_face(const std::vector<IntVector>& a, const std::vector<IntVector>& b, std::size_t n) {
  std::vector<LinearConstraint> eq, ge;
  for (const auto& r : a) {
    RatVector row(r.begin(), r.end());
    if (std::binary_search(b.begin(), b.end(), r))
      eq.push_back({row, 0});
    else
      ge.push_back({row, 1});
  }
  for (const auto& r : b) {
    if (std::binary_search(a.begin(), a.end(), r)) continue;
    RatVector row;
    for (const auto& x : r) row.emplace_back(-x);
    ge.push_back({row, 1});
  }
  return fm_feasible(n, eq, ge);
}

struct ToricChart {
  std::vector<IntVector> rays;
  std::vector<IntVector> basis;  ///< of span(cone) ∩ Z^n
  AffineMonoid monoid;           ///< dual cone in coordinates dual to `basis`
};

inline ToricChart toric_chart(const std::vector<IntVector>& rays, std::size_t n) {
  ToricChart c;
  c.rays = rays;
  c.basis = saturated_span(rays, n);
  const std::size_t k = c.basis.size();
  std::vector<IntVector> coords;
  for (const auto& r : rays) coords.push_back(*lattice_membership(c.basis, r));
  auto dual_rays = cone_facets(coords, k);
  c.monoid = make_monoid(k, hilbert_basis(k, dual_rays));
  return c;
}

// Restriction of the chart's dual lattice to span(tau) ∩ Z^n.
inline IntMatrix restriction(const ToricChart& c, const std::vector<IntVector>& tau_basis) {
  IntMatrix r(tau_basis.size(), c.basis.size());
  for (std::size_t i = 0; i < tau_basis.size(); ++i) {
    auto coords = lattice_membership(c.basis, tau_basis[i]);
    if (!coords) throw DomainError("toric fan: face lattice is not contained in the cone lattice");
    for (std::size_t j = 0; j < c.basis.size(); ++j) r(i, j) = (*coords)[j];
  }
  return r;
}

}  // namespace detail

/**
 * The Kato fan of a toric fan: one chart per maximal cone (the sharpened
 * dual monoid), glued along the dual faces of pairwise intersections.
 */
inline ToricFanResult from_toric_fan(const ToricFan& input) {
  const std::size_t n = input.dimension;
  std::vector<std::vector<IntVector>> cones;
  for (const auto& c : input.cones) cones.push_back(detail::normalize_rays(c, n));
  if (cones.empty()) cones.emplace_back();

  std::set<std::vector<IntVector>> all_cones;
  std::vector<std::set<std::vector<IntVector>>> face_sets;
  for (const auto& c : cones) {
    face_sets.push_back(detail::cone_faces(c, n));
    all_cones.insert(face_sets.back().begin(), face_sets.back().end());
  }

  ToricFanResult out;
  std::set<std::vector<IntVector>> seen_max;
  for (std::size_t a = 0; a < cones.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < cones.size() && maximal; ++b)
      if (cones[b].size() > cones[a].size() &&
          std::includes(cones[b].begin(), cones[b].end(), cones[a].begin(), cones[a].end()))
        maximal = false;
    if (maximal && seen_max.insert(cones[a]).second) out.maximal_cones.push_back(cones[a]);
  }
  for (std::size_t a = 0; a < cones.size(); ++a) {
    bool is_face_of_max = false;
    for (std::size_t m = 0; m < out.maximal_cones.size() && !is_face_of_max; ++m)
      if (detail::cone_faces(out.maximal_cones[m], n).count(cones[a])) is_face_of_max = true;
    if (!is_face_of_max) throw DomainError("toric fan: cone " + std::to_string(a) + " is not a face of a maximal cone");
  }
  for (std::size_t a = 0; a < out.maximal_cones.size(); ++a)
    for (std::size_t b = a + 1; b < out.maximal_cones.size(); ++b)
      if (!detail::cones_meet_in_face(out.maximal_cones[a], out.maximal_cones[b], n))
        throw DomainError("toric fan: cones " + std::to_string(a) + " and " + std::to_string(b) +
                          " do not meet in a common face");

  std::vector<detail::ToricChart> charts;
  for (const auto& c : out.maximal_cones) charts.push_back(detail::toric_chart(c, n));
  std::vector<Gluing> gluings;
  for (std::size_t a = 0; a < charts.size(); ++a)
    for (std::size_t b = a + 1; b < charts.size(); ++b) {
      std::vector<IntVector> shared;
      std::set_intersection(charts[a].rays.begin(), charts[a].rays.end(), charts[b].rays.begin(),
                            charts[b].rays.end(), std::back_inserter(shared));
      auto tau_basis = saturated_span(shared, n);
      auto dual_face = [&](const detail::ToricChart& c) {
        Face F;
        // m vanishes on tau iff its pairing with every shared ray is zero
        for (std::size_t g = 0; g < c.monoid.size(); ++g) {
          bool zero = true;
          for (const auto& ray : shared) {
            IntVector coords = *lattice_membership(c.basis, ray);
            if (dot(c.monoid.generator(g), coords) != 0) zero = false;
          }
          if (zero) F.generators.push_back(g);
        }
        return F;
      };
      Face Fa = dual_face(charts[a]), Fb = dual_face(charts[b]);
      auto la = sharp_localize(charts[a].monoid, Fa).second;
      auto lb = sharp_localize(charts[b].monoid, Fb).second;
      IntMatrix ka = factor_through(detail::restriction(charts[a], tau_basis), la.matrix);
      IntMatrix kb = factor_through(detail::restriction(charts[b], tau_basis), lb.matrix);
      gluings.push_back(Gluing{a, Fa, b, Fb, inverse_unimodular(kb) * ka});
    }
  std::vector<AffineMonoid> monoids;
  for (const auto& c : charts) monoids.push_back(c.monoid);
  out.fan = KatoFan(std::move(monoids), std::move(gluings));
  out.cone_count = all_cones.size();
  return out;
}

// ---------------------------------------------------------------------------
// Fiber products

struct FiberProduct {
  KatoFan fan;
  KatoFanMorphism first;   ///< to the source of f
  KatoFanMorphism second;  ///< to the source of g
  /// (chart of F, chart of G) for each product chart
  std::vector<std::pair<std::size_t, std::size_t>> chart_pairs;
};

namespace detail {

struct ProductChart {
  std::size_t i, k;
  Pushout pushout;
  AffineMonoid monoid;  ///< sharpened pushout
  IntMatrix quotient;   ///< P_i^gp (+) Q_k^gp -> monoid^gp
  IntMatrix first, second;
};

}  // namespace detail

/**
 * F x_H G for morphisms f: F -> H and g: G -> H. Product charts are the
 * sharpened fs pushouts over pairs of charts lying over the same chart of H;
 * gluings are induced by pairs of gluings (or identities) of F and G.
 */
inline FiberProduct fiber_product(const KatoFanMorphism& f, const KatoFanMorphism& g) {
  const KatoFan& F = f.source();
  const KatoFan& G = g.source();
  const KatoFan& H = f.target();
  if (H.charts() != g.target().charts()) throw DomainError("fiber_product: morphisms have different targets");

  std::vector<detail::ProductChart> prods;
  for (std::size_t i = 0; i < F.chart_count(); ++i)
    for (std::size_t k = 0; k < G.chart_count(); ++k) {
      if (f.chart_maps()[i].target_chart != g.chart_maps()[k].target_chart) continue;
      Pushout po = fs_pushout(f.chart_hom(i), g.chart_hom(k));
      auto [T, sharp] = sharpen(po.monoid);
      IntMatrix first = sharp.matrix * po.first.matrix;
      IntMatrix second = sharp.matrix * po.second.matrix;
      prods.push_back({i, k, po, T, IntMatrix::hconcat(first, second), first, second});
    }
  if (prods.empty()) throw DomainError("fiber_product: no pair of charts lies over a common chart");

  struct Step {
    std::size_t to;
    Face face_from, face_to;
    IntMatrix iso;         // localized P_from -> localized P_to
    MonoidHom lam_from;    // P_from -> localized
    MonoidHom lam_to;
  };
  auto steps_of = [](const KatoFan& X, std::size_t c) {
    std::vector<Step> out;
    auto [M, lam] = sharp_localize(X.chart(c), minimal_face(X.chart(c)));
    out.push_back({c, minimal_face(X.chart(c)), minimal_face(X.chart(c)), IntMatrix::identity(M.rank()), lam, lam});
    for (const auto& e : X.edges_from(c))
      out.push_back({e.to, X.edge_face_from(e),
                     e.forward ? X.gluings()[e.gluing].face_j : X.gluings()[e.gluing].face_i, X.edge_iso(e),
                     X.edge_localization_from(e), X.edge_localization_to(e)});
    return out;
  };

  std::vector<Gluing> gluings;
  for (std::size_t a = 0; a < prods.size(); ++a)
    for (const auto& sf : steps_of(F, prods[a].i))
      for (const auto& sg : steps_of(G, prods[a].k)) {
        std::size_t b = prods.size();
        for (std::size_t c = 0; c < prods.size(); ++c)
          if (prods[c].i == sf.to && prods[c].k == sg.to) b = c;
        if (b == prods.size() || b <= a) continue;
        const auto& A = prods[a];
        const auto& B = prods[b];
        std::vector<IntVector> gens_a, gens_b;
        for (auto x : sf.face_from.generators) gens_a.push_back(A.first.apply(F.chart(A.i).generator(x)));
        for (auto x : sg.face_from.generators) gens_a.push_back(A.second.apply(G.chart(A.k).generator(x)));
        for (auto x : sf.face_to.generators) gens_b.push_back(B.first.apply(F.chart(B.i).generator(x)));
        for (auto x : sg.face_to.generators) gens_b.push_back(B.second.apply(G.chart(B.k).generator(x)));
        Face Ca = face_closure(A.monoid, gens_a), Cb = face_closure(B.monoid, gens_b);
        auto [La, lam_a] = sharp_localize(A.monoid, Ca);
        auto [Lb, lam_b] = sharp_localize(B.monoid, Cb);
        auto to_b_first = try_factor_through(lam_b.matrix * B.first, sf.lam_to.matrix);
        auto to_b_second = try_factor_through(lam_b.matrix * B.second, sg.lam_to.matrix);
        if (!to_b_first || !to_b_second) throw DomainError("fiber_product: incompatible gluing data");
        IntMatrix psi = IntMatrix::hconcat(*to_b_first * sf.iso * sf.lam_from.matrix,
                                           *to_b_second * sg.iso * sg.lam_from.matrix);
        auto iso = try_factor_through(psi, lam_a.matrix * A.quotient);
        if (!iso || !detail::is_monoid_iso(*iso, La, Lb)) throw DomainError("fiber_product: incompatible gluing data");
        gluings.push_back(Gluing{a, Ca, b, Cb, *iso});
      }

  std::vector<AffineMonoid> monoids;
  for (const auto& p : prods) monoids.push_back(p.monoid);
  KatoFan fan(monoids, gluings);
  std::vector<ChartMap> m1, m2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : prods) {
    m1.push_back({p.i, p.first});
    m2.push_back({p.k, p.second});
    pairs.emplace_back(p.i, p.k);
  }
  return FiberProduct{fan, KatoFanMorphism(fan, F, m1), KatoFanMorphism(fan, G, m2), pairs};
}

}  // namespace katofan
