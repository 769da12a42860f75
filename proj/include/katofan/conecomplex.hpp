#pragma once

/**
 * @file conecomplex.hpp
 * @brief Extended cones Hom(P, R̄≥0) and extended cone complexes of Kato fans.
 *
 * A point u is stored as the face on which it is finite together with its
 * values on the generators of that face. Internally it is also kept as a
 * pair of functionals (phi, ell): u(p) = ∞ when phi.p > 0 and ell.p
 * otherwise. Pulling back along a linear map is then a transpose.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "katofan/groupoid.hpp"

namespace katofan {

/// A value in R̄≥0 restricted to rationals: a nonnegative rational or ∞.
class ExtendedNonneg {
 public:
  ExtendedNonneg() = default;
  ExtendedNonneg(const Rational& v) : value_(v) {  // NOLINT: implicit by design
    if (v < 0) throw DomainError("extended value must be nonnegative");
  }
  ExtendedNonneg(int v) : ExtendedNonneg(Rational(v)) {}  // NOLINT
  static ExtendedNonneg infinity() {
    ExtendedNonneg x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw DomainError("value of ∞ requested");
    return value_;
  }

  friend ExtendedNonneg operator+(const ExtendedNonneg& a, const ExtendedNonneg& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedNonneg(a.value_ + b.value_);
  }
  friend bool operator==(const ExtendedNonneg& a, const ExtendedNonneg& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedNonneg& a, const ExtendedNonneg& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

class ExtendedConePoint {
 public:
  ExtendedConePoint() = default;

  /**
   * Point with u = ∞ on the prime and the given values on the generators of
   * the complementary face (in index order). Throws DomainError when the
   * prime is not a prime, a value is negative, or the values are not the
   * restriction of a linear functional.
   */
  static ExtendedConePoint make(const AffineMonoid& P, const Prime& infinity_prime,
                                const std::vector<Rational>& finite_part) {
    for (const auto& v : finite_part)
      if (v < 0) throw DomainError("finite_part must be nonnegative");
    for (std::size_t k = 0; k < infinity_prime.generators.size(); ++k)
      if (infinity_prime.generators[k] >= P.size() ||
          (k > 0 && infinity_prime.generators[k] <= infinity_prime.generators[k - 1]))
        throw DomainError("infinity_prime must list distinct generator indices in increasing order");
    Face G = face_of(P, infinity_prime);
    if (!is_face(P, G)) throw DomainError("infinity_prime is not a prime ideal");
    if (finite_part.size() != G.generators.size())
      throw DomainError("finite_part has " + std::to_string(finite_part.size()) + " entries, expected " +
                        std::to_string(G.generators.size()));
    std::vector<RatVector> rows;
    for (auto i : G.generators) rows.emplace_back(P.generator(i).begin(), P.generator(i).end());
    auto ell = solve_rational(rows, finite_part, P.rank());
    if (!ell) throw DomainError("finite_part is not additive on the face");
    ExtendedConePoint u;
    u.monoid_ = P;
    u.face_ = std::move(G);
    u.values_ = finite_part;
    u.ell_ = *std::move(ell);
    u.phi_ = supporting_functional(P, u.face_);
    return u;
  }

  /// Point given by functionals: ∞ where phi > 0, ell elsewhere.
  static ExtendedConePoint from_functionals(const AffineMonoid& P, const IntVector& phi, const RatVector& ell) {
    Prime q;
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < P.size(); ++i) {
      Int s = dot(phi, P.generator(i));
      if (s < 0) throw DomainError("functional is negative on the monoid");
      if (s > 0)
        q.generators.push_back(i);
      else
        vals.push_back(dot(ell, P.generator(i)));
    }
    return make(P, q, vals);
  }

  /// The point with the given value on every generator (∞ allowed).
  static ExtendedConePoint from_generator_values(const AffineMonoid& P, const std::vector<ExtendedNonneg>& vals) {
    if (vals.size() != P.size()) throw DimensionError("one value per generator expected");
    Prime q;
    std::vector<Rational> finite;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i].is_infinite())
        q.generators.push_back(i);
      else
        finite.push_back(vals[i].value());
    }
    return make(P, q, finite);
  }

  static ExtendedConePoint zero(const AffineMonoid& P) {
    return make(P, Prime{}, std::vector<Rational>(P.size(), Rational(0)));
  }

  const AffineMonoid& monoid() const { return monoid_; }
  const Face& finite_face() const { return face_; }
  Prime infinity_prime() const { return prime_of(monoid_, face_); }
  const std::vector<Rational>& finite_part() const { return values_; }
  const IntVector& phi() const { return phi_; }
  const RatVector& ell() const { return ell_; }

  /// u(p) for p in the ambient lattice; p must lie in P for this to mean anything.
  ExtendedNonneg value_at(const IntVector& p) const {
    if (p.size() != monoid_.rank()) throw DimensionError("evaluation: dimension mismatch");
    if (dot(phi_, p) > 0) return ExtendedNonneg::infinity();
    return ExtendedNonneg(dot(ell_, p));
  }

  /// Values on all generators of P, in index order; the canonical coordinates.
  std::vector<ExtendedNonneg> coordinates() const {
    std::vector<ExtendedNonneg> out;
    for (const auto& g : monoid_.generators()) out.push_back(value_at(g));
    return out;
  }

  friend bool operator==(const ExtendedConePoint& a, const ExtendedConePoint& b) {
    return a.monoid_ == b.monoid_ && a.face_ == b.face_ && a.values_ == b.values_;
  }

 private:
  AffineMonoid monoid_;
  Face face_;
  std::vector<Rational> values_;
  RatVector ell_;
  IntVector phi_;
};

/// Evaluation with a membership check on p.
inline ExtendedNonneg eval_extended(const ExtendedConePoint& u, const IntVector& p) {
  if (!u.monoid().contains(p)) throw DomainError("evaluation at an element outside the monoid");
  return u.value_at(p);
}

/// u^{-1}(∞).
inline Prime structure_map(const ExtendedConePoint& u) { return u.infinity_prime(); }

/// u^{-1}(R̄>0).
inline Prime reduction_map(const ExtendedConePoint& u) {
  Prime p;
  auto c = u.coordinates();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > ExtendedNonneg(0)) p.generators.push_back(i);
  return p;
}

/// u o h for h: P -> Q and u on Q.
inline ExtendedConePoint pullback(const ExtendedConePoint& u, const MonoidHom& h) {
  if (!(h.target == u.monoid())) throw DomainError("pullback: point is not on the target of the hom");
  IntMatrix ht = h.matrix.transpose();
  RatVector ell(h.source.rank(), Rational(0));
  for (std::size_t j = 0; j < h.source.rank(); ++j)
    for (std::size_t i = 0; i < h.target.rank(); ++i) ell[j] += Rational(h.matrix(i, j)) * u.ell()[i];
  return ExtendedConePoint::from_functionals(h.source, ht.apply(u.phi()), ell);
}

/// v o L where L is an arbitrary integer matrix Z^rank(P) -> Z^rank(u).
inline ExtendedConePoint pullback_linear(const ExtendedConePoint& u, const IntMatrix& L, const AffineMonoid& P) {
  return pullback(u, MonoidHom{P, u.monoid(), L});
}

/// True when u vanishes on every generator of F.
inline bool vanishes_on(const ExtendedConePoint& u, const Face& F) {
  for (auto i : F.generators)
    if (u.value_at(u.monoid().generator(i)) != ExtendedNonneg(0)) return false;
  return true;
}

/**
 * The unique v on the target of a strict hom h with v o h = u, when u lies
 * in the image (u vanishes on h^{-1}(0)). Nothing otherwise.
 */
inline std::optional<ExtendedConePoint> lift_through_strict(const ExtendedConePoint& u, const MonoidHom& h) {
  if (!(h.source == u.monoid())) throw DomainError("lift: point is not on the source of the hom");
  Face F = unit_preimage(h);
  if (!vanishes_on(u, F)) return std::nullopt;
  auto [Pbar, lam] = sharp_localize(h.source, F);
  auto kappa = try_factor_through(h.matrix, lam.matrix);
  if (!kappa || !is_unimodular(*kappa)) throw DomainError("lift: hom is not strict");
  IntMatrix L = right_inverse(lam.matrix) * inverse_unimodular(*kappa);
  return pullback_linear(u, L, h.target);
}

// ---------------------------------------------------------------------------
// Points of the complex of a fan

struct ComplexPoint {
  std::size_t chart = 0;
  ExtendedConePoint point;
};

/// (chart, coordinates): the ordering key used for canonical representatives.
using ComplexKey = std::pair<std::size_t, std::vector<ExtendedNonneg>>;

inline ComplexKey key_of(const ComplexPoint& x) { return {x.chart, x.point.coordinates()}; }

inline ComplexPoint make_complex_point(const KatoFan& F, std::size_t chart, const Prime& q,
                                       const std::vector<Rational>& finite_part) {
  return ComplexPoint{chart, ExtendedConePoint::make(F.chart(chart), q, finite_part)};
}

/// Transport across a gluing edge, when the point lies in the glued open.
inline std::optional<ComplexPoint> transport(const KatoFan& F, const GluingEdge& e, const ComplexPoint& x) {
  if (x.chart != e.from) return std::nullopt;
  if (!vanishes_on(x.point, F.edge_face_from(e))) return std::nullopt;
  IntMatrix L = right_inverse(F.edge_localization_from(e).matrix) * inverse_unimodular(F.edge_iso(e)) *
      F.edge_localization_to(e).matrix;
  return ComplexPoint{e.to, pullback_linear(x.point, L, F.chart(e.to))};
}

/// All representatives of the point x of the complex, keyed canonically.
inline std::map<ComplexKey, ComplexPoint> complex_orbit(const KatoFan& F, const ComplexPoint& x) {
  std::map<ComplexKey, ComplexPoint> seen;
  std::vector<ComplexPoint> queue{x};
  seen.emplace(key_of(x), x);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    ComplexPoint cur = queue[h];
    for (const auto& e : F.edges_from(cur.chart))
      if (auto y = transport(F, e, cur))
        if (seen.emplace(key_of(*y), *y).second) queue.push_back(*y);
  }
  return seen;
}

inline bool complex_points_equal(const KatoFan& F, const ComplexPoint& a, const ComplexPoint& b) {
  if (a.chart >= F.chart_count() || b.chart >= F.chart_count()) throw DomainError("chart index out of range");
  return complex_orbit(F, a).count(key_of(b)) > 0;
}

// ---------------------------------------------------------------------------
// Quotients by groupoids

struct CoequalizeResult {
  ComplexPoint representative;
  std::vector<ComplexPoint> orbit;  ///< sorted by key
  std::size_t depth_bound = 0;
  std::size_t depth_reached = 0;
  bool closed = true;  ///< orbit closed before the depth bound
};

/**
 * Class of a point of the complex of U in the quotient by R => U. Moves are
 * the partial isos t o s^{-1} and s o t^{-1} chart by chart, together with
 * the gluings of U. Throws DomainError if s or t is not strict.
 */
inline CoequalizeResult coequalize(const KatoGroupoid& g, const ComplexPoint& x) {
  if (!is_strict(g.s) || !is_strict(g.t)) throw DomainError("coequalize: groupoid is not strict");
  if (x.chart >= g.U.chart_count()) throw DomainError("coequalize: chart index out of range");
  const std::size_t charts = g.U.chart_count() + g.R.chart_count();
  CoequalizeResult res;
  res.depth_bound = charts * charts;

  auto moves = [&](const ComplexPoint& cur) {
    std::vector<ComplexPoint> out;
    for (const auto& e : g.U.edges_from(cur.chart))
      if (auto y = transport(g.U, e, cur)) out.push_back(*y);
    for (std::size_t r = 0; r < g.R.chart_count(); ++r) {
      const auto& ms = g.s.chart_maps()[r];
      const auto& mt = g.t.chart_maps()[r];
      if (ms.target_chart == cur.chart)
        if (auto up = lift_through_strict(cur.point, g.s.chart_hom(r)))
          out.push_back(ComplexPoint{mt.target_chart, pullback(*up, g.t.chart_hom(r))});
      if (mt.target_chart == cur.chart)
        if (auto up = lift_through_strict(cur.point, g.t.chart_hom(r)))
          out.push_back(ComplexPoint{ms.target_chart, pullback(*up, g.s.chart_hom(r))});
    }
    return out;
  };

  std::map<ComplexKey, ComplexPoint> seen;
  seen.emplace(key_of(x), x);
  std::vector<ComplexPoint> frontier{x};
  std::size_t depth = 0;
  while (!frontier.empty()) {
    if (depth == res.depth_bound) {
      res.closed = false;
      break;
    }
    std::vector<ComplexPoint> next;
    for (const auto& cur : frontier)
      for (auto& y : moves(cur))
        if (seen.emplace(key_of(y), y).second) next.push_back(std::move(y));
    if (next.empty()) break;
    frontier = std::move(next);
    ++depth;
  }
  res.depth_reached = depth;
  for (auto& [k, p] : seen) res.orbit.push_back(p);
  res.representative = res.orbit.front();
  return res;
}

}  // namespace katofan
