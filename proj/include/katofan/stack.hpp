#pragma once

/**
 * @file stack.hpp
 * @brief Kato stacks through strict groupoid presentations: validation,
 *        isotropy, faithful monodromy and twisted products U * G.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "katofan/conecomplex.hpp"

namespace katofan {

/// R = U with s = t = id.
inline KatoGroupoid trivial_groupoid(const KatoFan& U) {
  auto id = identity_morphism(U);
  return KatoGroupoid{U, U, id, id, std::nullopt};
}

struct GroupoidReport {
  bool valid = true;
  bool s_strict = true;
  bool t_strict = true;
  bool surjective = true;
  bool units = true;
  bool inverses = true;
  bool composition = true;
  std::vector<std::string> violations;
};

namespace detail {

struct GermTable {
  std::vector<FanPoint> arrows;  ///< one chart representative per point of R
  std::vector<ArrowGerm> germs;  ///< normalized
};

inline GermTable germ_table(const KatoGroupoid& g) {
  GermTable t;
  for (const auto& a : g.R.points()) {
    t.arrows.push_back(a);
    t.germs.push_back(normalized_germ(g, a));
  }
  return t;
}

inline std::string point_label(const FanPoint& x) {
  std::string s = "(chart " + std::to_string(x.chart) + ", prime [";
  for (std::size_t k = 0; k < x.prime.generators.size(); ++k)
    s += (k ? "," : "") + std::to_string(x.prime.generators[k]);
  return s + "])";
}

inline void check_tables(const KatoGroupoid& g, const GroupoidTables& tb, GroupoidReport& rep) {
  const std::size_t nr = g.R.chart_count(), nu = g.U.chart_count();
  auto s_of = [&](std::size_t r) { return g.s.chart_maps()[r].target_chart; };
  auto t_of = [&](std::size_t r) { return g.t.chart_maps()[r].target_chart; };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  for (const auto& [a, b, c] : tb.composition) {
    if (a >= nr || b >= nr || c >= nr) {
      rep.composition = false;
      rep.violations.push_back("composition table refers to a missing chart of R");
      return;
    }
    if (t_of(a) != s_of(b) || s_of(c) != s_of(a) || t_of(c) != t_of(b)) {
      rep.composition = false;
      rep.violations.push_back("composition table entry is not compatible with s and t");
    }
    comp[{a, b}] = c;
  }
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b)
      if (t_of(a) == s_of(b) && !comp.count({a, b})) {
        rep.composition = false;
        rep.violations.push_back("composition table misses a composable pair");
      }
  for (const auto& [ab, c] : comp)
    for (std::size_t d = 0; d < nr; ++d) {
      auto l = comp.find({c, d});
      auto bd = comp.find({ab.second, d});
      if (l == comp.end() || bd == comp.end()) continue;
      auto r = comp.find({ab.first, bd->second});
      if (r == comp.end() || r->second != l->second) {
        rep.composition = false;
        rep.violations.push_back("composition table is not associative");
      }
    }
  if (tb.unit.size() != nu) {
    rep.units = false;
    rep.violations.push_back("unit table needs one entry per chart of U");
  } else {
    for (std::size_t u = 0; u < nu; ++u) {
      std::size_t e = tb.unit[u];
      if (e >= nr || s_of(e) != u || t_of(e) != u) {
        rep.units = false;
        rep.violations.push_back("unit table entry has wrong endpoints");
        continue;
      }
      for (const auto& [ab, c] : comp)
        if ((ab.first == e && c != ab.second) || (ab.second == e && c != ab.first)) {
          rep.units = false;
          rep.violations.push_back("unit is not neutral");
        }
    }
  }
  if (tb.inverse.size() != nr) {
    rep.inverses = false;
    rep.violations.push_back("inverse table needs one entry per chart of R");
  } else if (rep.units) {
    for (std::size_t a = 0; a < nr; ++a) {
      std::size_t b = tb.inverse[a];
      auto c = comp.find({a, b});
      if (b >= nr || c == comp.end() || c->second != tb.unit[s_of(a)]) {
        rep.inverses = false;
        rep.violations.push_back("inverse table entry does not compose to the unit");
      }
    }
  }
}

}  // namespace detail

/// Strictness, surjectivity and the groupoid axioms; failures itemized, nothing thrown.
inline GroupoidReport validate_groupoid(const KatoGroupoid& g) {
  GroupoidReport rep;
  rep.s_strict = is_strict(g.s);
  rep.t_strict = is_strict(g.t);
  if (!rep.s_strict) rep.violations.push_back("s not strict");
  if (!rep.t_strict) rep.violations.push_back("t not strict");
  rep.surjective = is_surjective(g.s) && is_surjective(g.t);
  if (!rep.surjective) rep.violations.push_back("s or t not surjective on points");
  if (rep.s_strict && rep.t_strict) {
    if (g.tables) {
      detail::check_tables(g, *g.tables, rep);
    } else {
      auto tb = detail::germ_table(g);
      const auto& G = tb.germs;
      auto same_ends = [&](const ArrowGerm& a, const FanPoint& s, const FanPoint& t) {
        return a.source == s && a.target == t;
      };
      for (const auto& x : g.U.points()) {
        bool found = false;
        for (const auto& a : G)
          if (same_ends(a, x, x) && a.theta == IntMatrix::identity(a.theta.rows())) found = true;
        if (!found) {
          rep.units = false;
          rep.violations.push_back("no unit arrow at " + detail::point_label(x));
        }
      }
      for (const auto& a : G) {
        IntMatrix inv = inverse_unimodular(a.theta);
        bool found = false;
        for (const auto& b : G)
          if (same_ends(b, a.target, a.source) && b.theta == inv) found = true;
        if (!found) {
          rep.inverses = false;
          rep.violations.push_back("arrow without inverse over " + detail::point_label(a.source));
        }
      }
      for (const auto& a : G)
        for (const auto& b : G) {
          if (!(a.target == b.source)) continue;
          IntMatrix theta = a.theta * b.theta;
          bool found = false;
          for (const auto& c : G)
            if (same_ends(c, a.source, b.target) && c.theta == theta) found = true;
          if (!found) {
            rep.composition = false;
            rep.violations.push_back("composite arrow missing over " + detail::point_label(a.source));
          }
        }
    }
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()), rep.violations.end());
  rep.valid = rep.violations.empty();
  return rep;
}

struct Isotropy {
  FanPoint point;                  ///< canonical representative in U
  std::vector<IntMatrix> elements;  ///< distinct automorphisms of the local monoid, sorted
  std::size_t germ_count = 0;      ///< arrows over (x, x)
};

inline Isotropy isotropy(const KatoGroupoid& g, const FanPoint& x) {
  Isotropy iso;
  iso.point = g.U.canonical(x);
  std::set<IntMatrix> els;
  for (const auto& a : g.R.points()) {
    ArrowGerm germ = normalized_germ(g, a);
    if (germ.source == iso.point && germ.target == iso.point) {
      ++iso.germ_count;
      els.insert(germ.theta);
    }
  }
  iso.elements.assign(els.begin(), els.end());
  return iso;
}

/// Isotropy acts faithfully on the local monoid at every point of U.
inline bool faithful_monodromy(const KatoGroupoid& g) {
  for (const auto& x : g.U.points()) {
    Isotropy iso = isotropy(g, x);
    if (iso.germ_count != iso.elements.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite group actions

struct GroupAction {
  AffineMonoid monoid;
  std::vector<IntMatrix> generators;
};

inline std::size_t max_orbit_from_env() {
  if (const char* v = std::getenv("KATOFAN_MAX_ORBIT")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return 10000;
}

/// All elements of the matrix group generated by the action, sorted.
inline std::vector<IntMatrix> group_elements(const GroupAction& a, std::size_t limit = max_orbit_from_env()) {
  const AffineMonoid& P = a.monoid;
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    HomReport r = validate_hom(a.generators[k], P, P);
    if (!r.is_iso) throw DomainError("action generator " + std::to_string(k) + " is not an automorphism");
  }
  std::set<IntMatrix> seen{IntMatrix::identity(P.rank())};
  std::vector<IntMatrix> queue(seen.begin(), seen.end());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& gen : a.generators) {
      IntMatrix m = gen * queue[h];
      if (seen.insert(m).second) {
        if (seen.size() > limit) throw DomainError("group generated by the action exceeds the orbit limit");
        queue.push_back(m);
      }
    }
  return {seen.begin(), seen.end()};
}

/// Faces F with A(F) = F for every element of the group.
inline std::vector<Face> invariant_faces(const AffineMonoid& P, const std::vector<IntMatrix>& group) {
  std::vector<Face> out;
  for (const auto& F : faces(P)) {
    bool inv = true;
    for (const auto& A : group) {
      std::vector<IntVector> imgs;
      for (auto i : F.generators) imgs.push_back(A.apply(P.generator(i)));
      if (!(face_closure(P, imgs) == F)) {
        inv = false;
        break;
      }
    }
    if (inv) out.push_back(F);
  }
  return out;
}

/// Image of A in Aut of the sharp localization at an invariant face.
inline IntMatrix induced_automorphism(const AffineMonoid& P, const Face& F, const IntMatrix& A) {
  auto lam = sharp_localize(P, F).second;
  return factor_through(lam.matrix * A, lam.matrix);
}

/**
 * U * G: one copy of Spec P per group element; copies g and h are glued
 * along each minimal invariant face where g and h induce the same
 * automorphism of the localization. s is the identity, t acts by g.
 */
inline KatoGroupoid twisted_product(const GroupAction& a) {
  const AffineMonoid& P = a.monoid;
  if (!P.is_sharp() || !P.is_saturated()) throw DomainError("twisted_product: monoid must be sharp and saturated");
  auto group = group_elements(a);
  auto inv_faces = invariant_faces(P, group);
  std::vector<std::vector<IntMatrix>> induced(group.size());
  for (std::size_t k = 0; k < group.size(); ++k)
    for (const auto& F : inv_faces) induced[k].push_back(induced_automorphism(P, F, group[k]));

  std::vector<Gluing> gluings;
  for (std::size_t x = 0; x < group.size(); ++x)
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      std::vector<Face> agree;
      for (std::size_t f = 0; f < inv_faces.size(); ++f)
        if (induced[x][f] == induced[y][f]) agree.push_back(inv_faces[f]);
      for (const auto& F : agree) {
        bool minimal = true;
        for (const auto& E : agree)
          if (!(E == F) && std::includes(F.generators.begin(), F.generators.end(), E.generators.begin(),
                                         E.generators.end()))
            minimal = false;
        if (!minimal) continue;
        auto r = sharp_localize(P, F).first.rank();
        gluings.push_back(Gluing{x, F, y, F, IntMatrix::identity(r)});
      }
    }
  KatoFan U = spec_fan(P);
  KatoFan R(std::vector<AffineMonoid>(group.size(), P), gluings);
  std::vector<ChartMap> sm, tm;
  for (const auto& A : group) {
    sm.push_back({0, IntMatrix::identity(P.rank())});
    tm.push_back({0, A});
  }
  KatoFanMorphism s(R, U, sm), t(R, U, tm);
  return KatoGroupoid{U, R, s, t, std::nullopt};
}

}  // namespace katofan
