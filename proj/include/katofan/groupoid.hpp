#pragma once

/**
 * @file groupoid.hpp
 * @brief Groupoids R => U of Kato fans and their local germs.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "katofan/fan.hpp"

namespace katofan {

/// Explicit chart-level structure maps, for presentations that germs cannot pin down.
struct GroupoidTables {
  std::vector<std::array<std::size_t, 3>> composition;  ///< (a, b, c): c = b after a
  std::vector<std::size_t> unit;                         ///< per U chart
  std::vector<std::size_t> inverse;                      ///< per R chart
};

struct KatoGroupoid {
  KatoFan U;
  KatoFan R;
  KatoFanMorphism s;
  KatoFanMorphism t;
  std::optional<GroupoidTables> tables;
};

/// Germ of an arrow: the local iso M_{t(a)} -> M_{s(a)} with both endpoints.
struct ArrowGerm {
  FanPoint source;  ///< s(a), in the chart chosen by s
  FanPoint target;  ///< t(a), in the chart chosen by t
  IntMatrix theta;
};

/// Throws DomainError when s is not strict at the arrow.
inline ArrowGerm arrow_germ(const KatoGroupoid& g, const FanPoint& arrow) {
  auto [xs, gs] = g.s.germ(arrow);
  auto [xt, gt] = g.t.germ(arrow);
  if (!is_unimodular(gs)) throw DomainError("arrow germ: s is not a local isomorphism");
  return ArrowGerm{xs, xt, inverse_unimodular(gs) * gt};
}

/**
 * Germ of an arrow conjugated to the canonical representatives of its
 * endpoints in U, so germs over the same pair of points are comparable.
 */
inline ArrowGerm normalized_germ(const KatoGroupoid& g, const FanPoint& arrow) {
  ArrowGerm a = arrow_germ(g, arrow);
  FanPoint cs = g.U.canonical(a.source), ct = g.U.canonical(a.target);
  IntMatrix to_cs = g.U.local_transport(a.source, cs);
  IntMatrix from_ct = g.U.local_transport(ct, a.target);
  return ArrowGerm{cs, ct, to_cs * a.theta * from_ct};
}

}  // namespace katofan
