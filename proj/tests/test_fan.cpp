#include <catch_amalgamated.hpp>

#include "katofan/fan.hpp"

using namespace katofan;

namespace {

KatoFan projective_line() {
  return from_toric_fan(ToricFan{1, {{{1}}, {{-1}}}}).fan;
}

}  // namespace

TEST_CASE("spectra of free monoids", "[fan]") {
  for (std::size_t k = 0; k <= 4; ++k) CHECK(spec_fan(free_monoid(k)).point_count() == (std::size_t{1} << k));
  auto F = spec_fan(free_monoid(2));
  FanPoint generic{0, Prime{}};
  FanPoint closed{0, Prime{{0, 1}}};
  CHECK(F.specializes(generic, closed));
  CHECK_FALSE(F.specializes(closed, generic));
  CHECK_FALSE(F.specializes(FanPoint{0, Prime{{0}}}, FanPoint{0, Prime{{1}}}));
  CHECK_THROWS_AS(spec_fan(make_monoid(1, {{1}, {-1}})), DomainError);
  CHECK_THROWS_AS(spec_fan(make_monoid(1, {{2}, {3}})), DomainError);
}

TEST_CASE("toric fans", "[fan]") {
  CHECK(from_toric_fan(ToricFan{2, {}}).fan.point_count() == 1);
  auto line = from_toric_fan(ToricFan{1, {{{1}}}});
  CHECK(line.fan.point_count() == 2);
  CHECK(line.fan.chart(0) == free_monoid(1));

  auto p1 = from_toric_fan(ToricFan{1, {{{1}}, {{-1}}, {}}});
  CHECK(p1.fan.chart_count() == 2);
  CHECK(p1.fan.point_count() == 3);
  CHECK(p1.cone_count == 3);

  // P^2: three maximal cones, seven cones in all
  ToricFan p2{2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}};
  auto r = from_toric_fan(p2);
  CHECK(r.cone_count == 7);
  CHECK(r.fan.point_count() == 7);

  // overlapping cones are rejected
  CHECK_THROWS_AS(from_toric_fan(ToricFan{2, {{{1, 0}, {0, 1}}, {{1, 1}, {-1, 1}}}}), DomainError);
  // a non-pointed cone is rejected
  CHECK_THROWS_AS(from_toric_fan(ToricFan{1, {{{1}, {-1}}}}), DomainError);
}

TEST_CASE("gluings are checked", "[fan]") {
  auto N = free_monoid(1);
  // glue two lines along their generic points
  KatoFan F({N, N}, {Gluing{0, Face{{0}}, 1, Face{{0}}, IntMatrix(0, 0)}});
  CHECK(F.point_count() == 3);
  // a non-face is rejected
  auto P = make_monoid(2, {{1, 0}, {1, 1}, {1, 2}});
  CHECK_THROWS_AS(KatoFan({P, P}, {Gluing{0, Face{{1}}, 1, Face{{1}}, IntMatrix::identity(1)}}), DomainError);
  // identifying the two boundary points of one chart is rejected
  auto N2 = free_monoid(2);
  CHECK_THROWS_AS(KatoFan({N2}, {Gluing{0, Face{{0}}, 0, Face{{1}}, IntMatrix::identity(1)}}), DomainError);
}

TEST_CASE("strict morphisms", "[fan]") {
  auto N = free_monoid(1), N2 = free_monoid(2);
  auto FN = spec_fan(N), FN2 = spec_fan(N2);
  CHECK(is_strict(identity_morphism(FN2)));
  // Spec N -> Spec N^2 as the open D(e1): chart hom N^2 -> N, e1 -> 0, e2 -> 1
  KatoFanMorphism open(FN, FN2, {ChartMap{0, IntMatrix::from_rows({{0, 1}}, 2)}});
  CHECK(is_strict(open));
  KatoFanMorphism twice(FN, FN, {ChartMap{0, IntMatrix::from_rows({{2}}, 1)}});
  CHECK_FALSE(is_strict(twice));
  CHECK(open.apply(FanPoint{0, Prime{}}) == FanPoint{0, Prime{}});
  CHECK(open.apply(FanPoint{0, Prime{{0}}}) == FanPoint{0, Prime{{1}}});
  // a hom into the wrong chart shape is rejected
  CHECK_THROWS_AS(KatoFanMorphism(FN, FN, {ChartMap{0, IntMatrix::from_rows({{-1}}, 1)}}), DomainError);
}

TEST_CASE("fiber products", "[fan]") {
  auto N = free_monoid(1);
  auto FN = spec_fan(N);
  auto pt = spec_fan(zero_monoid());
  KatoFanMorphism to_pt(FN, pt, {ChartMap{0, IntMatrix(1, 0)}});
  auto fp = fiber_product(to_pt, to_pt);
  REQUIRE(fp.fan.chart_count() == 1);
  CHECK(fp.fan.chart(0) == free_monoid(2));
  CHECK(fp.fan.point_count() == 4);

  KatoFanMorphism f2(FN, FN, {ChartMap{0, IntMatrix::from_rows({{2}}, 1)}});
  KatoFanMorphism f3(FN, FN, {ChartMap{0, IntMatrix::from_rows({{3}}, 1)}});
  auto fp23 = fiber_product(f2, f3);
  CHECK(fp23.fan.chart(0) == N);
  // projections commute on points
  for (const auto& x : fp23.fan.points())
    CHECK(f2.apply(fp23.first.apply(x)) == f3.apply(fp23.second.apply(x)));

  auto line = projective_line();
  auto id = identity_morphism(line);
  auto self = fiber_product(id, id);
  CHECK(self.fan.chart_count() == 2);
  CHECK(self.fan.point_count() == line.point_count());
  for (const auto& x : self.fan.points())
    CHECK(line.same_point(self.first.apply(x), self.second.apply(x)));
}
