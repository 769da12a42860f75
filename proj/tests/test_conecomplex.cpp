#include <catch_amalgamated.hpp>

#include "katofan/stack.hpp"

using namespace katofan;

namespace {

ExtendedNonneg inf() { return ExtendedNonneg::infinity(); }

ExtendedConePoint pt(const AffineMonoid& P, std::vector<ExtendedNonneg> v) {
  return ExtendedConePoint::from_generator_values(P, v);
}

}  // namespace

TEST_CASE("extended values", "[cone]") {
  CHECK(ExtendedNonneg(1) + inf() == inf());
  CHECK(inf() + inf() == inf());
  CHECK(ExtendedNonneg(Rational(1, 2)) + ExtendedNonneg(Rational(1, 2)) == ExtendedNonneg(1));
  CHECK(ExtendedNonneg(100) < inf());
  CHECK_THROWS_AS(ExtendedNonneg(-1), DomainError);
}

TEST_CASE("evaluation on extended cones", "[cone]") {
  auto N = free_monoid(1), N2 = free_monoid(2);
  CHECK(eval_extended(pt(N, {inf()}), {3}) == inf());
  CHECK(eval_extended(pt(N, {Rational(1, 2)}), {2}) == ExtendedNonneg(1));
  CHECK(eval_extended(pt(N2, {1, inf()}), {1, 1}) == inf());
  CHECK_THROWS_AS(eval_extended(pt(N, {1}), {-1}), DomainError);
  CHECK_THROWS_AS(ExtendedConePoint::make(N, Prime{}, {Rational(-1)}), DomainError);
  auto P = make_monoid(2, {{1, 0}, {1, 1}, {1, 2}});
  CHECK_THROWS_AS(ExtendedConePoint::make(P, Prime{{1}}, {1, 1}), DomainError);
  // values must be additive: (1,1) = ((1,0)+(1,2))/2
  CHECK_THROWS_AS(ExtendedConePoint::make(P, Prime{}, {1, 5, 1}), DomainError);
  CHECK_NOTHROW(ExtendedConePoint::make(P, Prime{}, {1, 2, 3}));
}

TEST_CASE("structure and reduction maps", "[cone]") {
  auto N = free_monoid(1), N2 = free_monoid(2);
  CHECK(structure_map(pt(N2, {1, 2})).generators.empty());
  CHECK(structure_map(pt(N, {inf()})) == Prime{{0}});
  CHECK(structure_map(pt(N2, {inf(), 2})) == Prime{{0}});
  CHECK(reduction_map(pt(N2, {0, 0})).generators.empty());
  CHECK(reduction_map(pt(N2, {0, 3})) == Prime{{1}});
  CHECK(reduction_map(pt(N2, {inf(), inf()})) == Prime{{0, 1}});
}

TEST_CASE("points of the projective line complex", "[cone]") {
  auto F = from_toric_fan(ToricFan{1, {{{1}}, {{-1}}}}).fan;
  ComplexPoint o0{0, ExtendedConePoint::zero(F.chart(0))};
  ComplexPoint o1{1, ExtendedConePoint::zero(F.chart(1))};
  CHECK(complex_points_equal(F, o0, o1));
  ComplexPoint a{0, pt(F.chart(0), {1})};
  ComplexPoint b{1, pt(F.chart(1), {1})};
  CHECK_FALSE(complex_points_equal(F, a, b));
  CHECK(complex_points_equal(F, a, a));
}

TEST_CASE("transport by an explicit gluing iso", "[cone]") {
  auto N2 = free_monoid(2);
  // glue D(e1) of chart 0 to D(e2) of chart 1 by the identity of N
  KatoFan F({N2, N2}, {Gluing{0, Face{{0}}, 1, Face{{1}}, IntMatrix::identity(1)}});
  ComplexPoint a{0, pt(N2, {0, 5})};
  ComplexPoint b{1, pt(N2, {5, 0})};
  CHECK(complex_points_equal(F, a, b));
  ComplexPoint c{0, pt(N2, {1, 5})};
  CHECK_FALSE(complex_points_equal(F, c, b));
  ComplexPoint d{0, pt(N2, {0, inf()})};
  ComplexPoint e{1, pt(N2, {inf(), 0})};
  CHECK(complex_points_equal(F, d, e));
}

TEST_CASE("coequalize under swap and trivial groupoids", "[cone]") {
  auto N2 = free_monoid(2);
  auto g = twisted_product(GroupAction{N2, {IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)}});
  auto r = coequalize(g, ComplexPoint{0, pt(N2, {1, 2})});
  CHECK(r.orbit.size() == 2);
  CHECK(r.representative.point.coordinates() == std::vector<ExtendedNonneg>{1, 2});
  auto r2 = coequalize(g, ComplexPoint{0, pt(N2, {2, 1})});
  CHECK(key_of(r2.representative) == key_of(r.representative));
  CHECK(coequalize(g, ComplexPoint{0, pt(N2, {2, 2})}).orbit.size() == 1);
  CHECK(coequalize(g, ComplexPoint{0, pt(N2, {inf(), 3})}).representative.point.coordinates() ==
        std::vector<ExtendedNonneg>{3, inf()});
  auto triv = trivial_groupoid(spec_fan(N2));
  auto t = coequalize(triv, ComplexPoint{0, pt(N2, {2, 1})});
  CHECK(t.orbit.size() == 1);
  CHECK(t.closed);
}

TEST_CASE("pullback and strict lifts", "[cone]") {
  auto N = free_monoid(1), N2 = free_monoid(2);
  MonoidHom proj{N2, N, IntMatrix::from_rows({{0, 1}}, 2)};
  auto u = pt(N, {3});
  auto v = pullback(u, proj);
  CHECK(v.coordinates() == std::vector<ExtendedNonneg>{0, 3});
  auto back = lift_through_strict(v, proj);
  REQUIRE(back.has_value());
  CHECK(*back == u);
  CHECK_FALSE(lift_through_strict(pt(N2, {1, 3}), proj).has_value());
}
