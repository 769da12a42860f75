#include <catch_amalgamated.hpp>

#include "katofan/stack.hpp"

using namespace katofan;

namespace {

IntMatrix swap2() { return IntMatrix::from_rows({{0, 1}, {1, 0}}, 2); }

KatoGroupoid bg2() {
  auto U = spec_fan(zero_monoid());
  KatoFan R({zero_monoid(), zero_monoid()}, {});
  KatoFanMorphism fold(R, U, {ChartMap{0, IntMatrix(0, 0)}, ChartMap{0, IntMatrix(0, 0)}});
  GroupoidTables tb{{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0}, {0, 1}};
  return KatoGroupoid{U, R, fold, fold, tb};
}

}  // namespace

TEST_CASE("trivial groupoid", "[stack]") {
  auto g = trivial_groupoid(spec_fan(free_monoid(2)));
  auto rep = validate_groupoid(g);
  CHECK(rep.valid);
  CHECK(faithful_monodromy(g));
  for (const auto& x : g.U.points()) CHECK(isotropy(g, x).elements.size() == 1);
}

TEST_CASE("swap twisted product", "[stack]") {
  auto N2 = free_monoid(2);
  auto g = twisted_product(GroupAction{N2, {swap2()}});
  CHECK(g.R.chart_count() == 2);
  REQUIRE(g.R.gluings().size() == 1);
  CHECK(g.R.gluings()[0].face_i == whole_face(N2));
  auto rep = validate_groupoid(g);
  INFO((rep.violations.empty() ? std::string() : rep.violations.front()));
  CHECK(rep.valid);
  CHECK(faithful_monodromy(g));
  auto closed = isotropy(g, FanPoint{0, Prime{{0, 1}}});
  CHECK(closed.elements.size() == 2);
  CHECK(closed.germ_count == 2);
  auto generic = isotropy(g, FanPoint{0, Prime{}});
  CHECK(generic.elements.size() == 1);
  auto ray = isotropy(g, FanPoint{0, Prime{{0}}});
  CHECK(ray.elements.size() == 1);
}

TEST_CASE("ineffective and trivial actions", "[stack]") {
  auto N = free_monoid(1);
  auto g = twisted_product(GroupAction{N, {IntMatrix::identity(1)}});
  CHECK(g.R.chart_count() == 1);
  CHECK(validate_groupoid(g).valid);
  CHECK(automorphism_group(N).size() == 1);
  CHECK_THROWS_AS(twisted_product(GroupAction{N, {IntMatrix::from_rows({{2}}, 1)}}), DomainError);
}

TEST_CASE("classifying stack of Z/2", "[stack]") {
  auto g = bg2();
  CHECK(validate_groupoid(g).valid);
  CHECK_FALSE(faithful_monodromy(g));
  auto iso = isotropy(g, FanPoint{0, Prime{}});
  CHECK(iso.germ_count == 2);
  CHECK(iso.elements.size() == 1);
  auto bad = g;
  bad.tables->composition.pop_back();
  CHECK_FALSE(validate_groupoid(bad).valid);
}

TEST_CASE("non-strict source map", "[stack]") {
  auto FN = spec_fan(free_monoid(1));
  KatoFanMorphism twice(FN, FN, {ChartMap{0, IntMatrix::from_rows({{2}}, 1)}});
  KatoGroupoid g{FN, FN, twice, identity_morphism(FN), std::nullopt};
  auto rep = validate_groupoid(g);
  CHECK_FALSE(rep.valid);
  CHECK(std::find(rep.violations.begin(), rep.violations.end(), "s not strict") != rep.violations.end());
}

TEST_CASE("Aut of the monoid as the self fiber product over FAN", "[stack]") {
  auto N2 = free_monoid(2);
  auto aut = automorphism_group(N2);
  auto g = twisted_product(GroupAction{N2, aut});
  CHECK(isotropy(g, FanPoint{0, Prime{{0, 1}}}).elements == aut);
  auto P = make_monoid(2, {{1, 0}, {1, 1}, {1, 2}});
  auto autP = automorphism_group(P);
  CHECK(autP.size() == 2);
  auto gP = twisted_product(GroupAction{P, autP});
  CHECK(isotropy(gP, FanPoint{0, Prime{{0, 1, 2}}}).elements == autP);
  CHECK(faithful_monodromy(gP));
}

TEST_CASE("orbit limit", "[stack]") {
  auto N2 = free_monoid(2);
  CHECK_THROWS_AS(group_elements(GroupAction{N2, {swap2()}}, 1), DomainError);
  CHECK(group_elements(GroupAction{N2, {swap2()}}, 2).size() == 2);
}
