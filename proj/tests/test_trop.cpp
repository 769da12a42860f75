#include <catch_amalgamated.hpp>

#include "katofan/sampling.hpp"

using namespace katofan;

namespace {

ExtendedNonneg inf() { return ExtendedNonneg::infinity(); }

MonPolynomial poly(const AffineMonoid& P, std::vector<std::pair<IntVector, Rational>> terms) {
  MonPolynomial f(P);
  for (auto& [p, a] : terms) f.add_term(p, a);
  return f;
}

ArcPoint arc(const AffineMonoid& P, std::vector<ExtendedNonneg> u, std::vector<Rational> c) {
  return ArcPoint::make(ExtendedConePoint::from_generator_values(P, u), c);
}

}  // namespace

TEST_CASE("gauss valuation", "[trop]") {
  auto N = free_monoid(1);
  auto u1 = ExtendedConePoint::from_generator_values(N, {1});
  CHECK(gauss_valuation(u1, poly(N, {{{0}, 1}, {{1}, 1}})) == ExtendedNonneg(0));
  auto uh = ExtendedConePoint::from_generator_values(N, {Rational(1, 2)});
  CHECK(gauss_valuation(uh, poly(N, {{{2}, 1}})) == ExtendedNonneg(1));
  CHECK(gauss_valuation(uh, MonPolynomial(N)) == inf());
  CHECK_THROWS_AS(poly(N, {{{-1}, 1}}), DomainError);
}

TEST_CASE("arc valuation", "[trop]") {
  auto N = free_monoid(1);
  auto x = arc(N, {1}, {1});
  CHECK(arc_valuation(x, poly(N, {{{0}, 1}, {{1}, 1}})) == ExtendedNonneg(0));
  CHECK(arc_valuation(x, poly(N, {{{1}, 1}})) == ExtendedNonneg(1));
  auto ev = arc(N, {0}, {1});
  auto one_minus = poly(N, {{{0}, 1}, {{1}, -1}});
  CHECK(arc_valuation(ev, one_minus) == inf());
  CHECK(gauss_valuation(retract(ev), one_minus) == ExtendedNonneg(0));
  // character on a non-free face lattice
  auto P = make_monoid(2, {{1, 0}, {1, 1}, {1, 2}});
  auto y = arc(P, {0, 0, 0}, {2, 3});
  CHECK(y.character({1, 1}) == Rational(6));
  CHECK(y.character({2, 2}) == Rational(36));
}

TEST_CASE("trop and retraction", "[trop]") {
  auto N = free_monoid(1), N2 = free_monoid(2);
  CHECK(trop_point(arc(N, {1}, {1})).coordinates() == std::vector<ExtendedNonneg>{1});
  CHECK(trop_point(arc(N, {0}, {1})) == ExtendedConePoint::zero(N));
  CHECK(trop_point(arc(N2, {inf(), 1}, {5})).coordinates() == std::vector<ExtendedNonneg>{inf(), 1});
  auto x = arc(N2, {2, 3}, {-1, 2});
  auto r = retract(x);
  CHECK(retract(r) == r);
  CHECK(trop_point(r) == trop_point(x));
  for (const auto& g : N2.generators())
    CHECK(gauss_valuation(r, MonPolynomial::monomial(N2, g)) == arc_valuation(x, MonPolynomial::monomial(N2, g)));
}

TEST_CASE("pullbacks and eta", "[trop]") {
  auto N = free_monoid(1);
  auto f = poly(N, {{{0}, 1}, {{1}, 1}});
  auto pf = pullback(f, Pullback::pi);
  CHECK(pf.terms().size() == 2);
  CHECK(pf.terms().at({IntVector{0}, IntVector{0}}) == 1);
  CHECK(pf.terms().at({IntVector{0}, IntVector{1}}) == 1);
  auto mf = pullback(poly(N, {{{2}, 1}}), Pullback::mu);
  CHECK(mf.terms().at({IntVector{2}, IntVector{2}}) == 1);
  auto one_minus = poly(N, {{{0}, 1}, {{1}, -1}});
  auto mm = pullback(one_minus, Pullback::mu);
  CHECK(mm.terms().at({IntVector{1}, IntVector{1}}) == -1);

  auto ev = arc(N, {0}, {1});
  CHECK(eta_tensor_valuation(ev, pullback(one_minus, Pullback::pi)) == inf());
  CHECK(eta_tensor_valuation(ev, pullback(one_minus, Pullback::mu)) == ExtendedNonneg(0));
  BiPolynomial unit(N);
  unit.add_term({-3}, {0}, 1);
  CHECK(eta_tensor_valuation(ev, unit) == ExtendedNonneg(0));
}

TEST_CASE("toric tropicalization", "[trop]") {
  auto F = from_toric_fan(ToricFan{1, {{{1}}, {{-1}}}}).fan;
  auto x = arc(F.chart(0), {2}, {1});
  auto t = trop_fan_point(F, 0, x);
  CHECK(t.point.coordinates() == std::vector<ExtendedNonneg>{2});
  auto z0 = trop_fan_point(F, 0, arc(F.chart(0), {0}, {1}));
  auto z1 = trop_fan_point(F, 1, arc(F.chart(1), {0}, {7}));
  CHECK(complex_points_equal(F, z0, z1));
  auto b = trop_fan_point(F, 0, ArcPoint::make(ExtendedConePoint::from_generator_values(F.chart(0), {inf()}), {}));
  CHECK(structure_map(b.point) == Prime{{0}});
  CHECK_THROWS_AS(trop_fan_point(F, 2, x), DomainError);
}

TEST_CASE("sampled multiplicativity", "[trop]") {
  Sampler s(3);
  for (int k = 0; k < 60; ++k) {
    auto P = s.sharp_fs_monoid(2, 3);
    auto x = s.arc_point(P);
    auto f = s.chance(1, 2) ? s.cancelling_polynomial(x) : s.polynomial(P);
    auto g = s.polynomial(P);
    CHECK(arc_valuation(x, f * g) == arc_valuation(x, f) + arc_valuation(x, g));
    CHECK(gauss_valuation(x.exponents(), f * g) ==
          gauss_valuation(x.exponents(), f) + gauss_valuation(x.exponents(), g));
  }
}

TEST_CASE("quotient check on Spec N", "[trop]") {
  auto N = free_monoid(1);
  std::vector<ArcPoint> pts{arc(N, {0}, {1}), arc(N, {0}, {2}), arc(N, {1}, {1}), arc(N, {inf()}, {})};
  std::vector<MonPolynomial> fs{poly(N, {{{0}, 1}, {{1}, -1}}), poly(N, {{{2}, 3}})};
  auto rep = quotient_check(N, pts, fs, {{-2}, {5}});
  CHECK(rep.passed);
  CHECK(rep.classes == 3);
  CHECK(rep.cancelling_points == 1);
}
