#include <catch_amalgamated.hpp>

#include "katofan/monoid.hpp"

using namespace katofan;

TEST_CASE("make_monoid canonicalizes", "[monoid]") {
  auto P = make_monoid(2, {{2, 0}, {0, 1}});
  CHECK(P.rank() == 2);
  CHECK(P.generators() == std::vector<IntVector>{{1, 0}, {0, 1}});
  auto Q = make_monoid(1, {{2}, {3}});
  CHECK(Q.generators() == std::vector<IntVector>{{2}, {3}});
  CHECK_FALSE(Q.is_saturated());
  CHECK(Q.contains(IntVector{5}));
  CHECK_FALSE(Q.contains(IntVector{1}));
  auto Z = make_monoid(0, {});
  CHECK(Z.rank() == 0);
  CHECK(Z.is_sharp());
  CHECK(Z.is_saturated());
}

TEST_CASE("saturation and hilbert bases", "[monoid]") {
  CHECK(saturate(make_monoid(1, {{2}, {3}})) == free_monoid(1));
  CHECK(hilbert_basis(1, {{2}, {3}}) == std::vector<IntVector>{{1}});
  CHECK(hilbert_basis(2, {{1, 0}, {1, 2}}) == std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(ambient_saturation(2, {{1, 0}, {1, 2}}) == std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}});
  CHECK_THROWS_AS(hilbert_basis(1, {{1}, {-1}}), DomainError);
}

TEST_CASE("units and sharpening", "[monoid]") {
  CHECK(unit_group(free_monoid(2)).empty());
  CHECK(unit_group(make_monoid(1, {{1}, {-1}})) == std::vector<IntVector>{{1}});
  auto P = make_monoid(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(unit_group(P) == std::vector<IntVector>{{1, 0}});
  auto [Q, pi] = sharpen(P);
  CHECK(Q == free_monoid(1));
  CHECK(pi.matrix.apply(IntVector{0, 1}) == IntVector{1});
  CHECK(sharpen(make_monoid(1, {{1}, {-1}})).first.rank() == 0);
  CHECK(P.witness(IntVector{-3, 2}).has_value());
}

TEST_CASE("faces", "[monoid]") {
  CHECK(faces(free_monoid(1)).size() == 2);
  CHECK(faces(free_monoid(2)).size() == 4);
  auto P = make_monoid(2, {{1, 0}, {1, 1}, {1, 2}});
  auto fs = faces(P);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].generators.empty());
  CHECK(fs[1].generators == std::vector<std::size_t>{0});
  CHECK(fs[2].generators == std::vector<std::size_t>{2});
  CHECK_FALSE(is_face(P, Face{{1}}));
}

TEST_CASE("pushouts", "[monoid]") {
  auto N = free_monoid(1);
  MonoidHom h1{N, N, IntMatrix::from_rows({{2}}, 1)};
  MonoidHom h2{N, N, IntMatrix::from_rows({{3}}, 1)};
  auto po = fs_pushout(h1, h2);
  CHECK(po.monoid == N);
  CHECK(abs_int(po.first.matrix(0, 0)) == 3);
  CHECK(abs_int(po.second.matrix(0, 0)) == 2);
}

TEST_CASE("hom classification", "[monoid]") {
  auto N2 = free_monoid(2);
  auto r = validate_hom(IntMatrix::identity(2), N2, N2);
  CHECK(r.is_iso);
  auto N = free_monoid(1);
  auto d = validate_hom(IntMatrix::from_rows({{2}}, 1), N, N);
  CHECK(d.is_local);
  CHECK_FALSE(d.is_iso);
  CHECK_THROWS_AS(validate_hom(IntMatrix::from_rows({{-1, 0}}, 2), N2, N), DomainError);
  CHECK(automorphism_group(N2).size() == 2);
}
