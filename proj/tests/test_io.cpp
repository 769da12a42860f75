#include <catch_amalgamated.hpp>

#include "katofan/io.hpp"
#include "katofan/sampling.hpp"

using namespace katofan;
using io::Json;

namespace {

std::string load_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

KatoGroupoid bg2() {
  auto U = spec_fan(zero_monoid());
  KatoFan R({zero_monoid(), zero_monoid()}, {});
  KatoFanMorphism fold(R, U, {ChartMap{0, IntMatrix(0, 0)}, ChartMap{0, IntMatrix(0, 0)}});
  return KatoGroupoid{U, R, fold, fold, GroupoidTables{{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0}, {0, 1}}};
}

}  // namespace

TEST_CASE("monoid documents", "[io]") {
  auto P = io::read_monoid(Json::parse(R"({"kind":"monoid","version":"1","rank":1,"generators":[[2],[3]]})"), "monoid",
                           true);
  CHECK(P == make_monoid(1, {{2}, {3}}));
  CHECK(load_error([] {
          io::read_monoid(Json::parse(R"({"kind":"monoid","version":"1","generators":[[2],[3]]})"), "monoid", true);
        }) == "monoid.rank: required");
  CHECK(load_error([] {
          io::read_monoid(Json::parse(R"({"kind":"monoid","version":"2","rank":1,"generators":[]})"), "monoid", true);
        }).find("monoid.version") == 0);
  CHECK(load_error([] {
          io::read_monoid(Json::parse(R"({"kind":"monoid","version":"1","rank":1,"generators":[],"x":1})"), "monoid",
                          true);
        }) == "monoid.x: unknown field");
  CHECK(load_error([] {
          io::read_monoid(Json::parse(R"({"rank":2,"generators":[[1,0],[0]]})"), "monoid");
        }).find("monoid.generators[1]") == 0);
  // embedded monoids must be canonical, top-level ones may be raw
  auto raw = Json::parse(R"({"rank":2,"generators":[[2,0],[0,1]]})");
  CHECK_THROWS_AS(io::read_monoid(raw, "monoid"), SchemaError);
  CHECK(io::read_monoid(raw, "monoid", false, false) == free_monoid(2));
  // big integers travel as strings
  auto big = make_monoid(2, {{1, 0}, {Int("123456789012345678901234567890"), 1}});
  auto j = io::monoid_json(big);
  CHECK(j["generators"][1][0] == "123456789012345678901234567890");
  CHECK(io::read_monoid(j, "monoid", true) == big);
}

TEST_CASE("point documents", "[io]") {
  CHECK(load_error([] { io::read_point(Json::parse(R"({"kind":"point","finite_part":["-1"]})"), "point", true); }) ==
        "finite_part must be nonnegative");
  auto j = Json::parse(
      R"({"kind":"point","version":"1","monoid":{"rank":2,"generators":[[1,0],[0,1]]},"infinity_prime":[0],"finite_part":["2"]})");
  auto d = io::read_point(j, "point", true);
  CHECK(d.point.coordinates() == std::vector<ExtendedNonneg>{ExtendedNonneg::infinity(), 2});
  CHECK(io::point_json(d.point) == j);
  CHECK_THROWS_AS(io::read_point(Json::parse(R"({"kind":"point","version":"1","infinity_prime":[],"finite_part":[]})"),
                                 "point", true),
                  SchemaError);
  CHECK(load_error([] {
          io::read_point(Json::parse(R"({"kind":"point","version":"1","monoid":{"rank":1,"generators":[[1]]},
                                          "infinity_prime":[],"finite_part":["1/0"]})"),
                         "point", true);
        }).find("point.finite_part[0]") == 0);
  // chart points resolve their monoid through a fan
  auto F = from_toric_fan(ToricFan{1, {{{1}}, {{-1}}}}).fan;
  auto c = io::read_point(Json::parse(R"({"kind":"point","version":"1","chart":1,"infinity_prime":[],"finite_part":["3"]})"),
                          "point", true, &F);
  CHECK(c.chart == 1);
  CHECK(c.point.monoid() == F.chart(1));
}

TEST_CASE("round trips", "[io]") {
  Sampler s(11);
  for (int k = 0; k < 40; ++k) {
    auto P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    auto jm = io::monoid_json(P);
    CHECK(io::read_monoid(jm, "monoid", true) == P);
    CHECK(io::dump(io::monoid_json(io::read_monoid(jm, "m", true))) == io::dump(jm));

    auto u = s.extended_point(P);
    CHECK(io::read_point(io::point_json(u), "point", true).point == u);

    auto x = s.arc_point(P);
    auto ax = io::read_arcpoint(io::arcpoint_json(x), "arcpoint", true).point;
    CHECK(ax.exponents() == x.exponents());
    CHECK(ax.coeffs() == x.coeffs());

    auto f = s.polynomial(P);
    CHECK(io::read_polynomial(io::polynomial_json(f), "polynomial", true) == f);

    auto F = spec_fan(P);
    CHECK(io::fan_json(io::read_fan(io::fan_json(F), "fan", true)) == io::fan_json(F));

    auto h = identity_hom(P);
    CHECK(io::read_hom(io::hom_json(h), "hom", true).hom.matrix == h.matrix);
  }
  auto toric = ToricFan{2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}};
  auto tj = io::toric_json(toric);
  CHECK(io::toric_json(io::read_toric(tj, "toric", true)) == tj);
  auto P2 = from_toric_fan(toric).fan;
  CHECK(io::fan_json(io::read_fan(io::fan_json(P2), "fan", true)) == io::fan_json(P2));

  auto m = identity_morphism(P2);
  CHECK(io::morphism_json(io::read_morphism(io::morphism_json(m), "morphism", true)) == io::morphism_json(m));

  auto a = GroupAction{free_monoid(2), {IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)}};
  auto aj = io::action_json(a);
  auto a2 = io::read_action(aj, "action", true);
  CHECK(a2.monoid == a.monoid);
  CHECK(a2.generators == a.generators);

  auto g = twisted_product(a);
  auto gj = io::groupoid_json(g);
  CHECK(io::groupoid_json(io::read_groupoid(gj, "groupoid", true)) == gj);
  auto bj = io::groupoid_json(bg2());
  auto b = io::read_groupoid(bj, "groupoid", true);
  REQUIRE(b.tables.has_value());
  CHECK(b.tables->composition.size() == 4);
  CHECK(io::groupoid_json(b) == bj);
}

TEST_CASE("schema errors name the field", "[io]") {
  auto fan = Json::parse(R"({"kind":"fan","version":"1","charts":[{"rank":1,"generators":[[1]]}],
                             "gluings":[{"i":0,"face_i":[0],"j":3,"face_j":[0],"iso":[]}]})");
  CHECK(load_error([&] { io::read_fan(fan, "fan", true); }) == "fan.gluings[0].j: chart index out of range");
  auto hom = Json::parse(R"({"kind":"hom","version":"1","matrix":[[1,2]],"source":{"rank":1,"generators":[[1]]},
                             "target":{"rank":1,"generators":[[1]]}})");
  CHECK(load_error([&] { io::read_hom(hom, "hom", true); }).find("hom.matrix[0]") == 0);
  auto neg = Json::parse(R"({"kind":"hom","version":"1","matrix":[[-1]],"source":{"rank":1,"generators":[[1]]},
                             "target":{"rank":1,"generators":[[1]]}})");
  CHECK_THROWS_AS(io::read_hom(neg, "hom", true), DomainError);
  auto g = Json::parse(R"({"kind":"groupoid","version":"1","U":{"charts":[{"rank":0,"generators":[]}]},
                           "R":{"charts":[{"rank":0,"generators":[]}]},"s":{"charts":[{"target":0,"matrix":[]}]},
                           "t":{"charts":[{"target":0,"matrix":[]}]},"unit":[0]})");
  CHECK(load_error([&] { io::read_groupoid(g, "groupoid", true); }).find("groupoid.composition") == 0);
  CHECK_THROWS_AS(io::kind_of(Json::parse(R"({"kind":"sheaf"})")), SchemaError);
  CHECK_THROWS_AS(io::parse_text("{", "x"), SchemaError);
}

TEST_CASE("layout", "[io]") {
  auto j = io::monoid_json(free_monoid(2));
  CHECK(io::dump(j) ==
        "{\n  \"kind\": \"monoid\",\n  \"version\": \"1\",\n  \"rank\": 2,\n  \"generators\": [[1, 0], [0, 1]]\n}\n");
}
