#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "katofan/cli.hpp"

using namespace katofan;

namespace {

std::string sample(const std::string& name) { return std::string(KATOFAN_SAMPLES_DIR) + "/" + name; }

cli::Outcome run(std::vector<std::string> args) { return cli::execute(args); }

io::Json json_of(const cli::Outcome& r) { return io::Json::parse(r.out); }

}  // namespace

TEST_CASE("worked examples", "[cli]") {
  auto sat = run({"monoid", "saturate", sample("m23.json")});
  REQUIRE(sat.code == 0);
  CHECK(io::read_monoid(json_of(sat), "out", true) == free_monoid(1));

  auto amb = run({"monoid", "saturate", "--ambient", sample("cone_1012.json")});
  REQUIRE(amb.code == 0);
  CHECK(json_of(amb)["generators"] == io::Json::parse("[[1,0],[1,1],[1,2]]"));

  auto bg = run({"stack", "faithful", sample("bg2.json")});
  REQUIRE(bg.code == 0);
  CHECK(json_of(bg)["faithful_monodromy"] == false);
  CHECK(bg.out.find("\"faithful_monodromy\": false") != std::string::npos);

  auto rho = run({"cone", "rho", sample("pt_inf.json")});
  REQUIRE(rho.code == 0);
  CHECK(json_of(rho)["prime"] == io::Json::parse("[0]"));

  auto po = run({"monoid", "pushout", sample("times2.json"), sample("times3.json")});
  REQUIRE(po.code == 0);
  CHECK(json_of(po)["first"]["matrix"] == io::Json::parse("[[3]]"));
  CHECK(json_of(po)["second"]["matrix"] == io::Json::parse("[[2]]"));

  auto ev = run({"trop", "eval", sample("arc_eval.json"), sample("one_minus_chi.json")});
  REQUIRE(ev.code == 0);
  CHECK(json_of(ev)["arc_valuation"] == "inf");
  CHECK(json_of(ev)["gauss_valuation"] == "0");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"monoid"}).code == 2);
  CHECK(run({"monoid", "saturate"}).code == 2);
  CHECK(run({"check", "--suite", "nope"}).code == 2);
  auto missing = run({"monoid", "saturate", sample("no_rank.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("monoid.rank: required") != std::string::npos);
  auto neg = run({"cone", "r", sample("bad_point.json")});
  CHECK(neg.code == 2);
  CHECK(neg.err.find("finite_part must be nonnegative") != std::string::npos);
  CHECK(run({"monoid", "saturate", sample("does_not_exist.json")}).code == 2);
  // domain errors
  CHECK(run({"fan", "spec", sample("m23.json")}).code == 1);
  CHECK(run({"monoid", "faces", sample("units.json")}).code == 1);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("monoid") != std::string::npos);
}

TEST_CASE("fans and stacks through the command line", "[cli]") {
  auto p1 = run({"fan", "from-toric", "--emit-strata", sample("p1.json")});
  REQUIRE(p1.code == 0);
  CHECK(json_of(p1)["strata"].size() == 3);

  auto strict = run({"fan", "strict", sample("double_line.json")});
  REQUIRE(strict.code == 0);
  CHECK(json_of(strict)["strict"] == false);

  auto tq = run({"stack", "twisted-quotient", sample("swap.json")});
  REQUIRE(tq.code == 0);
  std::string gpath = "cli_test_swap_groupoid.json";
  REQUIRE(run({"stack", "twisted-quotient", sample("swap.json"), "--output", gpath}).out.empty());
  auto val = run({"stack", "validate", gpath});
  REQUIRE(val.code == 0);
  CHECK(json_of(val)["valid"] == true);
  auto co = run({"cone", "coequalize", gpath, sample("pt_12.json")});
  REQUIRE(co.code == 0);
  CHECK(json_of(co)["orbit"].size() == 2);
  CHECK(json_of(co)["representative"]["coordinates"] == io::Json::parse(R"(["1","2"])"));
  auto iso = run({"stack", "isotropy", gpath, "--chart", "0", "--prime", "[0,1]"});
  REQUIRE(iso.code == 0);
  CHECK(json_of(iso)["points"][0]["order"] == 2);
  std::remove(gpath.c_str());
}

TEST_CASE("determinism", "[cli]") {
  auto a = run({"trop", "quotient-check", sample("n2.json"), "--points", "60", "--seed", "9"});
  auto b = run({"trop", "quotient-check", sample("n2.json"), "--points", "60", "--seed", "9"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["passed"] == true);
  auto c = run({"check", "--suite", "toric", "--seed", "4"});
  auto d = run({"check", "--suite", "toric", "--seed", "4"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}
