#pragma once

/**
 * @file cli.hpp
 * @brief The `katofan` command line: argument parsing, dispatch and exit codes.
 *
 * execute() never writes to the process streams itself, so tests can run it
 * in-process. Exit codes: 0 success, 1 domain error or failed check,
 * 2 usage or schema error.
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "katofan/checks.hpp"
#include "katofan/io.hpp"

namespace katofan::cli {

struct Outcome {
  std::string out;  ///< the JSON document (empty when written to --output)
  std::string err;  ///< diagnostics
  int code = 0;
};

namespace detail {

using io::Json;

inline Json load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_text(text, "<stdin>");
  }
  return io::read_file(path);
}

inline Json report(const std::string& command) {
  Json j = io::document("report");
  j["command"] = command;
  return j;
}

inline Json prime_json(const Prime& q) { return io::indices_json(q.generators); }

inline Json strata_json(const KatoFan& F) {
  Json a = Json::array();
  for (std::size_t k = 0; k < F.point_count(); ++k) {
    const FanPoint& x = F.points()[k];
    Json e = Json::object();
    e["point"] = k;
    e["chart"] = x.chart;
    e["prime"] = prime_json(x.prime);
    e["face"] = io::indices_json(face_of(F.chart(x.chart), x.prime).generators);
    e["dimension"] = F.local_monoid(x).first.rank();
    Json ms = Json::array();
    for (const auto& m : F.members(k)) ms.push_back(Json{{"chart", m.chart}, {"prime", prime_json(m.prime)}});
    e["members"] = std::move(ms);
    a.push_back(std::move(e));
  }
  return a;
}

inline Json fan_output(const KatoFan& F, bool strata, const std::string& command) {
  if (!strata) return io::fan_json(F);
  Json j = report(command);
  j["fan"] = io::fan_body(F);
  j["strata"] = strata_json(F);
  return j;
}

inline Json complex_point_json(const ComplexPoint& x) {
  Json j = io::point_fields(x.point, x.chart, false);
  Json c = Json::array();
  for (const auto& v : x.point.coordinates()) c.push_back(io::extended_json(v));
  j["coordinates"] = std::move(c);
  return j;
}

inline IntVector parse_element(const std::string& text, std::size_t rank) {
  return io::read_vector(io::parse_text(text, "--at"), "--at", rank);
}

inline Json suite_json(const checks::SuiteResult& r, std::uint64_t seed) {
  Json j = Json::object();
  j["suite"] = r.name;
  j["title"] = r.title;
  j["seed"] = seed;
  j["passed"] = r.passed;
  j["cases"] = r.cases;
  Json c = Json::object();
  for (const auto& [k, v] : r.counters) c[k] = v;
  j["counters"] = std::move(c);
  Json f = Json::array();
  for (const auto& s : r.failures) f.push_back(s);
  j["failures"] = std::move(f);
  return j;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline Outcome execute(const std::vector<std::string>& args) {
  using detail::Json;
  Outcome res;
  std::ostringstream err;

  CLI::App app{"Kato fans, fs monoids, extended cone complexes and tropicalization checks", "katofan"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  std::uint64_t seed = 1;
  bool emit_strata = false;
  app.add_option("--output", output, "Write the document to this file instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_flag("--emit-strata", emit_strata, "Add the strata table to fan outputs");

  Json out;
  int code = 0;
  std::function<void()> action;

  // monoid ------------------------------------------------------------------
  auto* monoid = app.add_subcommand("monoid", "Affine monoids")->require_subcommand(1);
  std::string f1, f2, f3;
  bool ambient = false;

  auto* m_sat = monoid->add_subcommand("saturate", "Saturation P^sat");
  m_sat->add_option("monoid", f1, "Monoid document")->required();
  m_sat->add_flag("--ambient", ambient, "Saturate in the given coordinates: cone(P) ∩ Z^rank");
  m_sat->callback([&] {
    action = [&] {
      Json j = detail::load(f1);
      if (ambient) {
        io::Fields f(j, "monoid");
        io::header(f, "monoid", true);
        std::size_t rank = io::read_index(f.required("rank"), f.at("rank"));
        const Json& g = io::read_array(f.required("generators"), f.at("generators"));
        std::vector<IntVector> raw;
        for (std::size_t k = 0; k < g.size(); ++k)
          raw.push_back(io::read_vector(g[k], f.at("generators") + "[" + std::to_string(k) + "]", rank));
        f.finish();
        out = io::document("monoid");
        out["rank"] = rank;
        Json gs = Json::array();
        for (const auto& v : ambient_saturation(rank, raw)) gs.push_back(io::vector_json(v));
        out["generators"] = std::move(gs);
      } else {
        out = io::monoid_json(saturate(io::read_monoid(j, "monoid", true, false)));
      }
    };
  });

  auto* m_can = monoid->add_subcommand("canonical", "Canonical form (re-embedded, sorted)");
  m_can->add_option("monoid", f1, "Monoid document")->required();
  m_can->callback([&] { action = [&] { out = io::monoid_json(io::read_monoid(detail::load(f1), "monoid", true, false)); }; });

  auto* m_sharp = monoid->add_subcommand("sharpen", "Quotient by units, as a hom P -> P/P*");
  m_sharp->add_option("monoid", f1, "Monoid document")->required();
  m_sharp->callback([&] {
    action = [&] { out = io::hom_json(sharpen(io::read_monoid(detail::load(f1), "monoid", true, false)).second); };
  });

  auto* m_faces = monoid->add_subcommand("faces", "Faces and primes of a sharp monoid");
  m_faces->add_option("monoid", f1, "Monoid document")->required();
  m_faces->callback([&] {
    action = [&] {
      AffineMonoid P = io::read_monoid(detail::load(f1), "monoid", true, false);
      if (!P.is_sharp()) throw DomainError("faces: monoid is not sharp; run `monoid sharpen` first");
      out = detail::report("monoid faces");
      out["monoid"] = io::monoid_body(P);
      Json fs = Json::array(), ps = Json::array();
      for (const auto& F : faces(P)) {
        fs.push_back(io::indices_json(F.generators));
        ps.push_back(detail::prime_json(prime_of(P, F)));
      }
      out["faces"] = std::move(fs);
      out["primes"] = std::move(ps);
    };
  });

  auto* m_po = monoid->add_subcommand("pushout", "fs pushout of two homs with a common source");
  m_po->add_option("first", f1, "Hom document S -> P")->required();
  m_po->add_option("second", f2, "Hom document S -> Q")->required();
  m_po->callback([&] {
    action = [&] {
      auto h1 = io::read_hom(detail::load(f1), "hom", true).hom;
      auto h2 = io::read_hom(detail::load(f2), "hom", true).hom;
      Pushout po = fs_pushout(h1, h2);
      out = detail::report("monoid pushout");
      out["monoid"] = io::monoid_body(po.monoid);
      out["first"] = io::hom_body(po.first);
      out["second"] = io::hom_body(po.second);
    };
  });

  // fan ---------------------------------------------------------------------
  auto* fan = app.add_subcommand("fan", "Kato fans")->require_subcommand(1);

  auto* f_spec = fan->add_subcommand("spec", "Spec of a sharp fs monoid");
  f_spec->add_option("monoid", f1, "Monoid document")->required();
  f_spec->callback([&] {
    action = [&] {
      out = detail::fan_output(spec_fan(io::read_monoid(detail::load(f1), "monoid", true, false)), emit_strata,
                               "fan spec");
    };
  });

  auto* f_toric = fan->add_subcommand("from-toric", "Kato fan of a toric fan");
  f_toric->add_option("toric", f1, "Toric document {dimension, cones}")->required();
  f_toric->callback([&] {
    action = [&] {
      auto r = from_toric_fan(io::read_toric(detail::load(f1), "toric", true));
      out = detail::fan_output(r.fan, emit_strata, "fan from-toric");
    };
  });

  auto* f_fp = fan->add_subcommand("fiber-product", "F x_H G for morphisms F -> H, G -> H");
  f_fp->add_option("first", f1, "Morphism document F -> H")->required();
  f_fp->add_option("second", f2, "Morphism document G -> H")->required();
  f_fp->callback([&] {
    action = [&] {
      auto f = io::read_morphism(detail::load(f1), "morphism", true);
      auto g = io::read_morphism(detail::load(f2), "morphism", true);
      FiberProduct fp = fiber_product(f, g);
      out = detail::report("fan fiber-product");
      out["fan"] = io::fan_body(fp.fan);
      out["first"] = Json{{"charts", io::chart_maps_json(fp.first.chart_maps())}};
      out["second"] = Json{{"charts", io::chart_maps_json(fp.second.chart_maps())}};
      Json pairs = Json::array();
      for (const auto& [i, k] : fp.chart_pairs) pairs.push_back(Json::array({i, k}));
      out["chart_pairs"] = std::move(pairs);
      if (emit_strata) out["strata"] = detail::strata_json(fp.fan);
    };
  });

  auto* f_strict = fan->add_subcommand("strict", "Is a morphism strict?");
  f_strict->add_option("morphism", f1, "Morphism document")->required();
  f_strict->callback([&] {
    action = [&] {
      auto m = io::read_morphism(detail::load(f1), "morphism", true);
      out = detail::report("fan strict");
      out["strict"] = is_strict(m);
      Json cs = Json::array();
      for (std::size_t i = 0; i < m.chart_maps().size(); ++i) {
        const HomReport& r = m.chart_report(i);
        cs.push_back(Json{{"chart", i},
                          {"is_face_localization", r.is_face_localization},
                          {"is_local", r.is_local},
                          {"is_iso", r.is_iso}});
      }
      out["charts"] = std::move(cs);
    };
  });

  // cone --------------------------------------------------------------------
  auto* cone = app.add_subcommand("cone", "Extended cones and their complexes")->require_subcommand(1);
  std::string at;

  auto* c_eval = cone->add_subcommand("eval", "u(p) for an element p of P");
  c_eval->add_option("point", f1, "Point document with a monoid")->required();
  c_eval->add_option("--at", at, "Element of P as a JSON array")->required();
  c_eval->callback([&] {
    action = [&] {
      auto d = io::read_point(detail::load(f1), "point", true);
      out = detail::report("cone eval");
      out["value"] = io::extended_json(eval_extended(d.point, detail::parse_element(at, d.point.monoid().rank())));
    };
  });

  auto* c_rho = cone->add_subcommand("rho", "Structure map: the prime where u is infinite");
  c_rho->add_option("point", f1, "Point document with a monoid")->required();
  c_rho->callback([&] {
    action = [&] {
      auto d = io::read_point(detail::load(f1), "point", true);
      out = detail::report("cone rho");
      out["prime"] = detail::prime_json(structure_map(d.point));
    };
  });

  auto* c_r = cone->add_subcommand("r", "Reduction map: the prime where u is positive");
  c_r->add_option("point", f1, "Point document with a monoid")->required();
  c_r->callback([&] {
    action = [&] {
      auto d = io::read_point(detail::load(f1), "point", true);
      out = detail::report("cone r");
      out["prime"] = detail::prime_json(reduction_map(d.point));
    };
  });

  auto* c_eq = cone->add_subcommand("equal", "Do two points of the complex of a fan agree?");
  c_eq->add_option("fan", f1, "Fan document")->required();
  c_eq->add_option("a", f2, "Point document")->required();
  c_eq->add_option("b", f3, "Point document")->required();
  c_eq->callback([&] {
    action = [&] {
      KatoFan F = io::read_fan(detail::load(f1), "fan", true);
      auto a = io::read_point(detail::load(f2), "a", true, &F);
      auto b = io::read_point(detail::load(f3), "b", true, &F);
      out = detail::report("cone equal");
      out["equal"] = complex_points_equal(F, ComplexPoint{a.chart, a.point}, ComplexPoint{b.chart, b.point});
    };
  });

  auto* c_co = cone->add_subcommand("coequalize", "Class of a point of the complex of U in the quotient by R");
  c_co->add_option("groupoid", f1, "Groupoid document")->required();
  c_co->add_option("point", f2, "Point document on U")->required();
  c_co->callback([&] {
    action = [&] {
      KatoGroupoid g = io::read_groupoid(detail::load(f1), "groupoid", true);
      auto p = io::read_point(detail::load(f2), "point", true, &g.U);
      CoequalizeResult r = coequalize(g, ComplexPoint{p.chart, p.point});
      out = detail::report("cone coequalize");
      out["representative"] = detail::complex_point_json(r.representative);
      Json orbit = Json::array();
      for (const auto& x : r.orbit) orbit.push_back(detail::complex_point_json(x));
      out["orbit"] = std::move(orbit);
      out["depth_bound"] = r.depth_bound;
      out["depth_reached"] = r.depth_reached;
      out["closed"] = r.closed;
    };
  });

  // stack -------------------------------------------------------------------
  auto* stack = app.add_subcommand("stack", "Groupoid presentations of Kato stacks")->require_subcommand(1);
  std::size_t chart = 0;
  std::string prime_text;

  auto* s_val = stack->add_subcommand("validate", "Strictness, surjectivity and groupoid axioms");
  s_val->add_option("groupoid", f1, "Groupoid document")->required();
  s_val->callback([&] {
    action = [&] {
      GroupoidReport r = validate_groupoid(io::read_groupoid(detail::load(f1), "groupoid", true));
      out = detail::report("stack validate");
      out["valid"] = r.valid;
      out["s_strict"] = r.s_strict;
      out["t_strict"] = r.t_strict;
      out["surjective"] = r.surjective;
      out["units"] = r.units;
      out["inverses"] = r.inverses;
      out["composition"] = r.composition;
      out["violations"] = r.violations;
    };
  });

  auto* s_tw = stack->add_subcommand("twisted-quotient", "Presentation U * G of [U / G] for a finite action");
  s_tw->add_option("action", f1, "Action document")->required();
  s_tw->callback([&] { action = [&] { out = io::groupoid_json(twisted_product(io::read_action(detail::load(f1), "action", true))); }; });

  auto* s_iso = stack->add_subcommand("isotropy", "Isotropy groups at points of U");
  s_iso->add_option("groupoid", f1, "Groupoid document")->required();
  auto* chart_opt = s_iso->add_option("--chart", chart, "Chart of the point (default: every point)");
  auto* prime_opt = s_iso->add_option("--prime", prime_text, "Prime of the point as a JSON array");
  s_iso->callback([&] {
    action = [&] {
      KatoGroupoid g = io::read_groupoid(detail::load(f1), "groupoid", true);
      std::vector<FanPoint> pts;
      if (chart_opt->count() || prime_opt->count()) {
        if (chart >= g.U.chart_count()) throw SchemaError("--chart: chart index out of range");
        Prime q = io::read_prime(io::parse_text(prime_text.empty() ? "[]" : prime_text, "--prime"), "--prime",
                                 g.U.chart(chart));
        if (!is_face(g.U.chart(chart), face_of(g.U.chart(chart), q)))
          throw DomainError("--prime: not a prime ideal of the chart");
        pts.push_back(FanPoint{chart, q});
      } else {
        pts = g.U.points();
      }
      out = detail::report("stack isotropy");
      Json a = Json::array();
      for (const auto& x : pts) {
        Isotropy iso = isotropy(g, x);
        Json e = Json::object();
        e["chart"] = iso.point.chart;
        e["prime"] = detail::prime_json(iso.point.prime);
        e["order"] = iso.elements.size();
        e["germ_count"] = iso.germ_count;
        Json els = Json::array();
        for (const auto& m : iso.elements) els.push_back(io::matrix_json(m));
        e["elements"] = std::move(els);
        a.push_back(std::move(e));
      }
      out["points"] = std::move(a);
    };
  });

  auto* s_faith = stack->add_subcommand("faithful", "Does the presentation have faithful monodromy?");
  s_faith->add_option("groupoid", f1, "Groupoid document")->required();
  s_faith->callback([&] {
    action = [&] {
      KatoGroupoid g = io::read_groupoid(detail::load(f1), "groupoid", true);
      out = detail::report("stack faithful");
      out["faithful_monodromy"] = faithful_monodromy(g);
    };
  });

  // trop --------------------------------------------------------------------
  auto* trop = app.add_subcommand("trop", "Arc points, seminorms and tropicalization")->require_subcommand(1);
  std::string fan_file, which = "pi";
  std::size_t npoints = 200;

  auto* t_eval = trop->add_subcommand("eval", "Arc value of f and the Gauss value at the retraction");
  t_eval->add_option("arcpoint", f1, "Arc point document")->required();
  t_eval->add_option("polynomial", f2, "Polynomial document")->required();
  t_eval->callback([&] {
    action = [&] {
      ArcPoint x = io::read_arcpoint(detail::load(f1), "arcpoint", true).point;
      MonPolynomial f = io::read_polynomial(detail::load(f2), "polynomial", true);
      out = detail::report("trop eval");
      out["arc_valuation"] = io::extended_json(arc_valuation(x, f));
      out["gauss_valuation"] = io::extended_json(gauss_valuation(retract(x), f));
    };
  });

  auto* t_point = trop->add_subcommand("point", "Tropicalization of an arc point");
  t_point->add_option("arcpoint", f1, "Arc point document")->required();
  t_point->add_option("--fan", fan_file, "Fan whose chart the arc lives on");
  t_point->callback([&] {
    action = [&] {
      Json j = detail::load(f1);
      if (fan_file.empty()) {
        out = io::point_json(trop_point(io::read_arcpoint(j, "arcpoint", true).point));
      } else {
        KatoFan F = io::read_fan(detail::load(fan_file), "fan", true);
        auto d = io::read_arcpoint(j, "arcpoint", true, &F);
        ComplexPoint t = trop_fan_point(F, d.chart, d.point);
        out = io::point_json(t.point, t.chart, false);
      }
    };
  });

  auto* t_ret = trop->add_subcommand("retract", "The Gauss point J(trop x)");
  t_ret->add_option("arcpoint", f1, "Arc point document")->required();
  t_ret->callback([&] {
    action = [&] {
      GaussPoint r = retract(io::read_arcpoint(detail::load(f1), "arcpoint", true).point);
      out = detail::report("trop retract");
      out["gauss_point"] = io::point_fields(r.u, std::nullopt, true);
    };
  });

  auto* t_eta = trop->add_subcommand("eta", "eta (x) x on a pulled-back polynomial");
  t_eta->add_option("arcpoint", f1, "Arc point document")->required();
  t_eta->add_option("polynomial", f2, "Polynomial document")->required();
  t_eta->add_option("--pullback", which, "pi or mu")->check(CLI::IsMember({"pi", "mu"}));
  t_eta->callback([&] {
    action = [&] {
      ArcPoint x = io::read_arcpoint(detail::load(f1), "arcpoint", true).point;
      MonPolynomial f = io::read_polynomial(detail::load(f2), "polynomial", true);
      bool pi = which == "pi";
      LogValue v = eta_tensor_valuation(x, pullback(f, pi ? Pullback::pi : Pullback::mu));
      LogValue expected = pi ? arc_valuation(x, f) : gauss_valuation(retract(x), f);
      out = detail::report("trop eta");
      out["pullback"] = which;
      out["value"] = io::extended_json(v);
      out[pi ? "arc_valuation" : "gauss_valuation"] = io::extended_json(expected);
      out["agrees"] = v == expected;
    };
  });

  auto* t_qc = trop->add_subcommand("quotient-check", "Quotient classes against fibers of trop on Spec P");
  t_qc->add_option("monoid", f1, "Sharp fs monoid document")->required();
  t_qc->add_option("--points", npoints, "Number of sampled arc points");
  t_qc->callback([&] {
    action = [&] {
      AffineMonoid P = io::read_monoid(detail::load(f1), "monoid", true, false);
      if (!P.is_sharp() || !P.is_saturated()) throw DomainError("quotient-check: monoid must be sharp and saturated");
      Sampler s(seed);
      auto in = checks::sample_quotient_inputs(s, P, npoints);
      QuotientReport r = quotient_check(P, in.points, in.polys, in.units);
      out = detail::report("trop quotient-check");
      out["seed"] = seed;
      out["passed"] = r.passed;
      out["points"] = r.points;
      out["polynomials"] = r.polynomials;
      out["lemma_checks"] = r.lemma_checks;
      out["unit_checks"] = r.unit_checks;
      out["monomial_checks"] = r.monomial_checks;
      out["classes"] = r.classes;
      out["cancelling_points"] = r.cancelling_points;
      out["counterexamples"] = r.counterexamples;
      if (!r.passed) code = 1;
    };
  });

  // check -------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Run a verification suite");
  std::string suite;
  std::vector<std::string> names{"all"};
  for (const auto& s : checks::suites()) names.push_back(s.name);
  check->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(names));
  check->callback([&] {
    action = [&] {
      out = detail::report("check");
      out["seed"] = seed;
      Json rs = Json::array();
      bool all_passed = true;
      for (const auto& s : checks::suites()) {
        if (suite != "all" && suite != s.name) continue;
        auto r = checks::run_suite(s, seed);
        err << s.name << ": " << (r.passed ? "pass" : "FAIL") << " in " << r.seconds << " s\n";
        all_passed = all_passed && r.passed;
        rs.push_back(detail::suite_json(r, seed));
      }
      out["passed"] = all_passed;
      out["suites"] = std::move(rs);
      if (!all_passed) code = 1;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    // help for the innermost subcommand named on the command line
    res.err = std::string("error: ") + e.what() + "\nRun with --help for usage.\n";
    res.code = 2;
    return res;
  }

  try {
    if (!action) throw SchemaError("no command given");
    action();
    std::string text = io::dump(out);
    if (output.empty()) {
      res.out = text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f || !(f << text)) throw SchemaError(output + ": cannot write file");
    }
    res.code = code;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    res.code = 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    res.code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    res.code = 1;
  }
  res.err = err.str();
  return res;
}

}  // namespace katofan::cli
