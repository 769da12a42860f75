#pragma once

/**
 * @file checks.hpp
 * @brief The randomized and worked-instance verification suites behind
 *        `katofan check` and the acceptance binary.
 *
 * Each suite is deterministic in its seed, times itself, and fails when a
 * comparison fails or the time budget is exceeded.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "katofan/oracles.hpp"
#include "katofan/sampling.hpp"

namespace katofan::checks {

struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = true;
  std::size_t cases = 0;
  double seconds = 0;
  double limit_seconds = 0;
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::string> failures;  ///< first few only
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < 10) r_.failures.push_back(what);
  }

  void count(const std::string& key, std::uint64_t n = 1) { r_.counters[key] += n; }
  void cases(std::size_t n = 1) { r_.cases += n; }

 private:
  SuiteResult& r_;
};

inline std::string show(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

inline std::string show(const std::vector<IntVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + show(vs[i]);
  return s + "}";
}

inline std::vector<std::size_t> indices_where(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) out.push_back(i);
  return out;
}

/// Random nonnegative integer matrix.
inline IntMatrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.uniform(0, hi);
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Saturation against box enumeration of cone ∩ Z^d and of cone ∩ P^gp.
inline void saturation_suite(Sampler& s, detail::Recorder& rec) {
  const long box = 8;
  for (int k = 0; k < 200; ++k) {
    std::size_t d = static_cast<std::size_t>(s.uniform(1, 3));
    auto raw = s.raw_generators(d, 5, 0, 4);
    rec.cases();
    std::string tag = "monoid " + detail::show(raw);

    // cone(P) ∩ Z^d
    auto hb = ambient_saturation(d, raw);
    auto expected = oracle::box_cone_points(raw, d, box);
    rec.expect(oracle::box_monoid_points(hb, d, box) == expected, tag + ": ambient saturation differs from the box");

    // cone(P) ∩ P^gp through the canonical form
    AffineMonoid P = make_monoid(d, raw);
    AffineMonoid S = saturate(P);
    auto emb = canonical_embedding(d, raw);
    std::vector<IntVector> amb;
    for (const auto& g : S.generators()) amb.push_back(emb.ambient(g));
    auto in_group = oracle::box_cone_points(raw, d, box, &emb.basis);
    rec.expect(S.is_saturated(), tag + ": saturate did not produce a saturated monoid");
    rec.expect(oracle::box_monoid_points(amb, d, box) == in_group, tag + ": saturation differs from the box");
    for (const auto& g : P.generators()) rec.expect(S.contains(g), tag + ": P is not contained in its saturation");
    rec.count("box_points", expected.size() + in_group.size());
  }
}

/// faces(P) against the subset scan with the transposition-theorem test.
inline void faces_suite(Sampler& s, detail::Recorder& rec) {
  for (int k = 0; k < 100; ++k) {
    std::size_t d = static_cast<std::size_t>(s.uniform(1, 3));
    AffineMonoid P;
    for (;;) {
      if (s.chance(1, 2)) {
        P = s.sharp_fs_monoid(d, 5);
      } else {
        auto raw = s.raw_generators(d, 7, 0, 3);
        P = make_monoid(d, raw);
      }
      if (P.size() <= 7 && P.is_sharp()) break;
    }
    rec.cases();
    std::set<std::vector<std::size_t>> got;
    for (const auto& F : faces(P)) got.insert(F.generators);
    auto expected = oracle::face_subsets(P.generators(), P.rank());
    rec.expect(got == expected, "faces differ for " + detail::show(P.generators()));
    rec.count("faces", expected.size());
  }
}

/// Universal property of the fs pushout on random cospans of free monoids.
inline void pushout_suite(Sampler& s, detail::Recorder& rec) {
  {
    auto N = free_monoid(1);
    MonoidHom h1{N, N, IntMatrix::from_rows({{2}}, 1)};
    MonoidHom h2{N, N, IntMatrix::from_rows({{3}}, 1)};
    Pushout po = fs_pushout(h1, h2);
    rec.expect(po.monoid == N, "x2/x3 pushout is not N");
    rec.expect(po.first.matrix == IntMatrix::from_rows({{3}}, 1), "x2/x3 first insertion is not x3");
    rec.expect(po.second.matrix == IntMatrix::from_rows({{2}}, 1), "x2/x3 second insertion is not x2");
  }
  for (int k = 0; k < 50; ++k) {
    std::size_t ds = s.uniform(1, 2), dp = s.uniform(1, 2), dq = s.uniform(1, 2);
    auto S = free_monoid(ds), P = free_monoid(dp), Q = free_monoid(dq);
    MonoidHom h1{S, P, detail::random_matrix(s, dp, ds, 2)};
    MonoidHom h2{S, Q, detail::random_matrix(s, dq, ds, 2)};
    Pushout po = fs_pushout(h1, h2);
    rec.expect(po.first.matrix * h1.matrix == po.second.matrix * h2.matrix, "pushout square does not commute");
    IntMatrix joint = IntMatrix::hconcat(po.first.matrix, po.second.matrix);
    std::vector<IntVector> joint_rows;
    for (std::size_t i = 0; i < joint.rows(); ++i) joint_rows.push_back(joint.row(i));
    // the insertions generate the group, so factoring maps are unique
    rec.expect(oracle::rank_of(joint_rows, joint.cols()) == po.monoid.rank(), "insertions do not generate the group");

    for (int t = 0; t < 20; ++t) {
      rec.cases();
      std::size_t dw = s.uniform(1, 2);
      auto W = free_monoid(dw);
      IntMatrix a, b;
      bool found = false;
      for (int attempt = 0; attempt < 10 && !found; ++attempt) {
        a = detail::random_matrix(s, dw, dp, 2);
        IntMatrix lhs = a * h1.matrix;
        // b with b h2 = a h1, entries in [0, 4], by enumeration
        IntMatrix bb(dw, dq);
        oracle::for_each_box_point(dw * dq, 0, 4, [&](const IntVector& v) {
          if (found) return;
          for (std::size_t i = 0; i < dw; ++i)
            for (std::size_t j = 0; j < dq; ++j) bb(i, j) = v[i * dq + j];
          if (bb * h2.matrix == lhs) {
            b = bb;
            found = true;
          }
        });
      }
      if (!found) {
        a = IntMatrix(dw, dp);
        b = IntMatrix(dw, dq);
        rec.count("zero_targets");
      }
      MonoidHom ma{P, W, a}, mb{Q, W, b};
      auto u = factor_through_pushout(po, ma, mb);
      rec.expect(u.has_value(), "no factoring hom for a compatible pair");
      if (!u) continue;
      rec.expect(u->matrix * po.first.matrix == a && u->matrix * po.second.matrix == b, "factoring hom does not factor");
      bool valid = true;
      try {
        validate_hom(u->matrix, po.monoid, W);
      } catch (const DomainError&) {
        valid = false;
      }
      rec.expect(valid, "factoring map is not a monoid hom");
      if (t == 0) {
        // brute-force uniqueness, row by row
        for (std::size_t i = 0; i < dw; ++i) {
          auto sols = oracle::row_solutions(po.first.matrix, a.row(i), po.second.matrix, b.row(i), 3);
          bool inside = true;
          for (const auto& x : u->matrix.row(i))
            if (x < -3 || x > 3) inside = false;
          rec.expect(sols.size() <= 1, "factoring map is not unique");
          if (inside) rec.expect(sols.size() == 1 && sols[0] == u->matrix.row(i), "brute force misses the factoring map");
        }
        rec.count("brute_force_rows", dw);
      }
    }
  }
}

/// Points of Spec N^k, strata of the extended cone, ρ ⊆ r and their trop compatibility.
inline void stratification_suite(Sampler& s, detail::Recorder& rec) {
  for (std::size_t k = 1; k <= 4; ++k) {
    rec.cases();
    auto n = spec_fan(free_monoid(k)).point_count();
    rec.expect(n == (std::size_t{1} << k), "Spec N^" + std::to_string(k) + " has " + std::to_string(n) + " points");
  }
  for (int m = 0; m < 20; ++m) {
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    auto expected_faces = oracle::face_subsets(P.generators(), P.rank());
    std::set<std::vector<std::size_t>> primes;
    for (const auto& F : expected_faces)
      primes.insert(detail::indices_where(P.size(), [&](std::size_t i) {
        return !std::binary_search(F.begin(), F.end(), i);
      }));
    // one stratum per face: ell vanishing exactly on it; reduction gives the complement prime
    std::set<std::vector<std::size_t>> strata;
    for (const auto& F : faces(P)) {
      rec.cases();
      IntVector phi = supporting_functional(P, F);
      auto u = ExtendedConePoint::from_functionals(P, IntVector(P.rank(), Int(0)), RatVector(phi.begin(), phi.end()));
      auto r = reduction_map(u).generators;
      auto direct = detail::indices_where(P.size(), [&](std::size_t i) { return u.value_at(P.generator(i)) > ExtendedNonneg(0); });
      rec.expect(r == direct, "reduction map differs from the direct preimage");
      strata.insert(r);
    }
    rec.expect(strata == primes, "strata do not biject with primes of " + detail::show(P.generators()));
    rec.count("strata", strata.size());
  }
  for (int k = 0; k < 1000; ++k) {
    rec.cases();
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    ArcPoint x = s.arc_point(P);
    ExtendedConePoint u = trop_point(x);
    auto rho = structure_map(u).generators;
    auto r = reduction_map(u).generators;
    rec.expect(std::includes(r.begin(), r.end(), rho.begin(), rho.end()), "structure map not inside reduction map");
    std::vector<std::size_t> inf_idx, pos_idx;
    for (std::size_t i = 0; i < P.size(); ++i) {
      LogValue v = arc_valuation(x, MonPolynomial::monomial(P, P.generator(i)));
      if (v.is_infinite()) inf_idx.push_back(i);
      if (v > LogValue(0)) pos_idx.push_back(i);
    }
    rec.expect(rho == inf_idx, "structure map does not commute with trop");
    rec.expect(r == pos_idx, "reduction map does not commute with trop");
    rec.expect(is_face(P, face_of(P, Prime{rho})) && is_face(P, face_of(P, Prime{r})), "image is not a prime");
    rec.expect(u == x.exponents(), "trop does not recover the exponent data");
  }
}

/// val(fg) = val(f) + val(g) for Gauss and arc points; values stay >= 0.
inline void multiplicativity_suite(Sampler& s, detail::Recorder& rec) {
  auto nonneg = [](const LogValue& v) { return v.is_infinite() || v.value() >= 0; };
  for (int k = 0; k < 1000; ++k) {
    rec.cases();
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    ExtendedConePoint u = s.extended_point(P);
    MonPolynomial f = s.polynomial(P), g = s.polynomial(P);
    LogValue vf = gauss_valuation(u, f), vg = gauss_valuation(u, g), vfg = gauss_valuation(u, f * g);
    rec.expect(vfg == vf + vg, "Gauss valuation is not multiplicative");
    rec.expect(nonneg(vf) && nonneg(vg) && nonneg(vfg), "negative Gauss value");
  }
  for (int k = 0; k < 1000; ++k) {
    rec.cases();
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    ArcPoint x = s.arc_point(P);
    MonPolynomial f = s.chance(1, 2) ? s.cancelling_polynomial(x) : s.polynomial(P);
    MonPolynomial g = s.chance(1, 3) ? s.cancelling_polynomial(x) : s.polynomial(P);
    LogValue vf = arc_valuation(x, f), vg = arc_valuation(x, g), vfg = arc_valuation(x, f * g);
    rec.expect(vfg == vf + vg, "arc valuation is not multiplicative");
    rec.expect(nonneg(vf) && nonneg(vg) && nonneg(vfg), "negative arc value");
    if (vf != gauss_valuation(x.exponents(), f)) rec.count("cancellations");
  }
}

/// eta (x) x against arc and Gauss values through both pullbacks.
inline void eta_suite(Sampler& s, detail::Recorder& rec) {
  for (int k = 0; k < 1000; ++k) {
    rec.cases();
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    ArcPoint x = s.arc_point(P);
    MonPolynomial f = s.chance(1, 3) ? s.cancelling_polynomial(x) : s.polynomial(P);
    LogValue arc = arc_valuation(x, f);
    LogValue gauss = gauss_valuation(retract(x), f);
    rec.expect(eta_tensor_valuation(x, pullback(f, Pullback::pi)) == arc, "pi pullback identity fails");
    rec.expect(eta_tensor_valuation(x, pullback(f, Pullback::mu)) == gauss, "mu pullback identity fails");
    if (arc != gauss) rec.count("off_skeleton");
  }
}

/// trop o J = id, idempotence of the retraction, and the evaluation point.
inline void retraction_suite(Sampler& s, detail::Recorder& rec) {
  for (int k = 0; k < 1000; ++k) {
    rec.cases();
    AffineMonoid P = s.sharp_fs_monoid(static_cast<std::size_t>(s.uniform(1, 3)), 4);
    ExtendedConePoint u = s.extended_point(P);
    rec.expect(trop_point(GaussPoint{u}) == u, "trop o J is not the identity");
    rec.expect(trop_point(gauss_arc(u)) == u, "trop of the Gauss arc is not u");
    ArcPoint x = s.arc_point(P);
    GaussPoint r = retract(x);
    rec.expect(retract(r) == r, "retraction is not idempotent");
    rec.expect(retract(gauss_arc(r.u)) == r, "p o J o p differs from p");
    MonPolynomial f = s.chance(1, 2) ? s.cancelling_polynomial(x) : s.polynomial(P);
    rec.expect(gauss_valuation(r, f) <= arc_valuation(x, f), "retraction increases a value");
    for (const auto& g : P.generators()) {
      auto mono = MonPolynomial::monomial(P, g);
      rec.expect(gauss_valuation(r, mono) == arc_valuation(x, mono), "retraction changes a monomial value");
    }
  }
  rec.cases();
  auto N = free_monoid(1);
  ArcPoint ev = ArcPoint::make(ExtendedConePoint::zero(N), {Rational(1)});
  MonPolynomial one_minus(N);
  one_minus.add_term({0}, 1);
  one_minus.add_term({1}, -1);
  rec.expect(arc_valuation(ev, one_minus) == LogValue::infinity(), "evaluation point does not kill 1 - chi");
  rec.expect(gauss_valuation(retract(ev), one_minus) == LogValue(0), "Gauss value of 1 - chi is not 0");
}

struct QuotientSample {
  std::vector<ArcPoint> points;
  std::vector<MonPolynomial> polys;
  std::vector<IntVector> units;
};

/**
 * About n arc points on Spec P, a third of them sharing exponent data with
 * the previous one, plus cancelling polynomials, 1 - chi^g, the evaluation
 * and Gauss points at u = 0, and a few torus characters.
 */
inline QuotientSample sample_quotient_inputs(Sampler& s, const AffineMonoid& P, std::size_t n) {
  QuotientSample q;
  const std::size_t d = P.rank();
  while (q.points.size() < n) {
    ArcPoint x = s.arc_point(P);
    q.points.push_back(x);
    if (q.points.size() < n && s.chance(1, 3)) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < x.coeffs().size(); ++i) c.push_back(s.nonzero_rational());
      q.points.push_back(ArcPoint::make(x.exponents(), c));
    }
    if (q.polys.size() < 40 && s.chance(1, 4)) q.polys.push_back(s.cancelling_polynomial(x));
  }
  ExtendedConePoint zero = ExtendedConePoint::zero(P);
  q.points.push_back(ArcPoint::make(zero, std::vector<Rational>(ArcPoint::face_lattice_basis(zero).size(), Rational(1))));
  q.points.push_back(gauss_arc(zero));
  if (P.size() > 0) {
    MonPolynomial one_minus(P);
    one_minus.add_term(IntVector(d, Int(0)), 1);
    one_minus.add_term(P.generator(0), -1);
    q.polys.push_back(one_minus);
  }
  for (int k = 0; k < 10; ++k) q.polys.push_back(s.polynomial(P));
  for (int k = 0; k < 5; ++k) q.units.push_back(s.vector(d, -3, 3));
  return q;
}

/// Quotient of the complex of Spec N and Spec N^2 against fibers of trop.
inline void quotient_suite(Sampler& s, detail::Recorder& rec) {
  for (std::size_t d : {std::size_t{1}, std::size_t{2}}) {
    AffineMonoid P = free_monoid(d);
    QuotientSample in = sample_quotient_inputs(s, P, 500);
    rec.cases(in.points.size());
    QuotientReport q = quotient_check(P, in.points, in.polys, in.units);
    rec.expect(q.passed, "quotient check fails on Spec N^" + std::to_string(d) +
                             (q.counterexamples.empty() ? "" : ": " + q.counterexamples.front()));
    rec.expect(q.cancelling_points > 0, "no cancellation among the sampled points");
    // oracle: classes = distinct exponent data
    std::set<std::vector<ExtendedNonneg>> fibers;
    for (const auto& x : in.points) fibers.insert(x.exponents().coordinates());
    rec.expect(q.classes == fibers.size(), "class count differs from the number of trop fibers");
    rec.count("points", in.points.size());
    rec.count("classes", q.classes);
    rec.count("cancelling_points", q.cancelling_points);
  }
}

/// Swap quotient of Spec N^2, the trivial action, and BG(Z/2).
inline void twisted_suite(Sampler&, detail::Recorder& rec) {
  auto N = free_monoid(1), N2 = free_monoid(2);
  auto swap = twisted_product(GroupAction{N2, {IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)}});
  rec.cases();
  rec.expect(validate_groupoid(swap).valid, "swap groupoid is not valid");
  rec.expect(faithful_monodromy(swap), "swap groupoid does not have faithful monodromy");

  std::vector<ExtendedNonneg> vals{0, Rational(1, 2), 1, 2, ExtendedNonneg::infinity()};
  std::map<ComplexKey, std::set<std::vector<ExtendedNonneg>>> classes;
  for (const auto& a : vals)
    for (const auto& b : vals) {
      rec.cases();
      ComplexPoint x{0, ExtendedConePoint::from_generator_values(N2, {a, b})};
      auto r = coequalize(swap, x);
      std::set<std::vector<ExtendedNonneg>> orbit;
      for (const auto& y : r.orbit) orbit.insert(y.point.coordinates());
      std::set<std::vector<ExtendedNonneg>> expected{{a, b}, {b, a}};
      rec.expect(orbit == expected, "swap orbit of (" + a.str() + "," + b.str() + ") is not the unordered pair");
      classes[key_of(r.representative)].insert({a, b});
    }
  for (const auto& [k, members] : classes) {
    auto first = *members.begin();
    std::set<std::vector<ExtendedNonneg>> expected{first, {first[1], first[0]}};
    rec.expect(members == expected, "a swap class is not an unordered pair");
  }
  rec.expect(classes.size() == vals.size() * (vals.size() + 1) / 2, "wrong number of swap classes");
  rec.count("swap_classes", classes.size());

  for (const auto& P : {N, N2}) {
    rec.cases();
    auto triv = twisted_product(GroupAction{P, {IntMatrix::identity(P.rank())}});
    rec.expect(triv.R.chart_count() == 1 && triv.s.chart_maps()[0].matrix == IntMatrix::identity(P.rank()) &&
                   triv.t.chart_maps()[0].matrix == IntMatrix::identity(P.rank()),
               "trivial action does not collapse to U");
    rec.expect(validate_groupoid(triv).valid, "trivial twisted product is not valid");
    for (const auto& a : vals) {
      std::vector<ExtendedNonneg> c(P.rank(), a);
      if (P.rank() == 2) c[1] = vals[1];
      auto r = coequalize(triv, ComplexPoint{0, ExtendedConePoint::from_generator_values(P, c)});
      rec.expect(r.orbit.size() == 1, "trivial action has a nontrivial class");
    }
  }

  rec.cases();
  auto U = spec_fan(zero_monoid());
  KatoFan R({zero_monoid(), zero_monoid()}, {});
  KatoFanMorphism fold(R, U, {ChartMap{0, IntMatrix(0, 0)}, ChartMap{0, IntMatrix(0, 0)}});
  KatoGroupoid bg{U, R, fold, fold, GroupoidTables{{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0}, {0, 1}}};
  rec.expect(validate_groupoid(bg).valid, "BG presentation is not a valid groupoid");
  rec.expect(!faithful_monodromy(bg), "BG presentation reports faithful monodromy");
}

/// The projective line: three points, two extended rays glued at the origin.
inline void toric_suite(Sampler&, detail::Recorder& rec) {
  auto res = from_toric_fan(ToricFan{1, {{{1}}, {{-1}}}});
  const KatoFan& F = res.fan;
  rec.cases();
  rec.expect(F.point_count() == 3, "projective line fan has " + std::to_string(F.point_count()) + " points");
  rec.expect(F.chart_count() == 2 && res.cone_count == 3, "projective line fan has the wrong cones");

  std::vector<ExtendedNonneg> vals{0, 1, 2, ExtendedNonneg::infinity()};
  std::vector<ComplexPoint> pts;
  for (std::size_t c = 0; c < 2; ++c)
    for (const auto& v : vals) pts.push_back({c, ExtendedConePoint::from_generator_values(F.chart(c), {v})});
  for (const auto& a : pts)
    for (const auto& b : pts) {
      rec.cases();
      bool expect_equal = (a.chart == b.chart && a.point == b.point) ||
                          (a.point.coordinates()[0] == ExtendedNonneg(0) && b.point.coordinates()[0] == ExtendedNonneg(0));
      rec.expect(complex_points_equal(F, a, b) == expect_equal, "rays are glued wrongly");
    }
  std::set<ComplexKey> classes;
  for (const auto& p : pts) classes.insert(complex_orbit(F, p).begin()->first);
  rec.expect(classes.size() == 7, "two extended rays glued at the origin should give 7 sample classes");

  rec.cases();
  ArcPoint x = ArcPoint::make(ExtendedConePoint::from_generator_values(F.chart(0), {2}), {Rational(1)});
  ComplexPoint t = trop_fan_point(F, 0, x);
  rec.expect(t.chart == 0 && t.point.coordinates() == std::vector<ExtendedNonneg>{2}, "arc with u = 2 is not at 2");
  rec.expect(arc_valuation(x, MonPolynomial::monomial(F.chart(0), F.chart(0).generator(0))) == LogValue(2),
             "-log|chi^s| is not 2");
}

// ---------------------------------------------------------------------------

struct SuiteInfo {
  std::string name;
  std::string title;
  double limit_seconds;
  void (*run)(Sampler&, detail::Recorder&);
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"saturation", "saturation oracle equivalence", 30, saturation_suite},
      {"faces", "face oracle equivalence", 30, faces_suite},
      {"pushout", "fs pushout universal property", 60, pushout_suite},
      {"stratification", "Spec and extended cone stratification", 10, stratification_suite},
      {"multiplicativity", "Gauss and arc multiplicativity", 20, multiplicativity_suite},
      {"eta", "eta tensor identities", 20, eta_suite},
      {"retraction", "retraction and evaluation point", 30, retraction_suite},
      {"quotient", "quotient classes equal trop fibers", 30, quotient_suite},
      {"twisted", "twisted quotient and BG", 10, twisted_suite},
      {"toric", "projective line sanity", 5, toric_suite},
  };
  return all;
}

inline const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

inline SuiteResult run_suite(const SuiteInfo& info, std::uint64_t seed) {
  SuiteResult r;
  r.name = info.name;
  r.title = info.title;
  r.limit_seconds = info.limit_seconds;
  detail::Recorder rec(r);
  Sampler s(seed);
  auto t0 = std::chrono::steady_clock::now();
  try {
    info.run(s, rec);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.limit_seconds) rec.expect(false, "time limit exceeded");
  return r;
}

}  // namespace katofan::checks
