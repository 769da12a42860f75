#pragma once

/**
 * @file trop.hpp
 * @brief Gauss and arc points of Spec k[P] in −log scale, the tropicalization
 *        map, the retraction onto the skeleton, and the η⊗̂x evaluation.
 *
 * Values are ExtendedNonneg: −log|f|_x, with ∞ standing for |f|_x = 0. The
 * base field is trivially valued, so every nonzero coefficient has norm 1.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "katofan/stack.hpp"

namespace katofan {

using LogValue = ExtendedNonneg;

/// Finite sum of a_p chi^p over P; zero coefficients are never stored.
class MonPolynomial {
 public:
  MonPolynomial() = default;
  explicit MonPolynomial(AffineMonoid P) : monoid_(std::move(P)) {}

  /// Adds a chi^p; throws DomainError if p is not in P.
  MonPolynomial& add_term(const IntVector& p, const Rational& a) {
    if (p.size() != monoid_.rank()) throw DimensionError("polynomial term: exponent length does not match rank");
    if (!monoid_.contains(p)) throw DomainError("polynomial term: exponent outside the monoid");
    if (a == 0) return *this;
    Rational& c = terms_[p];
    c += a;
    if (c == 0) terms_.erase(p);
    return *this;
  }

  static MonPolynomial monomial(const AffineMonoid& P, const IntVector& p, const Rational& a = 1) {
    MonPolynomial f(P);
    f.add_term(p, a);
    return f;
  }

  const AffineMonoid& monoid() const { return monoid_; }
  const std::map<IntVector, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend MonPolynomial operator*(const MonPolynomial& f, const MonPolynomial& g) {
    if (!(f.monoid_ == g.monoid_)) throw DomainError("product of polynomials over different monoids");
    MonPolynomial h(f.monoid_);
    for (const auto& [p, a] : f.terms_)
      for (const auto& [q, b] : g.terms_) {
        Rational& c = h.terms_[add(p, q)];
        c += a * b;
      }
    for (auto it = h.terms_.begin(); it != h.terms_.end();)
      it = it->second == 0 ? h.terms_.erase(it) : std::next(it);
    return h;
  }

  friend MonPolynomial operator+(const MonPolynomial& f, const MonPolynomial& g) {
    if (!(f.monoid_ == g.monoid_)) throw DomainError("sum of polynomials over different monoids");
    MonPolynomial h = f;
    for (const auto& [q, b] : g.terms_) {
      Rational& c = h.terms_[q];
      c += b;
      if (c == 0) h.terms_.erase(q);
    }
    return h;
  }

  friend bool operator==(const MonPolynomial& f, const MonPolynomial& g) {
    return f.monoid_ == g.monoid_ && f.terms_ == g.terms_;
  }

 private:
  AffineMonoid monoid_;
  std::map<IntVector, Rational> terms_;
};

/// Element of k[M] (x) k[P] with M = P^gp, as (m, p) -> a.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  explicit BiPolynomial(AffineMonoid P) : monoid_(std::move(P)) {}

  BiPolynomial& add_term(const IntVector& m, const IntVector& p, const Rational& a) {
    if (m.size() != monoid_.rank() || p.size() != monoid_.rank())
      throw DimensionError("bipolynomial term: exponent length does not match rank");
    if (!monoid_.contains(p)) throw DomainError("bipolynomial term: exponent outside the monoid");
    if (a == 0) return *this;
    auto key = std::make_pair(m, p);
    Rational& c = terms_[key];
    c += a;
    if (c == 0) terms_.erase(key);
    return *this;
  }

  const AffineMonoid& monoid() const { return monoid_; }
  const std::map<std::pair<IntVector, IntVector>, Rational>& terms() const { return terms_; }

  /// The f_m with F = sum_m chi^m (x) f_m.
  std::map<IntVector, MonPolynomial> components() const {
    std::map<IntVector, MonPolynomial> out;
    for (const auto& [mp, a] : terms_) {
      auto it = out.try_emplace(mp.first, monoid_).first;
      it->second.add_term(mp.second, a);
    }
    return out;
  }

 private:
  AffineMonoid monoid_;
  std::map<std::pair<IntVector, IntVector>, Rational> terms_;
};

enum class Pullback { pi, mu };

/// pi#: chi^p -> 1 (x) chi^p; mu#: chi^p -> chi^p (x) chi^p.
inline BiPolynomial pullback(const MonPolynomial& f, Pullback which) {
  BiPolynomial F(f.monoid());
  IntVector zero(f.monoid().rank(), Int(0));
  for (const auto& [p, a] : f.terms()) F.add_term(which == Pullback::pi ? zero : p, p, a);
  return F;
}

/**
 * Arc point: chi^p -> c(p) s^{u(p)} on the finite face, 0 elsewhere. The
 * character c is stored on the Hermite basis of the face lattice.
 */
class ArcPoint {
 public:
  ArcPoint() = default;

  static ArcPoint make(ExtendedConePoint u, std::vector<Rational> coeffs) {
    ArcPoint x;
    x.basis_ = face_lattice_basis(u);
    if (coeffs.size() != x.basis_.size())
      throw DomainError("coeffs has " + std::to_string(coeffs.size()) + " entries, expected " +
                        std::to_string(x.basis_.size()));
    for (const auto& c : coeffs)
      if (c == 0) throw DomainError("coeffs must be nonzero");
    x.u_ = std::move(u);
    x.coeffs_ = std::move(coeffs);
    return x;
  }

  /// Basis on which the coefficients of an arc over u are given.
  static std::vector<IntVector> face_lattice_basis(const ExtendedConePoint& u) {
    return hermite_rows(face_elements(u.monoid(), u.finite_face()), u.monoid().rank());
  }

  const AffineMonoid& monoid() const { return u_.monoid(); }
  const ExtendedConePoint& exponents() const { return u_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// c(p) for p in the face lattice.
  Rational character(const IntVector& p) const {
    auto k = lattice_membership(basis_, p);
    if (!k) throw DomainError("character evaluated outside the face lattice");
    Rational c = 1;
    for (std::size_t i = 0; i < k->size(); ++i) c *= rational_pow(coeffs_[i], (*k)[i]);
    return c;
  }

 private:
  ExtendedConePoint u_;
  std::vector<Rational> coeffs_;
  std::vector<IntVector> basis_;
};

/// The Gauss point with c = 1: the monomial seminorm J_P(u).
inline ArcPoint gauss_arc(const ExtendedConePoint& u) {
  return ArcPoint::make(u, std::vector<Rational>(ArcPoint::face_lattice_basis(u).size(), Rational(1)));
}

/// min over the support of u(p); ∞ for the zero polynomial.
inline LogValue gauss_valuation(const ExtendedConePoint& u, const MonPolynomial& f) {
  if (!(u.monoid() == f.monoid())) throw DomainError("gauss_valuation: polynomial over a different monoid");
  LogValue best = LogValue::infinity();
  for (const auto& [p, a] : f.terms()) best = std::min(best, u.value_at(p));
  return best;
}

/// Least exponent whose total coefficient survives; ∞ if everything cancels.
inline LogValue arc_valuation(const ArcPoint& x, const MonPolynomial& f) {
  if (!(x.monoid() == f.monoid())) throw DomainError("arc_valuation: polynomial over a different monoid");
  std::map<Rational, Rational> by_exponent;
  for (const auto& [p, a] : f.terms()) {
    LogValue v = x.exponents().value_at(p);
    if (v.is_infinite()) continue;
    by_exponent[v.value()] += a * x.character(p);
  }
  for (const auto& [e, c] : by_exponent)
    if (c != 0) return LogValue(e);
  return LogValue::infinity();
}

/// p -> arc_valuation(x, chi^p), read off on the generators.
inline ExtendedConePoint trop_point(const ArcPoint& x) {
  std::vector<ExtendedNonneg> vals;
  for (const auto& g : x.monoid().generators()) vals.push_back(arc_valuation(x, MonPolynomial::monomial(x.monoid(), g)));
  return ExtendedConePoint::from_generator_values(x.monoid(), vals);
}

/// A point of the skeleton J_P(u), kept apart from arbitrary extended points.
struct GaussPoint {
  ExtendedConePoint u;
  friend bool operator==(const GaussPoint&, const GaussPoint&) = default;
};

/// p_P(x) = J_P(trop x).
inline GaussPoint retract(const ArcPoint& x) { return GaussPoint{trop_point(x)}; }
inline GaussPoint retract(const GaussPoint& x) { return x; }

inline ExtendedConePoint trop_point(const GaussPoint& x) {
  std::vector<ExtendedNonneg> vals;
  for (const auto& g : x.u.monoid().generators())
    vals.push_back(gauss_valuation(x.u, MonPolynomial::monomial(x.u.monoid(), g)));
  return ExtendedConePoint::from_generator_values(x.u.monoid(), vals);
}

inline LogValue gauss_valuation(const GaussPoint& x, const MonPolynomial& f) { return gauss_valuation(x.u, f); }

/// |F|_{eta (x) x} = max_m |f_m|_x, in −log scale.
inline LogValue eta_tensor_valuation(const ArcPoint& x, const BiPolynomial& F) {
  if (!(x.monoid() == F.monoid())) throw DomainError("eta_tensor_valuation: polynomial over a different monoid");
  LogValue best = LogValue::infinity();
  for (const auto& [m, f] : F.components()) best = std::min(best, arc_valuation(x, f));
  return best;
}

inline ComplexPoint trop_fan_point(const KatoFan& F, std::size_t chart, const ArcPoint& x) {
  if (chart >= F.chart_count()) throw DomainError("trop_fan_point: chart index out of range");
  if (!(F.chart(chart) == x.monoid())) throw DomainError("trop_fan_point: arc point is not on this chart");
  return ComplexPoint{chart, trop_point(x)};
}

// ---------------------------------------------------------------------------
// The quotient check

struct QuotientReport {
  bool passed = true;
  std::size_t points = 0;
  std::size_t polynomials = 0;
  std::size_t lemma_checks = 0;
  std::size_t class_pairs = 0;
  std::size_t unit_checks = 0;
  std::size_t monomial_checks = 0;
  std::size_t classes = 0;
  std::size_t cancelling_points = 0;  ///< points where some sampled f has arc value != Gauss value
  std::vector<std::string> counterexamples;
};

namespace detail {

inline std::string describe(const ExtendedConePoint& u) {
  std::string s = "(";
  auto c = u.coordinates();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + ")";
}

}  // namespace detail

/**
 * Point-level comparison of the quotient of the complex of Spec P by the
 * identifications x ~ J(trop x) with the fibers of trop, plus the η⊗̂x
 * identities and the unit normalization on every sampled point.
 */
inline QuotientReport quotient_check(const AffineMonoid& P, const std::vector<ArcPoint>& sample_points,
                                     const std::vector<MonPolynomial>& sample_polys,
                                     const std::vector<IntVector>& sample_units) {
  QuotientReport rep;
  rep.points = sample_points.size();
  rep.polynomials = sample_polys.size();
  auto fail = [&](std::string msg) {
    rep.passed = false;
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(std::move(msg));
  };

  KatoFan U = spec_fan(P);
  KatoGroupoid triv = trivial_groupoid(U);

  // (a) lemma identities, (c) unit normalization, (d) monomial agreement
  for (std::size_t k = 0; k < sample_points.size(); ++k) {
    const ArcPoint& x = sample_points[k];
    GaussPoint r = retract(x);
    bool cancels = false;
    for (const auto& f : sample_polys) {
      LogValue arc = arc_valuation(x, f);
      LogValue gauss = gauss_valuation(r, f);
      if (arc != gauss) cancels = true;
      ++rep.lemma_checks;
      if (eta_tensor_valuation(x, pullback(f, Pullback::pi)) != arc)
        fail("pi identity fails at point " + std::to_string(k));
      if (eta_tensor_valuation(x, pullback(f, Pullback::mu)) != gauss)
        fail("mu identity fails at point " + std::to_string(k));
      if (gauss > arc) fail("Gauss value exceeds arc value at point " + std::to_string(k));
    }
    if (cancels) ++rep.cancelling_points;
    for (const auto& m : sample_units) {
      BiPolynomial F(P);
      F.add_term(m, IntVector(P.rank(), Int(0)), 1);
      ++rep.unit_checks;
      if (eta_tensor_valuation(x, F) != LogValue(0)) fail("unit normalization fails at point " + std::to_string(k));
    }
    for (const auto& g : P.generators()) {
      auto mono = MonPolynomial::monomial(P, g);
      ++rep.monomial_checks;
      if (gauss_valuation(r, mono) != arc_valuation(x, mono))
        fail("monomial values differ at point " + std::to_string(k));
    }
  }

  // (b) classes of x ~ J(trop x) in the coequalizer against fibers of trop
  std::vector<ComplexKey> reps;
  std::vector<ComplexKey> trop_keys;
  std::map<ComplexKey, ComplexKey> class_to_trop, trop_to_class;
  for (std::size_t k = 0; k < sample_points.size(); ++k) {
    const ArcPoint& x = sample_points[k];
    ComplexPoint tx = trop_fan_point(U, 0, x);
    ComplexPoint tj = ComplexPoint{0, trop_point(retract(x))};
    ComplexKey cx = key_of(coequalize(triv, tx).representative);
    ComplexKey cj = key_of(coequalize(triv, tj).representative);
    if (cx != cj) fail("x and J(trop x) fall in different classes at point " + std::to_string(k));
    ComplexKey t = key_of(tx);
    auto [it1, new1] = class_to_trop.emplace(cx, t);
    if (!new1 && it1->second != t) fail("one class holds two trop values: " + detail::describe(x.exponents()));
    auto [it2, new2] = trop_to_class.emplace(t, cx);
    if (!new2 && it2->second != cx) fail("one trop fiber splits into two classes: " + detail::describe(x.exponents()));
    rep.class_pairs += k;
  }
  rep.classes = class_to_trop.size();
  return rep;
}

}  // namespace katofan
