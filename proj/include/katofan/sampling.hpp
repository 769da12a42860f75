#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded generators for monoids, extended points, arcs and polynomials.
 *
 * Draws use std::mt19937_64 and an explicit modulo-free bounded draw, so a
 * seed produces the same stream on every standard library.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "katofan/trop.hpp"

namespace katofan {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

  IntVector vector(std::size_t d, long lo, long hi) {
    IntVector v(d);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  /// Nonnegative rational with small numerator and denominator.
  Rational small_rational(long max_num = 6, long max_den = 3) {
    return Rational(Int(uniform(0, max_num)), Int(uniform(1, max_den)));
  }

  Rational nonzero_rational() {
    static const std::vector<Rational> pool{Rational(1),     Rational(1),     Rational(1), Rational(-1),
                                            Rational(2),     Rational(1, 2),  Rational(3), Rational(-2),
                                            Rational(-1, 3), Rational(5, 2)};
    return pick(pool);
  }

  /// Raw generators with entries in [lo, hi]; zero vectors are kept.
  std::vector<IntVector> raw_generators(std::size_t d, std::size_t max_gens, long lo, long hi) {
    std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_gens)));
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(vector(d, lo, hi));
    return out;
  }

  /**
   * A sharp fs monoid of rank d: the saturation of a random cone in the
   * positive orthant (so it is pointed).
   */
  AffineMonoid sharp_fs_monoid(std::size_t d, std::size_t max_gens) {
    for (;;) {
      auto raw = raw_generators(d, max_gens, 0, 3);
      for (std::size_t i = 0; i < d; ++i)
        if (chance(1, 2)) {
          IntVector e(d, Int(0));
          e[i] = 1;
          raw.push_back(e);
        }
      auto P = saturate(make_monoid(d, raw));
      if (P.rank() == d && P.size() <= max_gens + d) return P;
    }
  }

  /// Point of the extended cone: random face, finite part from a random dual vector.
  ExtendedConePoint extended_point(const AffineMonoid& P) {
    if (P.rank() == 0) return ExtendedConePoint::zero(P);
    const auto& fs = faces(P);
    Face G = pick(fs);
    RatVector ell(P.rank(), Rational(0));
    for (const auto& f : P.facets())
      if (chance(2, 3)) {
        Rational w = small_rational(4, 2);
        for (std::size_t j = 0; j < ell.size(); ++j) ell[j] += w * Rational(f[j]);
      }
    std::vector<Rational> vals;
    for (auto i : G.generators) vals.push_back(dot(ell, P.generator(i)));
    return ExtendedConePoint::make(P, prime_of(P, G), vals);
  }

  ArcPoint arc_point(const AffineMonoid& P) {
    ExtendedConePoint u = extended_point(P);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < ArcPoint::face_lattice_basis(u).size(); ++i) c.push_back(nonzero_rational());
    return ArcPoint::make(std::move(u), std::move(c));
  }

  /// Random element of P as a small nonnegative combination of generators.
  IntVector element(const AffineMonoid& P, long max_coeff = 2) {
    IntVector v(P.rank(), Int(0));
    for (const auto& g : P.generators()) v = add(v, scale(g, Int(uniform(0, max_coeff))));
    return v;
  }

  MonPolynomial polynomial(const AffineMonoid& P, std::size_t max_terms = 4) {
    MonPolynomial f(P);
    std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < n; ++k) f.add_term(element(P), nonzero_rational());
    return f;
  }

  /**
   * A polynomial a chi^p + b chi^q with u(p) = u(q) finite and the two terms
   * cancelling at x; falls back to a random polynomial when no pair exists.
   */
  MonPolynomial cancelling_polynomial(const ArcPoint& x) {
    const AffineMonoid& P = x.monoid();
    const Face& G = x.exponents().finite_face();
    std::vector<IntVector> face_elems;
    for (int tries = 0; tries < 12; ++tries) {
      IntVector v(P.rank(), Int(0));
      for (auto i : G.generators) v = add(v, scale(P.generator(i), Int(uniform(0, 2))));
      face_elems.push_back(v);
    }
    for (std::size_t a = 0; a < face_elems.size(); ++a)
      for (std::size_t b = a + 1; b < face_elems.size(); ++b) {
        const auto& p = face_elems[a];
        const auto& q = face_elems[b];
        if (p == q || x.exponents().value_at(p) != x.exponents().value_at(q)) continue;
        MonPolynomial f(P);
        f.add_term(p, x.character(q));
        f.add_term(q, -x.character(p));
        if (chance(1, 2)) f.add_term(element(P), nonzero_rational());
        return f;
      }
    return polynomial(P);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace katofan
