#pragma once

/**
 * @file polyhedral.hpp
 * @brief Exact rational cone geometry: facet normals, Fourier-Motzkin
 *        feasibility, fundamental parallelepipeds and pointed Hilbert bases.
 *
 * Cones are given by integer generators. Routines that need a
 * full-dimensional cone say so; callers pass to span coordinates first.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "katofan/lattice.hpp"

namespace katofan {

/// Calls `visit` with every k-subset of {0..n-1}, in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/**
 * Primitive inward facet normals of the full-dimensional cone spanned by
 * `gens` in R^dim, sorted. A cone equal to all of R^dim has none.
 */
inline std::vector<IntVector> cone_facets(const std::vector<IntVector>& gens, std::size_t dim) {
  if (dim == 0) return {};
  if (rank_of(gens, dim) != dim) throw DomainError("cone_facets: cone is not full-dimensional");
  std::set<IntVector> normals;
  std::vector<IntVector> rows;
  for_each_subset(gens.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
    rows.clear();
    for (auto i : subset) rows.push_back(gens[i]);
    if (rank_of(rows, dim) != dim - 1) return;
    auto ker = kernel_basis(IntMatrix::from_rows(rows, dim));
    if (ker.size() != 1) return;
    IntVector y = ker.front();
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      Int s = dot(y, g);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return;
    normals.insert(neg ? negate(y) : y);
  });
  return {normals.begin(), normals.end()};
}

inline bool in_cone(const std::vector<IntVector>& facets, const IntVector& v) {
  for (const auto& f : facets)
    if (dot(f, v) < 0) return false;
  return true;
}

/// Zero on the lineality space, strictly positive on the rest of the cone.
inline IntVector cone_grading(const std::vector<IntVector>& facets, std::size_t dim) {
  IntVector g(dim, Int(0));
  for (const auto& f : facets) g = add(g, f);
  return g;
}

/// Saturated lattice basis of the lineality space of a full-dimensional cone.
inline std::vector<IntVector> lineality_basis(const std::vector<IntVector>& facets, std::size_t dim) {
  return kernel_basis(IntMatrix::from_rows(facets, dim));
}

/// One linear constraint  coeffs . x  (== or >=)  rhs.
struct LinearConstraint {
  RatVector coeffs;
  Rational rhs;
};

/**
 * Feasibility of { x : E x = e, A x >= a } over Q by Gaussian elimination of
 * the equalities followed by Fourier-Motzkin elimination.
 */
inline bool fm_feasible(std::size_t vars, std::vector<LinearConstraint> equalities,
                        std::vector<LinearConstraint> inequalities) {
  // Substitute out one variable per equality.
  while (!equalities.empty()) {
    LinearConstraint eq = std::move(equalities.back());
    equalities.pop_back();
    std::size_t pivot = vars;
    for (std::size_t j = 0; j < vars; ++j)
      if (eq.coeffs[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == vars) {
      if (eq.rhs != 0) return false;
      continue;
    }
    auto substitute = [&](LinearConstraint& c) {
      if (c.coeffs[pivot] == 0) return;
      Rational f = c.coeffs[pivot] / eq.coeffs[pivot];
      for (std::size_t j = 0; j < vars; ++j) c.coeffs[j] -= f * eq.coeffs[j];
      c.rhs -= f * eq.rhs;
    };
    for (auto& c : equalities) substitute(c);
    for (auto& c : inequalities) substitute(c);
  }

  auto normalize = [&](LinearConstraint c) {
    Rational scale = 0;
    for (const auto& x : c.coeffs)
      if (x != 0) {
        scale = x < 0 ? Rational(-x) : x;
        break;
      }
    if (scale != 0) {
      for (auto& x : c.coeffs) x /= scale;
      c.rhs /= scale;
    }
    return c;
  };
  auto key = [](const LinearConstraint& c) {
    std::vector<Rational> k = c.coeffs;
    k.push_back(c.rhs);
    return k;
  };

  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<LinearConstraint> pos, neg, rest;
    for (auto& c : inequalities) {
      if (c.coeffs[v] > 0)
        pos.push_back(std::move(c));
      else if (c.coeffs[v] < 0)
        neg.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LinearConstraint c{RatVector(vars, Rational(0)), 0};
        Rational a = -n.coeffs[v], b = p.coeffs[v];
        for (std::size_t j = 0; j < vars; ++j) c.coeffs[j] = a * p.coeffs[j] + b * n.coeffs[j];
        c.coeffs[v] = 0;
        c.rhs = a * p.rhs + b * n.rhs;
        rest.push_back(std::move(c));
      }
    std::set<std::vector<Rational>> seen;
    inequalities.clear();
    for (auto& c : rest) {
      bool trivial = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x == 0; });
      if (trivial) {
        if (c.rhs > 0) return false;
        continue;
      }
      auto n = normalize(std::move(c));
      if (seen.insert(key(n)).second) inequalities.push_back(std::move(n));
    }
  }
  for (const auto& c : inequalities)
    if (c.rhs > 0) return false;
  return true;
}

/// Inverse of a nonsingular integer matrix over Q, as rows.
inline std::vector<RatVector> rational_inverse(const IntMatrix& B) {
  const std::size_t n = B.rows();
  std::vector<RatVector> A(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(B(i, j));
    A[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && A[p][col] == 0) ++p;
    if (p == n) throw DomainError("rational_inverse: singular matrix");
    std::swap(A[col], A[p]);
    Rational inv = Rational(1) / A[col][col];
    for (auto& x : A[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || A[i][col] == 0) continue;
      Rational f = A[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) A[i][j] -= f * A[col][j];
    }
  }
  std::vector<RatVector> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(A[i].begin() + static_cast<std::ptrdiff_t>(n), A[i].end());
  return out;
}

/**
 * Nonzero lattice points of the half-open parallelepiped
 * { B t : t in [0,1)^k } for k linearly independent columns B.
 */
inline std::vector<IntVector> parallelepiped_points(const IntMatrix& B) {
  const std::size_t k = B.rows();
  SmithForm s = smith_normal_form(B);
  IntMatrix U_inv = inverse_unimodular(s.U);
  auto B_inv = rational_inverse(B);
  std::vector<IntVector> out;
  IntVector y(k, Int(0));
  for (;;) {
    IntVector x = U_inv.apply(y);
    RatVector frac(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational t = 0;
      for (std::size_t j = 0; j < k; ++j) t += B_inv[i][j] * Rational(x[j]);
      Int fl = floor_div(numerator_of(t), denominator_of(t));
      frac[i] = t - Rational(fl);
    }
    IntVector p(k, Int(0));
    bool nonzero = false;
    for (std::size_t r = 0; r < k; ++r) {
      Rational acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += Rational(B(r, j)) * frac[j];
      p[r] = numerator_of(acc);
      if (p[r] != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < k) {
      y[i] += 1;
      if (y[i] < s.D(i, i)) break;
      y[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

/**
 * Hilbert basis of cone(gens) ∩ Z^dim for a full-dimensional pointed cone.
 *
 * Candidates are the generators plus the lattice points of the fundamental
 * parallelepipeds of all simplicial subcones; every irreducible element lies
 * in one of them. Candidates are then filtered by degree: x survives iff no
 * smaller survivor h has x - h in the cone.
 */
inline std::vector<IntVector> pointed_hilbert_basis(const std::vector<IntVector>& gens,
                                                    const std::vector<IntVector>& facets, std::size_t dim) {
  if (dim == 0) return {};
  IntVector grading = cone_grading(facets, dim);
  std::set<IntVector> candidates;
  for (const auto& g : gens)
    if (!is_zero(g)) candidates.insert(g);
  std::vector<IntVector> cols;
  for_each_subset(gens.size(), dim, [&](const std::vector<std::size_t>& subset) {
    cols.clear();
    for (auto i : subset) cols.push_back(gens[i]);
    if (rank_of(cols, dim) != dim) return;
    for (auto& p : parallelepiped_points(IntMatrix::from_columns(cols, dim))) candidates.insert(std::move(p));
  });
  std::vector<std::pair<Int, IntVector>> ordered;
  for (const auto& c : candidates) ordered.emplace_back(dot(grading, c), c);
  std::sort(ordered.begin(), ordered.end());
  std::vector<IntVector> basis;
  for (const auto& [deg, x] : ordered) {
    bool reducible = false;
    for (const auto& h : basis)
      if (in_cone(facets, sub(x, h))) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/**
 * Generators of cone(gens) ∩ Z^dim for a full-dimensional, possibly
 * non-pointed cone: the lifted Hilbert basis of the pointed quotient plus
 * ± a basis of the lineality lattice.
 */
inline std::vector<IntVector> full_cone_lattice_generators(const std::vector<IntVector>& gens,
                                                           const std::vector<IntVector>& facets, std::size_t dim) {
  auto lin = lineality_basis(facets, dim);
  if (lin.empty()) return pointed_hilbert_basis(gens, facets, dim);
  std::vector<IntVector> out;
  for (const auto& b : lin) {
    out.push_back(b);
    out.push_back(negate(b));
  }
  if (lin.size() == dim) return out;
  auto quotient_rows = kernel_basis(IntMatrix::from_rows(lin, dim));
  IntMatrix pi = IntMatrix::from_rows(quotient_rows, dim);
  IntMatrix sigma = right_inverse(pi);
  std::vector<IntVector> images;
  for (const auto& g : gens) images.push_back(pi.apply(g));
  const std::size_t qdim = quotient_rows.size();
  auto qfacets = cone_facets(images, qdim);
  for (const auto& h : pointed_hilbert_basis(images, qfacets, qdim)) out.push_back(sigma.apply(h));
  return out;
}

}  // namespace katofan
