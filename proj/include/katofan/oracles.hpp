#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force reference computations used by tests and `check`.
 *
 * Nothing here calls into the facet, Hilbert basis or Fourier-Motzkin code;
 * each oracle re-derives its answer from definitions by enumeration.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "katofan/arith.hpp"
#include "katofan/lattice.hpp"

namespace katofan::oracle {

/**
 * Carathéodory membership test for cone(gens). A vector lies in the cone
 * iff it has nonnegative coordinates on some basis of span(gens) made of
 * generators, so each such basis is inverted once (adjugate and
 * determinant) and queries only multiply.
 */
class ConeOracle {
 public:
  ConeOracle(std::vector<IntVector> gens, std::size_t d) : gens_(std::move(gens)), d_(d) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!is_zero(gens_[i])) nz.push_back(i);
    rank_ = 0;
    for (std::size_t r = std::min(nz.size(), d_); r > 0 && rank_ == 0; --r)
      for_each_subset(nz, r, [&](const std::vector<std::size_t>& cols) {
        if (auto b = invert(cols)) {
          rank_ = r;
          bases_.push_back(*std::move(b));
        }
      });
  }

  bool contains(const IntVector& v) const {
    if (is_zero(v)) return true;
    if (bases_.empty()) return false;
    for (std::size_t b = 0; b < bases_.size(); ++b) {
      const Basis& B = bases_[b];
      IntVector y(rank_, Int(0));  // det * coordinates
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t k = 0; k < rank_; ++k) y[i] += B.adj[i][k] * v[B.rows[k]];
      if (b == 0) {
        // v in span(gens)? Same answer for every basis.
        for (std::size_t c = 0; c < d_; ++c) {
          Int s = 0;
          for (std::size_t i = 0; i < rank_; ++i) s += y[i] * gens_[B.cols[i]][c];
          if (s != B.det * v[c]) return false;
        }
      }
      bool nonneg = true;
      for (const auto& x : y)
        if ((B.det > 0 && x < 0) || (B.det < 0 && x > 0)) nonneg = false;
      if (nonneg) return true;
    }
    return false;
  }

 private:
  struct Basis {
    std::vector<std::size_t> cols;  // generator indices
    std::vector<std::size_t> rows;  // coordinates with a nonzero minor
    std::vector<IntVector> adj;
    Int det;
  };

  template <class F>
  static void for_each_subset(const std::vector<std::size_t>& from, std::size_t r, F&& f) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == r) {
        f(pick);
        return;
      }
      for (std::size_t i = start; i < from.size(); ++i) {
        pick.push_back(from[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }

  static Int determinant(const std::vector<IntVector>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m[0][c] == 0) continue;
      std::vector<IntVector> minor;
      for (std::size_t r = 1; r < n; ++r) {
        IntVector row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(m[r][k]);
        minor.push_back(std::move(row));
      }
      Int term = m[0][c] * determinant(minor);
      det += (c % 2 == 0) ? term : Int(-term);
    }
    return det;
  }

  std::optional<Basis> invert(const std::vector<std::size_t>& cols) const {
    const std::size_t r = cols.size();
    std::vector<std::size_t> all(d_);
    for (std::size_t i = 0; i < d_; ++i) all[i] = i;
    std::optional<Basis> out;
    for_each_subset(all, r, [&](const std::vector<std::size_t>& rows) {
      if (out) return;
      std::vector<IntVector> m(r, IntVector(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) m[i][k] = gens_[cols[k]][rows[i]];
      Int det = determinant(m);
      if (det == 0) return;
      Basis B{cols, rows, std::vector<IntVector>(r, IntVector(r)), det};
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
          std::vector<IntVector> minor;
          for (std::size_t a = 0; a < r; ++a) {
            if (a == k) continue;
            IntVector row;
            for (std::size_t b = 0; b < r; ++b)
              if (b != i) row.push_back(m[a][b]);
            minor.push_back(std::move(row));
          }
          Int c = determinant(minor);
          B.adj[i][k] = ((i + k) % 2 == 0) ? c : Int(-c);
        }
      out = std::move(B);
    });
    return out;
  }

  std::vector<IntVector> gens_;
  std::size_t d_;
  std::size_t rank_ = 0;
  std::vector<Basis> bases_;
};

inline bool cone_contains(const std::vector<IntVector>& gens, const IntVector& v) {
  return ConeOracle(gens, v.size()).contains(v);
}

/// Rank of a list of integer vectors by rational elimination.
inline std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t d) {
  std::vector<RatVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < d; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline void for_each_box_point(std::size_t d, long lo, long hi, const std::function<void(const IntVector&)>& visit) {
  IntVector v(d, Int(lo));
  for (;;) {
    visit(v);
    std::size_t i = 0;
    while (i < d) {
      if (v[i] < hi) {
        v[i] += 1;
        break;
      }
      v[i] = lo;
      ++i;
    }
    if (i == d) return;
  }
}

/// cone(gens) ∩ Z^d ∩ [0, box]^d, optionally restricted to a sublattice.
inline std::set<IntVector> box_cone_points(const std::vector<IntVector>& gens, std::size_t d, long box,
                                           const std::vector<IntVector>* lattice = nullptr) {
  std::set<IntVector> out;
  ConeOracle cone(gens, d);
  for_each_box_point(d, 0, box, [&](const IntVector& v) {
    if (lattice && !lattice_membership(*lattice, v)) return;
    if (cone.contains(v)) out.insert(v);
  });
  return out;
}

/// Elements of the monoid generated by nonnegative `gens` inside [0, box]^d.
inline std::set<IntVector> box_monoid_points(const std::vector<IntVector>& gens, std::size_t d, long box) {
  std::set<IntVector> seen{IntVector(d, Int(0))};
  std::vector<IntVector> queue(seen.begin(), seen.end());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      if (is_zero(g)) continue;
      IntVector w = add(queue[h], g);
      bool inside = true;
      for (const auto& x : w)
        if (x < 0 || x > box) inside = false;
      if (inside && seen.insert(w).second) queue.push_back(w);
    }
  return seen;
}

/**
 * Is the index set S a face of cone(gens)? By the transposition theorem a
 * functional vanishing exactly on S and positive elsewhere exists iff no
 * nonzero nonnegative combination of the other generators lies in span(S),
 * i.e. 0 is not in the convex hull of their images modulo span(S).
 */
inline bool is_face_subset(const std::vector<IntVector>& gens, const std::vector<std::size_t>& S, std::size_t d) {
  std::vector<IntVector> span_rows;
  std::vector<bool> in_s(gens.size(), false);
  for (auto i : S) {
    in_s[i] = true;
    span_rows.push_back(gens[i]);
  }
  // rows of Nrm annihilate span(S): images modulo span(S) are Nrm * g
  IntMatrix Nrm = span_rows.empty() ? IntMatrix::identity(d)
                                    : IntMatrix::from_rows(kernel_basis(IntMatrix::from_rows(span_rows, d)), d);
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!in_s[i]) pts.push_back(Nrm.apply(gens[i]));
  for (const auto& p : pts)
    if (is_zero(p)) return false;
  // 0 in conv(pts)? Carathéodory over affinely independent subsets.
  const std::size_t m = Nrm.rows();
  std::vector<IntVector> lifted;
  for (const auto& p : pts) {
    IntVector q = p;
    q.push_back(1);
    lifted.push_back(q);
  }
  IntVector target(m, Int(0));
  target.push_back(1);
  return !cone_contains(lifted, target);
}

/// All faces of cone(gens) as sorted index sets, by scanning every subset.
inline std::set<std::vector<std::size_t>> face_subsets(const std::vector<IntVector>& gens, std::size_t d) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = gens.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) S.push_back(i);
    if (is_face_subset(gens, S, d)) out.insert(S);
  }
  return out;
}

/**
 * Integer row vectors x in [-bound, bound]^k with x * A = a and x * B = b,
 * by exhaustive search.
 */
inline std::vector<IntVector> row_solutions(const IntMatrix& A, const IntVector& a, const IntMatrix& B,
                                            const IntVector& b, long bound) {
  std::vector<IntVector> out;
  const std::size_t k = A.rows();
  for_each_box_point(k, -bound, bound, [&](const IntVector& x) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += x[i] * A(i, j);
      if (s != a[j]) return;
    }
    for (std::size_t j = 0; j < B.cols(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += x[i] * B(i, j);
      if (s != b[j]) return;
    }
    out.push_back(x);
  });
  return out;
}

}  // namespace katofan::oracle
