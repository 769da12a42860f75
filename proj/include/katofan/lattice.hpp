#pragma once

/**
 * @file lattice.hpp
 * @brief Exact integer linear algebra: Smith and Hermite normal forms,
 *        saturated kernels, lattice membership and integral factorisation.
 *
 * Every monoid computation eventually lands here. All routines are pure
 * functions on value types.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "katofan/arith.hpp"

namespace katofan {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// `cols` is needed so that an empty row list still has a shape.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("from_rows: ragged row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Int>& entries() const { return entries_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> row_list() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector product: dimension mismatch");
    IntVector r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.entries_ < b.entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }

  /// Block matrix [a | b].
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw DimensionError("hconcat: row mismatch");
    IntMatrix c(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
    }
    return c;
  }

  /// Block matrix [a ; b].
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
    return hconcat(a.transpose(), b.transpose()).transpose();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct SmithForm {
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix D;  ///< diagonal, D = U * M * V
  IntMatrix V;  ///< unimodular, cols x cols
  std::size_t rank = 0;
};

/**
 * Smith normal form with transformation matrices.
 *
 * Pivot: smallest nonzero absolute value in the active block, ties broken by
 * row-major position. Diagonal entries are nonnegative with d1 | d2 | ...
 */
inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithForm s{IntMatrix::identity(m), M, IntMatrix::identity(n), 0};
  IntMatrix& D = s.D;
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    bool found_any = false;
    for (;;) {
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (!found || abs_int(D(i, j)) < abs_int(D(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      found_any = true;
      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (D(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (D(t, j) != 0) residue = true;
      }
      if (residue) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_any) break;
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

/**
 * Row-style Hermite normal form of the lattice spanned by `rows`.
 * Returns a basis in echelon form: positive pivots, entries above each pivot
 * reduced into [0, pivot). Zero rows are dropped.
 */
inline std::vector<IntVector> hermite_rows(std::vector<IntVector> A, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < A.size(); ++col) {
    for (;;) {
      std::size_t best = A.size();
      for (std::size_t i = r; i < A.size(); ++i)
        if (A[i][col] != 0 && (best == A.size() || abs_int(A[i][col]) < abs_int(A[best][col]))) best = i;
      if (best == A.size()) break;
      std::swap(A[r], A[best]);
      bool residue = false;
      for (std::size_t i = r + 1; i < A.size(); ++i) {
        if (A[i][col] == 0) continue;
        Int q = A[i][col] / A[r][col];
        for (std::size_t j = 0; j < ncols; ++j) A[i][j] -= q * A[r][j];
        if (A[i][col] != 0) residue = true;
      }
      if (!residue) break;
    }
    if (r >= A.size() || A[r][col] == 0) continue;
    if (A[r][col] < 0) A[r] = negate(A[r]);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(A[i][col], A[r][col]);
      if (q != 0)
        for (std::size_t j = 0; j < ncols; ++j) A[i][j] -= q * A[r][j];
    }
    ++r;
  }
  A.resize(r);
  return A;
}

/// Basis of the saturated lattice {v : M v = 0}, in Hermite normal form.
inline std::vector<IntVector> kernel_basis(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank; j < M.cols(); ++j) basis.push_back(s.V.column(j));
  return hermite_rows(std::move(basis), M.cols());
}

/// Some integer solution of A x = b, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw DimensionError("solve_integer: dimension mismatch");
  SmithForm s = smith_normal_form(A);
  IntVector w = s.U.apply(b);
  IntVector y(A.cols(), Int(0));
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < s.rank) {
      if (w[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = w[i] / s.D(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

/**
 * Coefficients c with sum c_i basis_i = v, or nothing when v is outside the
 * lattice. Basis vectors are assumed linearly independent.
 */
inline std::optional<IntVector> lattice_membership(const std::vector<IntVector>& basis, const IntVector& v) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw DimensionError("lattice_membership: dimension mismatch");
  if (basis.empty()) {
    if (is_zero(v)) return IntVector{};
    return std::nullopt;
  }
  return solve_integer(IntMatrix::from_columns(basis, v.size()), v);
}

inline IntMatrix inverse_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("inverse_unimodular: matrix not square");
  SmithForm s = smith_normal_form(M);
  if (s.rank != M.rows()) throw DomainError("inverse_unimodular: matrix is singular");
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) throw DomainError("inverse_unimodular: matrix is not unimodular");
  return s.V * s.U;
}

inline bool is_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) return false;
  SmithForm s = smith_normal_form(M);
  if (s.rank != M.rows()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

/// sigma with pi * sigma = 1, for pi surjective onto Z^rows.
inline IntMatrix right_inverse(const IntMatrix& pi) {
  SmithForm s = smith_normal_form(pi);
  if (s.rank != pi.rows()) throw DomainError("right_inverse: map is not surjective");
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) throw DomainError("right_inverse: map is not surjective");
  IntMatrix head(pi.cols(), pi.rows());
  for (std::size_t i = 0; i < pi.cols(); ++i)
    for (std::size_t j = 0; j < pi.rows(); ++j) head(i, j) = s.V(i, j);
  return head * s.U;
}

/// The unique h' with h' * pi = h, when pi is surjective and h kills ker(pi).
inline std::optional<IntMatrix> try_factor_through(const IntMatrix& h, const IntMatrix& pi) {
  if (h.cols() != pi.cols()) throw DimensionError("factor_through: domain mismatch");
  IntMatrix candidate = h * right_inverse(pi);
  if (!(candidate * pi == h)) return std::nullopt;
  return candidate;
}

inline IntMatrix factor_through(const IntMatrix& h, const IntMatrix& pi) {
  auto f = try_factor_through(h, pi);
  if (!f) throw DomainError("factor_through: map does not vanish on the kernel");
  return *f;
}

/// Basis (HNF) of the saturation of the lattice spanned by `vectors` in Z^dim.
inline std::vector<IntVector> saturated_span(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  auto annihilator = kernel_basis(IntMatrix::from_rows(vectors, dim));
  return kernel_basis(IntMatrix::from_rows(annihilator, dim));
}

/// Rank over Q.
inline std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t ncols) {
  std::vector<RatVector> A;
  for (const auto& r : rows) A.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < A.size(); ++col) {
    std::size_t p = rank;
    while (p < A.size() && A[p][col] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[rank], A[p]);
    for (std::size_t i = rank + 1; i < A.size(); ++i) {
      if (A[i][col] == 0) continue;
      Rational f = A[i][col] / A[rank][col];
      for (std::size_t j = col; j < ncols; ++j) A[i][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// A rational solution of A x = b (free variables set to zero), if consistent.
inline std::optional<RatVector> solve_rational(const std::vector<RatVector>& A_in, const RatVector& b,
                                               std::size_t ncols) {
  if (A_in.size() != b.size()) throw DimensionError("solve_rational: dimension mismatch");
  std::vector<RatVector> A = A_in;
  RatVector rhs = b;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < A.size(); ++col) {
    std::size_t p = r;
    while (p < A.size() && A[p][col] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[r], A[p]);
    std::swap(rhs[r], rhs[p]);
    Rational inv = Rational(1) / A[r][col];
    for (std::size_t j = col; j < ncols; ++j) A[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][col] == 0) continue;
      Rational f = A[i][col];
      for (std::size_t j = col; j < ncols; ++j) A[i][j] -= f * A[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < A.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  RatVector x(ncols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

}  // namespace katofan
