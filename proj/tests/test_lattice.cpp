#include <catch_amalgamated.hpp>

#include <random>

#include "katofan/lattice.hpp"

using namespace katofan;

namespace {

IntMatrix mat(std::vector<std::vector<int>> rows, std::size_t cols) {
  std::vector<IntVector> r;
  for (auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(r, cols);
}

Int det(const IntMatrix& M) {
  // Bareiss-free cofactor expansion; matrices here are tiny.
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = M(r, c);
    Int term = M(0, j) * det(minor);
    d += (j % 2 == 0) ? term : Int(-term);
  }
  return d;
}

void check_snf(const IntMatrix& M) {
  auto s = smith_normal_form(M);
  REQUIRE(s.U * M * s.V == s.D);
  REQUIRE(abs_int(det(s.U)) == 1);
  REQUIRE(abs_int(det(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) REQUIRE(s.D(i, j) == 0);
  const std::size_t k = std::min(s.D.rows(), s.D.cols());
  for (std::size_t i = 0; i < k; ++i) REQUIRE(s.D(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (s.D(i, i) != 0) REQUIRE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
}

}  // namespace

TEST_CASE("smith normal form of small matrices", "[lattice]") {
  auto s = smith_normal_form(mat({{2, 0}, {0, 3}}, 2));
  CHECK(s.D == mat({{1, 0}, {0, 6}}, 2));
  check_snf(mat({{2, 0}, {0, 3}}, 2));

  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  CHECK(smith_normal_form(mat({{2, 4}}, 2)).D == mat({{2, 0}}, 2));
  check_snf(mat({{2, 4}}, 2));
  check_snf(IntMatrix(0, 3));
}

TEST_CASE("smith normal form on random matrices", "[lattice]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), shape(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = shape(rng), n = shape(rng);
    IntMatrix M(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
    check_snf(M);
    // row permutation leaves D unchanged
    IntMatrix P = M;
    if (m > 1) P.swap_rows(0, m - 1);
    CHECK(smith_normal_form(P).D == smith_normal_form(M).D);
  }
}

TEST_CASE("kernel basis", "[lattice]") {
  auto k = kernel_basis(mat({{1, 1}}, 2));
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntVector{1, -1} || k[0] == IntVector{-1, 1}));

  k = kernel_basis(mat({{2, -3}}, 2));
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntVector{3, 2} || k[0] == IntVector{-3, -2}));
  // box oracle: every kernel vector in [-5,5]^2 is a multiple of k[0]
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      if (2 * a - 3 * b == 0) CHECK(lattice_membership(k, IntVector{a, b}).has_value());

  CHECK(kernel_basis(IntMatrix::identity(2)).empty());
}

TEST_CASE("kernel basis is saturated and annihilated", "[lattice]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix M(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) M(i, j) = entry(rng);
    auto k = kernel_basis(M);
    for (const auto& v : k) CHECK(is_zero(M.apply(v)));
    IntVector combo(4, Int(0));
    std::vector<Int> coeffs;
    for (const auto& v : k) {
      coeffs.emplace_back(entry(rng));
      combo = add(combo, scale(v, coeffs.back()));
    }
    auto c = lattice_membership(k, combo);
    REQUIRE(c.has_value());
    CHECK(*c == IntVector(coeffs.begin(), coeffs.end()));
  }
}

TEST_CASE("lattice membership", "[lattice]") {
  std::vector<IntVector> b{{2, 0}, {0, 2}};
  CHECK(lattice_membership(b, IntVector{2, 2}) == IntVector{1, 1});
  CHECK_FALSE(lattice_membership(b, IntVector{1, 0}).has_value());
  CHECK(lattice_membership({IntVector{3, 2}}, IntVector{6, 4}) == IntVector{2});
  CHECK_THROWS_AS(lattice_membership(b, IntVector{1, 0, 0}), DimensionError);
}

TEST_CASE("hermite basis and factoring", "[lattice]") {
  auto h = hermite_rows({{2, 0}, {0, 1}, {4, 1}}, 2);
  CHECK(h == std::vector<IntVector>{{2, 0}, {0, 1}});
  IntMatrix pi = mat({{1, 1, 0}, {0, 0, 1}}, 3);
  IntMatrix f = mat({{2, 0}, {0, 5}}, 2);
  auto hm = f * pi;
  CHECK(factor_through(hm, pi) == f);
  CHECK_THROWS_AS(factor_through(mat({{1, 0, 0}}, 3), pi), DomainError);
  CHECK(is_unimodular(mat({{1, 1}, {0, 1}}, 2)));
  CHECK_FALSE(is_unimodular(mat({{2, 0}, {0, 1}}, 2)));
  IntMatrix A = mat({{2, 1}, {1, 1}}, 2);
  CHECK(A * inverse_unimodular(A) == IntMatrix::identity(2));
}
