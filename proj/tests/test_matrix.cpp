#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abel/matrix.hpp"

using namespace abel;

namespace {

// Independent rank: fraction-free elimination on plain GMP rationals,
// largest-magnitude pivot.
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i)
      if (abs(a[i][c]) > abs(a[best][c])) best = i;
    if (sgn(a[best][c]) == 0) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

Matrix M(std::vector<std::vector<long>> rows) {
  std::vector<Vector> vs;
  for (auto& r : rows) vs.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(vs, rows.empty() ? 0 : rows[0].size());
}

}  // namespace

TEST_CASE("kernel examples") {
  auto k1 = kernel_basis(M({{1, 1}, {2, 2}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vector{-1, 1});

  CHECK(kernel_basis(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());

  auto k3 = kernel_basis(M({{1, 2, 3}}));
  REQUIRE(k3.size() == 2);
  CHECK(k3[0] == Vector{-2, 1, 0});
  CHECK(k3[1] == Vector{-3, 0, 1});
}

TEST_CASE("rank-nullity against an independent elimination") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-3, 3), dim(1, 6);
  for (int n = 0; n < 200; ++n) {
    std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    // Low-rank products make nontrivial kernels common.
    std::size_t inner = static_cast<std::size_t>(dim(rng)) % 4 + 1;
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(inner)), B(inner, std::vector<Rational>(cols));
    for (auto& r : A) for (auto& x : r) x = entry(rng);
    for (auto& r : B) for (auto& x : r) x = Rational(entry(rng), 1 + (n % 3));
    std::vector<std::vector<Rational>> C(rows, std::vector<Rational>(cols));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t t = 0; t < inner; ++t) C[i][j] += A[i][t] * B[t][j];
        m(i, j) = Scalar(C[i][j]);
      }
    auto ker = kernel_basis(m);
    CHECK(rank(m) == oracle_rank(C));
    CHECK(ker.size() + oracle_rank(C) == cols);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("kernel over Q(sqrt 3)") {
  Scalar r3 = Scalar::sqrt_of(3);
  Matrix m = Matrix::from_rows({{Scalar(1), r3}, {r3, Scalar(3)}}, 2);
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]) == Vector{0, 0});
}

TEST_CASE("rref is idempotent and spans compare") {
  Matrix m = M({{2, 4, 6}, {1, 1, 1}, {3, 5, 7}});
  Matrix r = rref(m);
  CHECK(rref(r) == r);
  CHECK(same_span({{1, 2, 3}, {1, 1, 1}}, {{2, 3, 4}, {0, 1, 2}}, 3));
  CHECK_FALSE(same_span({{1, 0, 0}}, {{0, 1, 0}}, 3));
  CHECK(span_basis({{2, 4}, {1, 2}}, 2) == std::vector<Vector>{{1, 2}});
}

TEST_CASE("shape validation") {
  CHECK_THROWS(Matrix(2, 2, std::vector<Scalar>(3)));
}
