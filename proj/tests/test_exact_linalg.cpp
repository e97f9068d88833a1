#include <doctest.h>

#include <random>

#include "abelatt/exact_linalg.hpp"
#include "helpers.hpp"

using namespace abelatt;

namespace {

// Independent determinant oracle: cofactor expansion.
Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  if (n == 1) return m(0, 0);
  Int sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Int term = m(0, j) * cofactor_det(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

// Independent rank oracle: plain rational Gaussian elimination.
std::size_t rational_rank(const IntMatrix& input) {
  RatMatrix m = to_rational(input);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rat f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(abelatt::testing::rng());
  }
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(4, 4, 5);
    CHECK(determinant(m) == cofactor_det(m));
  }
  // det(I + J) of size k is k + 1.
  for (std::size_t k = 1; k <= 8; ++k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = (i == j) ? 2 : 1;
    }
    CHECK(determinant(m) == Int(static_cast<long>(k + 1)));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("integer rank agrees with rational elimination") {
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(5, 7, 3);
    CHECK(integer_rank(m) == rational_rank(m));
  }
  // Forced rank deficiency: duplicate and scaled rows.
  IntMatrix m = random_matrix(3, 5, 3);
  IntMatrix stacked(6, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      stacked(i, j) = m(i, j);
      stacked(3 + i, j) = m(i, j) * Int(-7);
    }
  }
  CHECK(integer_rank(stacked) == rational_rank(stacked));
  CHECK(integer_rank(stacked) <= 3);
  CHECK(integer_rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("smith normal form") {
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  CHECK(smith_diagonal(d) == std::vector<Int>{Int(1), Int(6)});

  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(4, 4, 4);
    if (determinant(m) == 0) continue;
    const auto diag = smith_diagonal(m);
    REQUIRE(diag.size() == 4);
    Int prod(1);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] > 0);
      if (i + 1 < diag.size()) CHECK(diag[i + 1] % diag[i] == 0);
      prod *= diag[i];
    }
    CHECK(prod == abs(determinant(m)));
  }
}

TEST_CASE("linear solve") {
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(5, 5, 4);
    if (determinant(a) == 0) continue;
    const RatMatrix ar = to_rational(a);
    std::vector<Rat> rhs(5);
    for (auto& v : rhs) v = Rat(abelatt::testing::random_index(9)) - 4;
    const auto x = solve_linear(ar, rhs);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < 5; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < 5; ++j) acc += ar(i, j) * (*x)[j];
      CHECK(acc == rhs[i]);
    }
  }
  // Singular system.
  RatMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_FALSE(solve_linear(s, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("matrix algebra helpers") {
  const IntMatrix a = random_matrix(3, 3, 3);
  const RatMatrix ar = to_rational(a);
  CHECK(to_integer(ar).has_value());
  CHECK(*to_integer(ar) == a);
  RatMatrix frac(1, 1);
  frac(0, 0) = Rat(1, 2);
  CHECK_FALSE(to_integer(frac).has_value());
  CHECK(ar.transposed().transposed() == ar);
  const RatMatrix id = RatMatrix::identity(3);
  CHECK(id * ar == ar);
  CHECK(ar * id == ar);
}
