#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abelatt/exact_linalg_fwd.hpp"
#include "abelatt/numeric.hpp"

namespace abelatt {

/// Small dense row-major matrix over an exact scalar type (Int or Rat).
/// Everything here is desk-scale: dimensions in the low hundreds.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const DenseMatrix& other) const { return !(*this == other); }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  DenseMatrix operator+(const DenseMatrix& other) const;
  DenseMatrix operator-(const DenseMatrix& other) const;
  DenseMatrix operator*(const DenseMatrix& other) const;
  DenseMatrix transposed() const;

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

extern template class DenseMatrix<Int>;
extern template class DenseMatrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
/// Fails if any entry has a denominator != 1.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Exact rank by integer echelon reduction with content stripping; no
/// rational arithmetic, no tolerances. `stop_at` (if nonzero) allows an
/// early exit once that rank is reached.
std::size_t integer_rank(IntMatrix m, std::size_t stop_at = 0);

/// Diagonal of the Smith normal form (nonzero entries only, each dividing
/// the next). The product of the entries of a full-rank square matrix is
/// |det|, i.e. the index of the row lattice in Z^n.
std::vector<Int> smith_diagonal(IntMatrix m);

/// Solves the square system a * x = rhs exactly; nullopt if singular.
std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> rhs);

}  // namespace abelatt
