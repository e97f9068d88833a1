#include "abelatt/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelatt {

template <class T>
DenseMatrix<T> DenseMatrix<T>::operator+(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("DenseMatrix: shape mismatch in +");
  }
  DenseMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::operator-(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("DenseMatrix: shape mismatch in -");
  }
  DenseMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::operator*(const DenseMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("DenseMatrix: shape mismatch in *");
  }
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& aik = (*this)(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += aik * other(k, j);
      }
    }
  }
  return out;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::transposed() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

template class DenseMatrix<Int>;
template class DenseMatrix<Rat>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  }
  return out;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = m(i, j).get_num();
    }
  }
  return out;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("determinant: matrix not square");
  }
  const std::size_t n = input.rows();
  if (n == 0) return Int(1);
  IntMatrix m = input;
  Int prev_pivot(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Any nonzero pivot works for Bareiss; take the first.
    std::size_t pivot_row = k;
    while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return Int(0);
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

// Strips the gcd of a row, in place. Leaves zero rows alone.
void strip_content(IntMatrix& m, std::size_t row) {
  Int g(0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(row, j).get_mpz_t());
  }
  if (g == 0 || g == 1) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_divexact(m(row, j).get_mpz_t(), m(row, j).get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

std::size_t integer_rank(IntMatrix m, std::size_t stop_at) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  std::size_t col = 0;
  for (; rank < rows && col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(rank, j), m(pivot, j));
    }
    strip_content(m, rank);
    const Int p = m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const Int c = m(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        m(i, j) = m(i, j) * p - c * m(rank, j);
      }
      strip_content(m, i);
    }
    ++rank;
    if (stop_at != 0 && rank >= stop_at) return rank;
  }
  return rank;
}

std::vector<Int> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a nonzero entry of minimal absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best(0);
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        Int a = abs(m(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));

    // Reduce row and column against the pivot until both are clear.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = m(i, t) / m(t, t);  // truncated division is fine here
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        }
        if (m(i, t) != 0) {
          // Remainder smaller than the pivot: swap rows and restart.
          for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = m(t, j) / m(t, t);
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        }
        if (m(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
          dirty = true;
        }
      }
    }

    // Pivot must divide every remaining entry; absorb a violating row.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
      for (std::size_t j = t + 1; j < cols && divides_all; ++j) {
        if (m(i, j) % m(t, t) != 0) {
          for (std::size_t jj = 0; jj < cols; ++jj) m(t, jj) += m(i, jj);
          divides_all = false;
        }
      }
    }
    if (!divides_all) continue;  // redo the same t

    if (m(t, t) < 0) {
      for (std::size_t j = t; j < cols; ++j) m(t, j) = -m(t, j);
    }
    diag.push_back(m(t, t));
    ++t;
  }
  return diag;
}

std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> rhs) {
  if (a.rows() != a.cols() || a.rows() != rhs.size()) {
    throw std::invalid_argument("solve_linear: shape mismatch");
  }
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      std::swap(rhs[k], rhs[pivot]);
    }
    const Rat inv_p = Rat(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) * inv_p;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat sum = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a(i, j) * x[j];
    x[i] = sum / a(i, i);
  }
  return x;
}

}  // namespace abelatt
