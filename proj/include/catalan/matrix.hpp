#ifndef CATALAN_MATRIX_HPP
#define CATALAN_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "catalan/rational.hpp"

namespace catalan {

// Dense matrix over an exact scalar.  Zero-by-k and k-by-zero shapes are
// legal values and flow through every routine unchanged; empty products are
// identities of the appropriate shape.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(init.size()), cols_(0) {
    for (auto const& row : init) cols_ = row.size();
    data_.reserve(rows_ * cols_);
    for (auto const& row : init) {
      if (row.size() != cols_) {
        throw std::invalid_argument("Matrix: ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  T const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (auto const& v : data_) {
      if (!(v == T(0))) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("Matrix: product shape mismatch");
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        T const& ark = a(r, k);
        if (ark == T(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          p(r, c) += ark * b(k, c);
        }
      }
    }
    return p;
  }

  friend Matrix operator+(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("Matrix: sum shape mismatch");
    }
    Matrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
    return s;
  }

  friend Matrix operator-(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("Matrix: difference shape mismatch");
    }
    Matrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] - b.data_[i];
    return s;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(Matrix const& a, Matrix const& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

inline QMatrix to_rational(IntMatrix const& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  }
  return q;
}

// Stack a on top of b (equal column counts).
inline QMatrix vstack(QMatrix const& a, QMatrix const& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

inline QMatrix hstack(QMatrix const& a, QMatrix const& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  QMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(sel, c));
    }
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared
// 128-bit copy.  Exact; overflow throws rather than degrading.
inline std::size_t rank(QMatrix const& m) {
  using i128 = __int128;
  std::size_t const nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<i128>> a(nr, std::vector<i128>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    std::int64_t l = 1;
    for (std::size_t c = 0; c < nc; ++c) l = std::lcm(l, m(r, c).den());
    for (std::size_t c = 0; c < nc; ++c) {
      a[r][c] = i128(m(r, c).num()) * (l / m(r, c).den());
    }
  }
  i128 prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t sel = rk;
    while (sel < nr && a[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    std::swap(a[rk], a[sel]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      for (std::size_t c = col + 1; c < nc; ++c) {
        i128 x, y;
        if (__builtin_mul_overflow(a[rk][col], a[r][c], &x) ||
            __builtin_mul_overflow(a[r][col], a[rk][c], &y)) {
          throw std::overflow_error("rank: 128-bit overflow");
        }
        a[r][c] = (x - y) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

// Basis of the right null space, returned as the columns of a
// cols-by-nullity matrix.
inline QMatrix kernel_basis(QMatrix const& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  QMatrix k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      k(pivots[i], j) = -r(i, free_cols[j]);
    }
  }
  return k;
}

// One solution X of A X = B, if any.
inline bool solve(QMatrix const& a, QMatrix const& b, QMatrix& x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  QMatrix aug = hstack(a, b);
  auto pivots = rref(aug);
  for (auto p : pivots) {
    if (p >= a.cols()) return false;  // inconsistent system
  }
  x = QMatrix(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      x(pivots[i], c) = aug(i, a.cols() + c);
    }
  }
  return true;
}

}  // namespace catalan

#endif  // CATALAN_MATRIX_HPP
