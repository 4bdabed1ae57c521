#ifndef BASISKIT_MATRIX_HPP
#define BASISKIT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/scalar.hpp"

namespace basiskit {

template <Scalar T>
using Vector = std::vector<T>;

// Dense row-major matrix.
//
// Index convention used throughout the library: for a group element written
// a^i_j, entry(j, i) holds a^i_j. The lower index selects the row and the
// upper index selects the column.
template <Scalar T>
class Matrix {
 public:
  using scalar_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = scalar_traits<T>::zero())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<Vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
    return m;
  }

  static Matrix diagonal(const Vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] Vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector<T>(s.begin(), s.end());
  }
  [[nodiscard]] std::vector<Vector<T>> row_list() const {
    std::vector<Vector<T>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& lhs = a(r, k);
        if (scalar_traits<T>::exact && scalar_is_zero(lhs)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator*(const T& k, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= k;
    return out;
  }

  [[nodiscard]] bool equals(const Matrix& o, double tol = kDefaultTolerance) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!scalar_equal(data_[i], o.data_[i], tol)) return false;
    }
    return true;
  }

  // Exact structural equality (no tolerance); used for ordering in sets.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  [[nodiscard]] double max_abs_diff(const Matrix& o) const {
    require_same_shape(o);
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      m = std::max(m, scalar_traits<T>::magnitude(data_[i] - o.data_[i]));
    }
    return m;
  }

  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <Scalar T>
bool exactly_zero(const T& x) {
  return scalar_is_zero(x, 0.0);
}

// Index of the pivot row for column `col` at or below `from`; rows_ if none.
template <Scalar T>
std::size_t pick_pivot(const Matrix<T>& m, std::size_t col, std::size_t from) {
  std::size_t best = m.rows();
  double best_mag = 0.0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if constexpr (scalar_traits<T>::exact) {
      if (!m(r, col).is_zero()) return r;
    } else {
      const double mag = std::fabs(m(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
  }
  return best;
}

template <Scalar T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

template <Scalar T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det = scalar_traits<T>::one();
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(m, col, col);
    if (p == n || detail::exactly_zero(m(p, col))) return scalar_traits<T>::zero();
    if (p != col) {
      detail::swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::exactly_zero(m(r, col))) continue;
      const T factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

template <Scalar T>
bool is_invertible(const Matrix<T>& m, double tol = kDefaultTolerance) {
  return m.square() && !scalar_is_zero(determinant(m), tol);
}

// Solves X * lhs = rhs for X (row-vector systems stacked as rows of rhs).
template <Scalar T>
Matrix<T> solve_right(const Matrix<T>& lhs, const Matrix<T>& rhs, double tol = kDefaultTolerance);

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, double tol = kDefaultTolerance) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  if (scalar_is_zero(determinant(m), tol)) throw Error(ErrorKind::Singular, "matrix is not invertible");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::pick_pivot(a, col, col);
    if (p == n) throw Error(ErrorKind::Singular, "matrix is not invertible");
    detail::swap_rows(a, p, col);
    detail::swap_rows(inv, p, col);
    const T pivot = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= pivot;
      inv(col, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || detail::exactly_zero(a(r, col))) continue;
      const T factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

template <Scalar T>
Matrix<T> solve_right(const Matrix<T>& lhs, const Matrix<T>& rhs, double tol) {
  return rhs * inverse(lhs, tol);
}

// Column-vector action: (m u)_r = sum_c m(r,c) u_c.
template <Scalar T>
Vector<T> apply_column(const Matrix<T>& m, const Vector<T>& u) {
  if (m.cols() != u.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  Vector<T> out(m.rows(), scalar_traits<T>::zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * u[c];
  return out;
}

// Row-vector action: (u m)_c = sum_r u_r m(r,c).
template <Scalar T>
Vector<T> apply_row(const Vector<T>& u, const Matrix<T>& m) {
  if (m.rows() != u.size()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix shape");
  Vector<T> out(m.cols(), scalar_traits<T>::zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (scalar_traits<T>::exact && scalar_is_zero(u[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += u[r] * m(r, c);
  }
  return out;
}

template <Scalar T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

template <Scalar T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

template <Scalar T>
bool vector_equal(const Vector<T>& a, const Vector<T>& b, double tol = kDefaultTolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!scalar_equal(a[i], b[i], tol)) return false;
  }
  return true;
}

template <Scalar T>
double vector_max_abs_diff(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, scalar_traits<T>::magnitude(a[i] - b[i]));
  return m;
}

template <Scalar T>
Vector<T> kronecker_delta(std::size_t n, std::size_t k) {
  Vector<T> v(n, scalar_traits<T>::zero());
  v[k] = scalar_traits<T>::one();
  return v;
}

template <Scalar T>
std::string to_string(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += scalar_traits<T>::to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

template <Scalar T>
std::string to_string(const Vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += scalar_traits<T>::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace basiskit

#endif  // BASISKIT_MATRIX_HPP
