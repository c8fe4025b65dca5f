#ifndef SEMIORTHO_MATRIX_HPP
#define SEMIORTHO_MATRIX_HPP

#include "number.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiortho {

template <class T>
using Vector = std::vector<T>;

using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix with exact entries. Values are immutable once built;
/// every operation returns a fresh matrix.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, std::vector<T>(rows * cols, T(0)));
  }

  static Matrix identity(std::size_t n) {
    std::vector<T> e(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = T(1);
    return Matrix(n, n, std::move(e));
  }

  static Matrix generate(std::size_t rows, std::size_t cols,
                         const std::function<T(std::size_t, std::size_t)>& f) {
    std::vector<T> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) e.push_back(f(i, j));
    return Matrix(rows, cols, std::move(e));
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<T> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row list");
      e.insert(e.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(e));
  }

  /// Columns given as vectors; the result is dim x columns.size().
  static Matrix from_columns(std::size_t dim, const std::vector<Vector<T>>& columns) {
    return generate(dim, columns.size(), [&](std::size_t i, std::size_t j) {
      if (columns[j].size() != dim) throw DimensionError("column length mismatch");
      return columns[j][i];
    });
  }

  static Matrix diagonal(const std::vector<T>& d) {
    return generate(d.size(), d.size(),
                    [&](std::size_t i, std::size_t j) { return i == j ? d[i] : T(0); });
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }
  const std::vector<T>& entries() const { return entries_; }

  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
  }

  Vector<T> row(std::size_t i) const {
    return Vector<T>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vector<T> column(std::size_t j) const {
    Vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  T trace() const {
    require_square("trace");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return x == 0; });
  }

  bool is_identity() const { return is_square() && *this == identity(rows_); }

  /// Block of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    return generate(nr, nc, [&](std::size_t i, std::size_t j) { return (*this)(r0 + i, c0 + j); });
  }

  template <class U>
  Matrix<U> cast() const {
    std::vector<U> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(U(x));
    return Matrix<U>(rows_, cols_, std::move(e));
  }

  Matrix power(std::size_t k) const {
    require_square("power");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    std::vector<T> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    std::vector<T> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator-(const Matrix& a) {
    std::vector<T> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -a.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    std::vector<T> e(a.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = s * a.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    std::vector<T> e(a.rows_ * b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) e[i * b.cols_ + j] += aik * b(k, j);
      }
    }
    return Matrix(a.rows_, b.cols_, std::move(e));
  }

  friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector length mismatch");
    Vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ", ";
        os << to_string(m(i, j));
      }
      os << ']';
    }
    return os << ']';
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionError(std::string(what) + ": matrix " + shape() + " is not square");
  }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionError(std::string("shape mismatch in ") + op + ": " + shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

inline bool is_integral(const RatMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [](const Rational& q) { return is_integral(q); });
}

inline IntMatrix to_integer(const RatMatrix& m) {
  std::vector<Integer> e;
  e.reserve(m.entries().size());
  for (const auto& q : m.entries()) e.push_back(to_integer(q));
  return IntMatrix(m.rows(), m.cols(), std::move(e));
}

template <class T>
T dot(const Vector<T>& v, const Vector<T>& w) {
  if (v.size() != w.size()) throw DimensionError("dot product length mismatch");
  T s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

template <class T>
Vector<T> operator+(const Vector<T>& v, const Vector<T>& w) {
  if (v.size() != w.size()) throw DimensionError("vector length mismatch");
  Vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + w[i];
  return out;
}

template <class T>
Vector<T> operator-(const Vector<T>& v, const Vector<T>& w) {
  if (v.size() != w.size()) throw DimensionError("vector length mismatch");
  Vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - w[i];
  return out;
}

template <class T>
Vector<T> operator*(const T& s, const Vector<T>& v) {
  Vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

template <class T>
Vector<T> unit_vector(std::size_t dim, std::size_t i) {
  Vector<T> v(dim, T(0));
  v.at(i) = T(1);
  return v;
}

/// Block matrix [[a, b], [c, d]].
template <class T>
Matrix<T> block_matrix(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                       const Matrix<T>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionError("inconsistent block shapes");
  }
  std::size_t r1 = a.rows();
  std::size_t c1 = a.cols();
  return Matrix<T>::generate(a.rows() + c.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    if (i < r1) return j < c1 ? a(i, j) : b(i, j - c1);
    return j < c1 ? c(i - r1, j) : d(i - r1, j - c1);
  });
}

}  // namespace semiortho

#endif  // SEMIORTHO_MATRIX_HPP
