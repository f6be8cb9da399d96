#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/errors.hpp"
#include "chevalley/ring.hpp"

namespace chevalley {

/// Dense row-major matrix over an exact scalar type. Products skip zero
/// entries, which keeps the very sparse model matrices cheap to multiply.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool is_zero() const {
    for (const T& x : data_) {
      if (!::chevalley::is_zero(x)) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const T& x : data_) n += ::chevalley::is_zero(x) ? 0 : 1;
    return n;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (T& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix product dimension mismatch");
    if (a.empty() || b.empty()) return Matrix(a.rows_, b.cols_);
    const T zero = zero_like(a.data_.front());
    Matrix out(a.rows_, b.cols_, zero);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (::chevalley::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (::chevalley::is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<Gaussian>;
using RingMatrix = Matrix<RingElem>;

template <class T>
bool is_zero(const Matrix<T>& m) {
  return m.is_zero();
}

/// XY - YX.
template <class T>
Matrix<T> bracket(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw UsageError("bracket needs square matrices of equal size");
  }
  Matrix<T> out = x * y;
  out -= y * x;
  return out;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw UsageError("trace of a non-square matrix");
  if (m.empty()) return T{};
  T t = zero_like(m(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class U, class T, class F>
Matrix<U> map_entries(const Matrix<T>& m, F&& f) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f(m(r, c));
  }
  return out;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return map_entries<Rational>(m, [](const Integer& x) { return Rational(x); });
}

inline GaussMatrix to_gaussian(const IntMatrix& m) {
  return map_entries<Gaussian>(m, [](const Integer& x) { return Gaussian(x, 0); });
}

/// Entries of a rational matrix, throwing ConstructionBroken if any is not
/// an integer.
IntMatrix require_integral(const RatMatrix& m, const std::string& what);

/// Image of an integer matrix under Z -> R.
RingMatrix specialize(const IntMatrix& m, const RingSpec& ring);

/// Rational view of a matrix over ZZ or QQ.
RatMatrix to_rational(const RingMatrix& m);

/// Entrywise exact division; ConstructionBroken if some entry is not divisible.
IntMatrix divide_exact(const IntMatrix& m, const Integer& d, const std::string& what);

/// gcd of all entries (0 for the zero matrix).
Integer content(const IntMatrix& m);

/// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// Index of the first power k with m^k = 0, or nullopt-like 0 if m^n != 0.
std::size_t nilpotency_index(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace chevalley
