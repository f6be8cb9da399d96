#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

/// Sorted (index, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t length);
/// Row-major flattening of a matrix.
SparseVector flatten(const IntMatrix& m);
SparseVector flatten(const RatMatrix& m);

/// Subspace of Q^n kept in fully reduced row echelon form: every basis row
/// has leading entry 1 and zeros in all other pivot columns. The form is
/// canonical, so two spans are equal iff their bases are identical.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t ambient_dimension) : ambient_(ambient_dimension) {}

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  std::vector<SparseVector> basis() const;
  std::vector<std::size_t> pivots() const;

  /// v minus its projection along the pivot columns; zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns true if v enlarged the span.
  bool insert(const SparseVector& v);

  friend bool operator==(const RationalSpan& a, const RationalSpan& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;
};

/// Subspace of rows x cols matrices.
class MatrixSpan {
 public:
  MatrixSpan(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), span_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return span_.dimension(); }
  const RationalSpan& vectors() const { return span_; }

  bool insert(const IntMatrix& m) { return span_.insert(flatten(checked(m))); }
  bool insert(const RatMatrix& m) { return span_.insert(flatten(checked(m))); }
  bool insert_flat(const SparseVector& v) { return span_.insert(v); }
  bool contains(const IntMatrix& m) const { return span_.contains(flatten(checked(m))); }
  bool contains(const RatMatrix& m) const { return span_.contains(flatten(checked(m))); }
  bool contains_flat(const SparseVector& v) const { return span_.contains(v); }

  /// Canonical (reduced echelon) basis as matrices.
  std::vector<RatMatrix> basis() const;
  RatMatrix unflatten(const SparseVector& v) const;

  friend bool operator==(const MatrixSpan& a, const MatrixSpan& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.span_ == b.span_;
  }

 private:
  template <class M>
  const M& checked(const M& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) throw UsageError("matrix shape does not match span");
    return m;
  }

  std::size_t rows_;
  std::size_t cols_;
  RationalSpan span_;
};

}  // namespace chevalley
