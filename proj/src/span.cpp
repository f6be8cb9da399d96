#include "chevalley/span.hpp"

#include <algorithm>

namespace chevalley {

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!is_zero(dense[k])) v.emplace_back(k, dense[k]);
  }
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t length) {
  std::vector<Rational> out(length);
  for (const auto& [k, x] : v) out.at(k) = x;
  return out;
}

SparseVector flatten(const IntMatrix& m) {
  SparseVector v;
  const auto& d = m.data();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!is_zero(d[k])) v.emplace_back(k, Rational(d[k]));
  }
  return v;
}

SparseVector flatten(const RatMatrix& m) { return to_sparse(m.data()); }

std::vector<SparseVector> RationalSpan::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> RationalSpan::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

SparseVector RationalSpan::reduce(const SparseVector& v) const {
  for (const auto& [k, x] : v) {
    if (k >= ambient_) throw UsageError("vector index beyond ambient dimension");
  }
  std::map<std::size_t, Rational> acc(v.begin(), v.end());
  // Basis rows vanish on every other pivot column, so the coefficient of each
  // row is v's original entry at its pivot.
  for (const auto& [k, x] : v) {
    auto row = rows_.find(k);
    if (row == rows_.end()) continue;
    for (const auto& [c, y] : row->second) {
      Rational& slot = acc[c];
      slot -= x * y;
    }
  }
  SparseVector out;
  for (auto& [k, x] : acc) {
    if (!is_zero(x)) out.emplace_back(k, std::move(x));
  }
  return out;
}

bool RationalSpan::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().first;
  const Rational lead = r.front().second;
  for (auto& [k, x] : r) x /= lead;
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& entry, std::size_t key) { return entry.first < key; });
    if (it == row.end() || it->first != pivot) continue;
    const Rational factor = it->second;
    std::map<std::size_t, Rational> acc(row.begin(), row.end());
    for (const auto& [c, y] : r) acc[c] -= factor * y;
    row.clear();
    for (auto& [c, y] : acc) {
      if (!is_zero(y)) row.emplace_back(c, std::move(y));
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<RatMatrix> MatrixSpan::basis() const {
  std::vector<RatMatrix> out;
  for (const SparseVector& v : span_.basis()) out.push_back(unflatten(v));
  return out;
}

RatMatrix MatrixSpan::unflatten(const SparseVector& v) const {
  RatMatrix m(rows_, cols_);
  for (const auto& [k, x] : v) m.data().at(k) = x;
  return m;
}

}  // namespace chevalley
