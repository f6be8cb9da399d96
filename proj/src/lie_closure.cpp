#include "chevalley/lie_closure.hpp"

#include <algorithm>
#include <deque>

#include "chevalley/adjoint.hpp"

namespace chevalley {

SparseIntMatrix::SparseIntMatrix(const IntMatrix& m) : n_(m.rows()), rows_(m.rows()) {
  if (m.rows() != m.cols()) throw UsageError("sparse matrix must be square");
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (!chevalley::is_zero(m(r, c))) rows_[r].emplace_back(c, m(r, c));
    }
  }
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m(n_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (const auto& [c, x] : rows_[r]) m(r, c) = x;
  }
  return m;
}

SparseVector SparseIntMatrix::flatten() const {
  SparseVector v;
  for (std::size_t r = 0; r < n_; ++r) {
    for (const auto& [c, x] : rows_[r]) v.emplace_back(r * n_ + c, Rational(x));
  }
  return v;
}

SparseIntMatrix SparseIntMatrix::primitive() const {
  Integer g = 0;
  const Integer* first = nullptr;
  for (const auto& row : rows_) {
    for (const auto& [c, x] : row) {
      if (!first) first = &x;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
  }
  if (!first) return *this;
  if (sgn(*first) < 0) g = -g;
  SparseIntMatrix out = *this;
  for (auto& row : out.rows_) {
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

std::vector<Rational> SparseIntMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != n_) throw UsageError("vector length mismatch");
  std::vector<Rational> y(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (const auto& [c, a] : rows_[r]) {
      if (!chevalley::is_zero(x[c])) y[r] += a * x[c];
    }
  }
  return y;
}

namespace {

using Row = std::vector<std::pair<std::size_t, Integer>>;

Row compress(std::map<std::size_t, Integer>& acc) {
  Row out;
  for (auto& [c, x] : acc) {
    if (!is_zero(x)) out.emplace_back(c, std::move(x));
  }
  return out;
}

}  // namespace

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.n_ != b.n_) throw UsageError("sparse product size mismatch");
  SparseIntMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    if (a.rows_[r].empty()) continue;
    std::map<std::size_t, Integer> acc;
    for (const auto& [k, x] : a.rows_[r]) {
      for (const auto& [c, y] : b.rows_[k]) acc[c] += x * y;
    }
    out.rows_[r] = compress(acc);
  }
  return out;
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.n_ != b.n_) throw UsageError("sparse difference size mismatch");
  SparseIntMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    std::map<std::size_t, Integer> acc(a.rows_[r].begin(), a.rows_[r].end());
    for (const auto& [c, y] : b.rows_[r]) acc[c] -= y;
    out.rows_[r] = compress(acc);
  }
  return out;
}

SparseIntMatrix bracket(const SparseIntMatrix& x, const SparseIntMatrix& y) { return x * y - y * x; }

LieClosure lie_closure(const std::vector<IntMatrix>& generators) {
  if (generators.empty()) throw UsageError("lie_closure needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const IntMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n) throw UsageError("generators must be square of equal size");
  }
  LieClosure result{MatrixSpan(n, n), {}};
  std::vector<SparseIntMatrix> accepted;
  auto offer = [&](const SparseIntMatrix& m) {
    if (m.is_zero()) return;
    SparseIntMatrix p = m.primitive();
    if (result.span.insert_flat(p.flatten())) {
      accepted.push_back(std::move(p));
    }
  };
  for (const IntMatrix& g : generators) offer(SparseIntMatrix(g));
  for (std::size_t p = 0; p < accepted.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      // accepted may grow inside offer(); copy the operands first.
      SparseIntMatrix x = accepted[p];
      SparseIntMatrix y = accepted[q];
      offer(bracket(x, y));
    }
  }
  result.monomials.reserve(accepted.size());
  for (const SparseIntMatrix& m : accepted) result.monomials.push_back(m.dense());
  return result;
}

LieClosure generate_lie_algebra(const RootSystem& rs) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    gens.push_back(build_e(rs, i));
    gens.push_back(build_f(rs, i));
  }
  return lie_closure(gens);
}

std::size_t RootSpaceDecomposition::total_dimension() const {
  std::size_t total = 0;
  for (const auto& [w, s] : spaces) total += s.dimension();
  return total;
}

const MatrixSpan& RootSpaceDecomposition::at(const WeightLabel& w) const {
  auto it = spaces.find(w);
  if (it == spaces.end()) throw UsageError("no such weight space");
  return it->second;
}

RootSpaceDecomposition root_space_decomposition(const MatrixSpan& g, const std::vector<IntMatrix>& h_list) {
  const std::size_t n = g.rows();
  std::vector<WeightLabel> diag(n, WeightLabel(h_list.size(), 0));
  for (std::size_t j = 0; j < h_list.size(); ++j) {
    const IntMatrix& h = h_list[j];
    if (h.rows() != n || h.cols() != n) throw UsageError("h matrix has the wrong size");
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r != c && !is_zero(h(r, c))) throw UsageError("root space decomposition needs diagonal h");
      }
      diag[r][j] = static_cast<int>(h(r, r).get_si());
    }
  }
  RootSpaceDecomposition out;
  for (const SparseVector& v : g.vectors().basis()) {
    std::map<WeightLabel, SparseVector> pieces;
    for (const auto& [k, x] : v) {
      const std::size_t r = k / n;
      const std::size_t c = k % n;
      WeightLabel w(h_list.size());
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = diag[r][j] - diag[c][j];
      pieces[w].emplace_back(k, x);
    }
    for (auto& [w, piece] : pieces) {
      if (!g.contains_flat(piece)) {
        throw ConstructionBroken("weight component leaves the algebra; closure is broken");
      }
      out.spaces.try_emplace(w, n, n).first->second.insert_flat(piece);
    }
  }
  if (out.total_dimension() != g.dimension()) {
    throw ConstructionBroken("decomposition incomplete: weight spaces do not add up to dim g");
  }
  return out;
}

WeightLabel weight_of_root(const RootSystem& rs, const Root& alpha) {
  WeightLabel w(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) w[i] = rs.simple_pairing(alpha, i);
  return w;
}

std::optional<std::size_t> root_of_weight(const RootSystem& rs, const WeightLabel& w) {
  for (std::size_t k = 0; k < rs.size(); ++k) {
    if (weight_of_root(rs, rs.root(k)) == w) return k;
  }
  return std::nullopt;
}

RationalSpan spin_submodule(const RootSystem& rs, const std::vector<Rational>& start) {
  const ModelBasis basis(rs);
  const std::size_t n = basis.dimension();
  if (start.size() != n) throw UsageError("start vector has the wrong length");
  if (std::all_of(start.begin(), start.end(), [](const Rational& x) { return is_zero(x); })) {
    throw UsageError("spin_submodule needs a nonzero start vector");
  }
  std::vector<SparseIntMatrix> ops;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    ops.emplace_back(build_e(rs, i));
    ops.emplace_back(build_f(rs, i));
    ops.emplace_back(build_h(rs, i));
  }
  RationalSpan span(n);
  std::deque<std::vector<Rational>> todo;
  span.insert(to_sparse(start));
  todo.push_back(start);
  while (!todo.empty() && span.dimension() < n) {
    std::vector<Rational> v = std::move(todo.front());
    todo.pop_front();
    for (const SparseIntMatrix& op : ops) {
      std::vector<Rational> w = op.apply(v);
      if (span.insert(to_sparse(w))) todo.push_back(std::move(w));
    }
  }
  return span;
}

TriangularReport triangular_report(const RootSystem& rs, const LieClosure& g, const LieClosure& n_plus,
                                   const LieClosure& n_minus) {
  TriangularReport rep;
  const std::size_t n = g.span.rows();
  rep.dim_n_plus = n_plus.dimension();
  rep.dim_n_minus = n_minus.dimension();
  rep.dim_g = g.dimension();

  MatrixSpan h(n, n);
  for (std::size_t i = 0; i < rs.rank(); ++i) h.insert(build_h(rs, i));
  rep.dim_h = h.dimension();

  for (const RatMatrix& m : n_plus.span.basis()) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c <= r; ++c) {
        if (!is_zero(m(r, c))) rep.n_plus_strictly_upper = false;
      }
    }
  }
  for (const RatMatrix& m : n_minus.span.basis()) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) {
        if (!is_zero(m(r, c))) rep.n_minus_strictly_lower = false;
      }
    }
  }
  for (const RatMatrix& m : g.span.basis()) {
    if (!is_zero(trace(m))) rep.traceless = false;
  }

  MatrixSpan sum(n, n);
  std::size_t parts = 0;
  for (const LieClosure* part : {&n_minus, &n_plus}) {
    for (const SparseVector& v : part->span.vectors().basis()) {
      if (!g.span.contains_flat(v)) rep.direct_sum = false;
      sum.insert_flat(v);
      ++parts;
    }
  }
  for (const SparseVector& v : h.vectors().basis()) {
    if (!g.span.contains_flat(v)) rep.direct_sum = false;
    sum.insert_flat(v);
    ++parts;
  }
  if (sum.dimension() != parts || sum.dimension() != rep.dim_g) rep.direct_sum = false;

  const std::size_t npos = rs.num_positive();
  if (rep.dim_n_plus != npos) rep.failures.push_back("dim n+ != number of positive roots");
  if (rep.dim_n_minus != npos) rep.failures.push_back("dim n- != number of positive roots");
  if (rep.dim_h != rs.rank()) rep.failures.push_back("h_i are not linearly independent");
  if (!rep.n_plus_strictly_upper) rep.failures.push_back("n+ is not strictly upper triangular");
  if (!rep.n_minus_strictly_lower) rep.failures.push_back("n- is not strictly lower triangular");
  if (!rep.traceless) rep.failures.push_back("g contains a matrix with nonzero trace");
  if (!rep.direct_sum) rep.failures.push_back("g != n- (+) h (+) n+");
  return rep;
}

}  // namespace chevalley
