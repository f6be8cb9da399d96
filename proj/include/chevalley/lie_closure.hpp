#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/root_system.hpp"
#include "chevalley/span.hpp"

namespace chevalley {

/// Square matrix stored as per-row (column, value) lists.
class SparseIntMatrix {
 public:
  explicit SparseIntMatrix(std::size_t n = 0) : n_(n), rows_(n) {}
  explicit SparseIntMatrix(const IntMatrix& m);

  std::size_t size() const { return n_; }
  bool is_zero() const;
  IntMatrix dense() const;
  SparseVector flatten() const;
  /// Divides by the gcd of the entries (and fixes the sign of the first entry).
  SparseIntMatrix primitive() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows_;
};

SparseIntMatrix bracket(const SparseIntMatrix& x, const SparseIntMatrix& y);

/// Bracket-closed span of a generating set, with the Lie monomials that were
/// accepted as basis witnesses (integral and primitive).
struct LieClosure {
  MatrixSpan span;
  std::vector<IntMatrix> monomials;

  std::size_t dimension() const { return span.dimension(); }
};

/// Smallest subspace containing the generators and closed under XY - YX.
/// Every pair of accepted monomials is bracketed exactly once.
LieClosure lie_closure(const std::vector<IntMatrix>& generators);

/// Closure of {e_i, f_i}.
LieClosure generate_lie_algebra(const RootSystem& rs);

using WeightLabel = std::vector<int>;

/// Simultaneous ad(h)-eigenspaces of a Lie algebra of matrices, for diagonal h.
struct RootSpaceDecomposition {
  std::map<WeightLabel, MatrixSpan> spaces;

  std::size_t total_dimension() const;
  const MatrixSpan& at(const WeightLabel& w) const;
};

/// Each basis element of g splits along the entry weights (h_r - h_c); the
/// pieces are eigenvectors of every ad(h) and stay in g. ConstructionBroken if
/// a piece leaves g or the dimensions do not add up.
RootSpaceDecomposition root_space_decomposition(const MatrixSpan& g, const std::vector<IntMatrix>& h_list);

/// ((alpha, alpha_1^vee), ..., (alpha, alpha_l^vee)).
WeightLabel weight_of_root(const RootSystem& rs, const Root& alpha);
/// The unique root with the given weight, if any.
std::optional<std::size_t> root_of_weight(const RootSystem& rs, const WeightLabel& w);

/// Smallest subspace of M containing start and stable under all e_i, f_i, h_i.
RationalSpan spin_submodule(const RootSystem& rs, const std::vector<Rational>& start);

struct TriangularReport {
  std::size_t dim_n_plus = 0;
  std::size_t dim_h = 0;
  std::size_t dim_n_minus = 0;
  std::size_t dim_g = 0;
  bool n_plus_strictly_upper = true;
  bool n_minus_strictly_lower = true;
  bool traceless = true;
  bool direct_sum = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks g = n^- (+) h (+) n^+ with n^+ strictly upper and n^- strictly lower
/// triangular, and that g consists of traceless matrices.
TriangularReport triangular_report(const RootSystem& rs, const LieClosure& g, const LieClosure& n_plus,
                                   const LieClosure& n_minus);

}  // namespace chevalley
