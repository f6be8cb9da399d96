#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

/// Position in the basis {u_i} u {v_alpha} of the adjoint model M.
struct BasisIndex {
  enum class Kind { U, V };
  Kind kind;
  /// Simple index for U, root index for V.
  std::size_t index;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Ordering of the basis of M:
///   v_{beta_N}, ..., v_{beta_1}, u_1, ..., u_l, v_{-beta_1}, ..., v_{-beta_N}
/// with beta_1, ..., beta_N the positive roots in root-system order. In this
/// order every e_i is strictly upper and every f_i strictly lower triangular.
class ModelBasis {
 public:
  explicit ModelBasis(const RootSystem& rs) : num_positive_(rs.num_positive()), rank_(rs.rank()) {}

  std::size_t dimension() const { return 2 * num_positive_ + rank_; }
  std::size_t of_root(std::size_t root_index) const;
  std::size_t of_u(std::size_t i) const;
  BasisIndex at(std::size_t position) const;
  /// "v:[1,0]" and "u:1" labels (u labels 1-based).
  std::vector<std::string> legend(const RootSystem& rs) const;

 private:
  std::size_t num_positive_;
  std::size_t rank_;
};

IntMatrix build_e(const RootSystem& rs, std::size_t i);
IntMatrix build_f(const RootSystem& rs, std::size_t i);
IntMatrix build_h(const RootSystem& rs, std::size_t i);
/// Diagonal: h_alpha(u_j) = 0, h_alpha(v_beta) = (beta, alpha^vee) v_beta.
IntMatrix build_h_alpha(const RootSystem& rs, const Root& alpha);
/// Coefficients x with alpha^vee = sum_i x_i alpha_i^vee.
std::vector<Rational> coroot_coefficients(const RootSystem& rs, const Root& alpha);
/// Permutation u_j -> u_j, v_alpha -> v_{-alpha}.
IntMatrix build_omega(const RootSystem& rs);
/// omega X omega (omega is an involution).
IntMatrix conjugate_by_omega(const RootSystem& rs, const IntMatrix& x);

/// Weight (lambda(h_1), ..., lambda(h_l)) of each basis vector of M.
std::vector<std::vector<int>> basis_weights(const RootSystem& rs);

}  // namespace chevalley
