#include "chevalley/adjoint.hpp"

#include <cstdlib>

namespace chevalley {

std::size_t ModelBasis::of_root(std::size_t root_index) const {
  if (root_index >= 2 * num_positive_) throw UnknownRoot("root index out of range");
  if (root_index < num_positive_) return num_positive_ - 1 - root_index;
  return root_index + rank_;
}

std::size_t ModelBasis::of_u(std::size_t i) const {
  if (i >= rank_) throw UsageError("simple index out of range");
  return num_positive_ + i;
}

BasisIndex ModelBasis::at(std::size_t position) const {
  if (position >= dimension()) throw UsageError("basis position out of range");
  if (position < num_positive_) return {BasisIndex::Kind::V, num_positive_ - 1 - position};
  if (position < num_positive_ + rank_) return {BasisIndex::Kind::U, position - num_positive_};
  return {BasisIndex::Kind::V, position - rank_};
}

std::vector<std::string> ModelBasis::legend(const RootSystem& rs) const {
  std::vector<std::string> out;
  out.reserve(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) {
    BasisIndex b = at(k);
    if (b.kind == BasisIndex::Kind::U) {
      out.push_back("u:" + std::to_string(b.index + 1));
    } else {
      out.push_back("v:" + rs.root(b.index).to_string());
    }
  }
  return out;
}

namespace {

void require_simple(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw UsageError("simple index " + std::to_string(i) + " out of range");
}

// Shared body of e_i (sign = +1) and f_i (sign = -1).
IntMatrix build_raising(const RootSystem& rs, std::size_t i, int sign) {
  require_simple(rs, i);
  const ModelBasis basis(rs);
  const std::size_t n = basis.dimension();
  const Root ai = sign * rs.simple_root(i);
  const std::size_t target_simple = basis.of_root(rs.index_of(ai));
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    // |(alpha_i, alpha_j^vee)| = |a_ji|
    m(target_simple, basis.of_u(j)) = std::abs(rs.cartan()(j, i));
  }
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const Root& alpha = rs.root(r);
    const Root shifted = alpha + ai;
    if (auto t = rs.find(shifted)) {
      int coeff = sign > 0 ? rs.m_minus_simple(i, alpha) : rs.m_plus_simple(i, alpha);
      m(basis.of_root(*t), basis.of_root(r)) = coeff;
    } else if (alpha == -ai) {
      m(basis.of_u(i), basis.of_root(r)) = 1;
    }
  }
  return m;
}

}  // namespace

IntMatrix build_e(const RootSystem& rs, std::size_t i) { return build_raising(rs, i, +1); }

IntMatrix build_f(const RootSystem& rs, std::size_t i) { return build_raising(rs, i, -1); }

IntMatrix build_h(const RootSystem& rs, std::size_t i) {
  require_simple(rs, i);
  return build_h_alpha(rs, rs.simple_root(i));
}

IntMatrix build_h_alpha(const RootSystem& rs, const Root& alpha) {
  rs.index_of(alpha);
  const ModelBasis basis(rs);
  IntMatrix m(basis.dimension(), basis.dimension());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::size_t k = basis.of_root(r);
    m(k, k) = rs.pairing(rs.root(r), alpha);
  }
  return m;
}

std::vector<Rational> coroot_coefficients(const RootSystem& rs, const Root& alpha) {
  rs.index_of(alpha);
  const int len = rs.form(alpha, alpha);
  std::vector<Rational> x(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    x[i] = Rational(2 * alpha.coords[i] * rs.cartan().symmetrizer()[i], len);
    x[i].canonicalize();
  }
  return x;
}

IntMatrix build_omega(const RootSystem& rs) {
  const ModelBasis basis(rs);
  const std::size_t n = basis.dimension();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < rs.rank(); ++j) m(basis.of_u(j), basis.of_u(j)) = 1;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    m(basis.of_root(rs.negative_index(r)), basis.of_root(r)) = 1;
  }
  return m;
}

IntMatrix conjugate_by_omega(const RootSystem& rs, const IntMatrix& x) {
  const ModelBasis basis(rs);
  const std::size_t n = basis.dimension();
  if (x.rows() != n || x.cols() != n) throw UsageError("matrix does not act on M");
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    BasisIndex b = basis.at(k);
    perm[k] = b.kind == BasisIndex::Kind::U ? k : basis.of_root(rs.negative_index(b.index));
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = x(perm[r], perm[c]);
  }
  return out;
}

std::vector<std::vector<int>> basis_weights(const RootSystem& rs) {
  const ModelBasis basis(rs);
  std::vector<std::vector<int>> w(basis.dimension(), std::vector<int>(rs.rank(), 0));
  for (std::size_t r = 0; r < rs.size(); ++r) {
    auto& wt = w[basis.of_root(r)];
    for (std::size_t i = 0; i < rs.rank(); ++i) wt[i] = rs.simple_pairing(rs.root(r), i);
  }
  return w;
}

}  // namespace chevalley
