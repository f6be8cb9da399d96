#include "chevalley/exponential.hpp"

#include <cstdlib>

#include "chevalley/adjoint.hpp"

namespace chevalley {

DividedPowerFamily divided_powers(const IntMatrix& x) {
  if (x.rows() != x.cols()) throw UsageError("divided powers need a square matrix");
  const std::size_t n = x.rows();
  if (nilpotency_index(x) == 0) throw NotNilpotent("matrix is not nilpotent");
  DividedPowerFamily dp;
  dp.terms.push_back(IntMatrix::identity(n, Integer(0), Integer(1)));
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = dp.terms.back() * x;
    if (next.is_zero()) break;
    dp.terms.push_back(divide_exact(next, Integer(static_cast<unsigned long>(k)), "divided power"));
  }
  return dp;
}

GroupElem GroupElem::identity(std::size_t n, const RingSpec& ring) {
  return GroupElem{ring, RingMatrix::identity(n, RingElem::zero(ring), RingElem::one(ring))};
}

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (!(a.ring == b.ring)) throw UsageError("group elements over different rings");
  return GroupElem{a.ring, a.matrix * b.matrix};
}

GroupElem exp_nilpotent(const DividedPowerFamily& powers, const RingElem& t) {
  if (powers.terms.empty()) throw UsageError("empty divided power family");
  const RingSpec& ring = t.spec();
  const std::size_t n = powers.terms.front().rows();
  GroupElem out{ring, RingMatrix(n, n, RingElem::zero(ring))};
  RingElem tk = RingElem::one(ring);
  for (const IntMatrix& term : powers.terms) {
    if (tk.is_zero()) break;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_zero(term(r, c))) out.matrix(r, c) += tk * RingElem::from_integer(ring, term(r, c));
      }
    }
    tk *= t;
  }
  return out;
}

GroupElem exp_nilpotent(const IntMatrix& x, const RingElem& t) { return exp_nilpotent(divided_powers(x), t); }

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

GroupElem root_exponential(const RootSystem& rs, std::size_t i, const RingElem& t, int sign) {
  if (i >= rs.rank()) throw UsageError("simple index out of range");
  const RingSpec& ring = t.spec();
  const ModelBasis basis(rs);
  GroupElem g = GroupElem::identity(basis.dimension(), ring);
  RingMatrix& m = g.matrix;
  const Root ai = sign * rs.simple_root(i);
  const std::size_t pos_ai = basis.of_root(rs.index_of(ai));
  const std::size_t neg_ai = basis.of_root(rs.index_of(-ai));
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    int coeff = std::abs(rs.cartan()(j, i));
    m(pos_ai, basis.of_u(j)) += RingElem::from_integer(ring, coeff) * t;
  }
  m(basis.of_u(i), neg_ai) = t;
  m(pos_ai, neg_ai) = t * t;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const Root& alpha = rs.root(r);
    if (alpha == ai || alpha == -ai) continue;
    const int mult = sign > 0 ? rs.m_minus_simple(i, alpha) : rs.m_plus_simple(i, alpha);
    RingElem tk = t;
    for (unsigned long k = 1;; ++k) {
      auto target = rs.find(alpha + static_cast<int>(k) * ai);
      if (!target) break;
      Integer c = binomial(k + static_cast<unsigned long>(mult) - 1, k);
      m(basis.of_root(*target), basis.of_root(r)) = RingElem::from_integer(ring, c) * tk;
      tk *= t;
    }
  }
  return g;
}

}  // namespace

GroupElem x_gen(const RootSystem& rs, std::size_t i, const RingElem& t) { return root_exponential(rs, i, t, +1); }

GroupElem y_gen(const RootSystem& rs, std::size_t i, const RingElem& t) { return root_exponential(rs, i, t, -1); }

}  // namespace chevalley
