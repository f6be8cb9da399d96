#pragma once

#include <cstddef>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

/// [X^0, X^1/1!, ..., X^(k-1)/(k-1)!] for nilpotent X with X^k = 0, every
/// term checked integral.
struct DividedPowerFamily {
  std::vector<IntMatrix> terms;

  std::size_t nilpotency_index() const { return terms.size(); }
};

/// NotNilpotent if X^n != 0; ConstructionBroken if some X^k/k! is not integral.
DividedPowerFamily divided_powers(const IntMatrix& x);

/// Invertible matrix over a ring acting on the free module with the basis of M.
struct GroupElem {
  RingSpec ring;
  RingMatrix matrix;

  static GroupElem identity(std::size_t n, const RingSpec& ring);
  std::size_t dimension() const { return matrix.rows(); }

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.ring == b.ring && a.matrix == b.matrix;
  }
};

/// sum_k t^k X^k/k!, the divided powers specialized into the ring of t.
GroupElem exp_nilpotent(const IntMatrix& x, const RingElem& t);
GroupElem exp_nilpotent(const DividedPowerFamily& powers, const RingElem& t);

/// exp(t e_i) and exp(t f_i) written down directly from the action on the
/// basis of M (binomial coefficients along alpha_i-strings).
GroupElem x_gen(const RootSystem& rs, std::size_t i, const RingElem& t);
GroupElem y_gen(const RootSystem& rs, std::size_t i, const RingElem& t);

}  // namespace chevalley
