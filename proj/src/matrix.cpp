#include "chevalley/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace chevalley {

IntMatrix require_integral(const RatMatrix& m, const std::string& what) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.get_den() != 1) {
        throw ConstructionBroken(what + ": non-integral entry " + x.get_str());
      }
      out(r, c) = x.get_num();
    }
  }
  return out;
}

RingMatrix specialize(const IntMatrix& m, const RingSpec& ring) {
  RingMatrix out(m.rows(), m.cols(), RingElem::zero(ring));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_zero(m(r, c))) out(r, c) = RingElem::from_integer(ring, m(r, c));
    }
  }
  return out;
}

RatMatrix to_rational(const RingMatrix& m) {
  return map_entries<Rational>(m, [](const RingElem& x) { return x.to_rational(); });
}

IntMatrix divide_exact(const IntMatrix& m, const Integer& d, const std::string& what) {
  if (is_zero(d)) throw UsageError("division by zero");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) {
    const Integer& x = m.data()[k];
    if (is_zero(x)) continue;
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
      throw ConstructionBroken(what + ": entry " + x.get_str() + " not divisible by " + d.get_str());
    }
    mpz_divexact(out.data()[k].get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

Integer content(const IntMatrix& m) {
  Integer g = 0;
  for (const Integer& x : m.data()) {
    if (!is_zero(x)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(a(swap, k))) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t nilpotency_index(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("nilpotency of a non-square matrix");
  if (m.is_zero()) return 1;
  IntMatrix power = m;
  for (std::size_t k = 2; k <= m.rows(); ++k) {
    power = power * m;
    if (power.is_zero()) return k;
  }
  return 0;
}

std::string to_string(const IntMatrix& m) {
  std::size_t width = 1;
  for (const Integer& x : m.data()) width = std::max(width, x.get_str().size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = m(r, c).get_str();
      if (c > 0) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace chevalley
