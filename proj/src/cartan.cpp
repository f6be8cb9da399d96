#include "chevalley/cartan.hpp"

#include <cctype>
#include <numeric>
#include <queue>

namespace chevalley {

namespace {

std::vector<std::vector<long>> identity_twos(int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

void link(std::vector<std::vector<long>>& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

std::vector<std::vector<long>> standard_rows(char type, int n) {
  auto a = identity_twos(n);
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      break;
  }
  return a;
}

}  // namespace

std::pair<char, int> parse_designation(std::string_view designation) {
  std::string s(designation);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    throw UsageError("bad type designation '" + s + "'");
  }
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw UsageError("bad type designation '" + s + "'");
  }
  if (s.size() > 4) throw UsageError("rank too large in '" + s + "'");
  int rank = std::stoi(s.substr(1));
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw UsageError("unknown type designation '" + s + "'");
  return {type, rank};
}

CartanMatrix CartanMatrix::from_type(std::string_view designation) {
  auto [type, rank] = parse_designation(designation);
  CartanMatrix c = from_entries(standard_rows(type, rank));
  c.designation_ = std::string(1, type) + std::to_string(rank);
  return c;
}

CartanMatrix CartanMatrix::from_entries(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) throw InvalidCartan("empty matrix");
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw InvalidCartan("matrix is not square");
  }
  CartanMatrix c;
  c.rank_ = n;
  c.entries_.reserve(n * n);
  for (const auto& r : rows) {
    for (long x : r) {
      if (x < -64 || x > 64) throw InvalidCartan("entry out of range");
      c.entries_.push_back(static_cast<int>(x));
    }
  }
  c.validate();
  return c;
}

void CartanMatrix::validate() {
  const std::size_t n = rank_;
  const auto& a = *this;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw InvalidCartan("diagonal entry a_ii != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw InvalidCartan("positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw InvalidCartan("a_ij = 0 but a_ji != 0");
    }
  }

  // Connectivity and symmetrizer together: propagate d along edges.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0) continue;
      Rational dj = d[i] * a(i, j) / a(j, i);
      if (is_zero(d[j])) {
        d[j] = dj;
        todo.push(j);
      } else if (d[j] != dj) {
        throw InvalidCartan("matrix is not symmetrizable");
      }
    }
  }
  for (const Rational& x : d) {
    if (is_zero(x)) throw InvalidCartan("Dynkin diagram is not connected");
  }
  Integer den_lcm = 1;
  for (const Rational& x : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const Rational& x : d) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  symmetrizer_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer scaled = d[i].get_num() * (den_lcm / d[i].get_den()) / num_gcd;
    symmetrizer_[i] = static_cast<int>(scaled.get_si());
  }

  // Finite type: leading principal minors of (d_i a_ij) positive.
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = form(i, j);
    }
    if (sgn(determinant(minor)) <= 0) {
      throw InvalidCartan("not of finite type: symmetrized matrix is not positive definite");
    }
  }

  IntMatrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? 4 : 0) - a(i, j);
  }
  if (is_zero(determinant(shifted))) throw InvalidCartan("det(4I - A) = 0");
}

std::vector<std::vector<long>> CartanMatrix::rows() const {
  std::vector<std::vector<long>> out(rank_, std::vector<long>(rank_));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

IntMatrix CartanMatrix::as_matrix() const {
  IntMatrix m(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

}  // namespace chevalley
