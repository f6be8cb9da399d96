#include "chevalley/chevalley_basis.hpp"

#include <cstdlib>
#include <deque>
#include <optional>
#include <sstream>
#include <type_traits>

namespace chevalley {

SignFunction SignFunction::negated() const {
  SignFunction out = *this;
  for (int& v : out.values) v = -v;
  return out;
}

std::string SignFunction::to_string() const {
  std::string s;
  for (int v : values) s += v > 0 ? '+' : '-';
  return s;
}

namespace {

void require_alternating(const CartanMatrix& cartan, const SignFunction& eps) {
  if (eps.values.size() != cartan.rank()) {
    throw UsageError("sign function has " + std::to_string(eps.values.size()) + " entries, rank is " +
                     std::to_string(cartan.rank()));
  }
  for (std::size_t i = 0; i < cartan.rank(); ++i) {
    if (eps.values[i] != 1 && eps.values[i] != -1) throw UsageError("sign values must be +1 or -1");
    for (std::size_t j = 0; j < cartan.rank(); ++j) {
      if (i != j && cartan(i, j) != 0 && eps.values[i] == eps.values[j]) {
        throw UsageError("sign function does not alternate across the edge " + std::to_string(i + 1) + "-" +
                         std::to_string(j + 1));
      }
    }
  }
}

}  // namespace

SignFunction SignFunction::parse(const CartanMatrix& cartan, const std::string& text) {
  SignFunction eps;
  for (char c : text) {
    if (c == '+') {
      eps.values.push_back(1);
    } else if (c == '-') {
      eps.values.push_back(-1);
    } else {
      throw UsageError("bad sign string '" + text + "', expected characters + and -");
    }
  }
  require_alternating(cartan, eps);
  return eps;
}

std::pair<SignFunction, SignFunction> two_colorings(const CartanMatrix& cartan) {
  const std::size_t l = cartan.rank();
  std::vector<int> color(l, 0);
  color[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j || cartan(i, j) == 0) continue;
      if (color[j] == 0) {
        color[j] = -color[i];
        queue.push_back(j);
      } else if (color[j] == color[i]) {
        throw ImpossibleColoring("Dynkin diagram has an odd cycle");
      }
    }
  }
  for (int c : color) {
    if (c == 0) throw ImpossibleColoring("Dynkin diagram is not connected");
  }
  SignFunction first{color};
  return {first, first.negated()};
}

IntMatrix ChevalleyBasis::phi_basis(std::size_t position) const {
  const BasisIndex b = model_.at(position);
  if (b.kind == BasisIndex::Kind::V) return e_.at(b.index);
  return Integer(-epsilon_[b.index]) * h_.at(b.index);
}

RatMatrix ChevalleyBasis::phi(const std::vector<Rational>& coefficients) const {
  const std::size_t n = model_.dimension();
  if (coefficients.size() != n) throw UsageError("vector length does not match the model dimension");
  RatMatrix out(n, n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(coefficients[k])) continue;
    out += coefficients[k] * to_rational(phi_basis(k));
  }
  return out;
}

namespace {

void certify(const IntMatrix& m, const std::string& label) {
  if (content(m) != 1) throw ConstructionBroken(label + " is not primitive");
  if (nilpotency_index(m) == 0) throw ConstructionBroken(label + " is not nilpotent");
}

/// Smallest i with alpha - alpha_i a positive root.
std::size_t recursion_pivot(const RootSystem& rs, const Root& alpha) {
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const Root beta = alpha - rs.simple_root(i);
    if (beta.is_positive() && rs.contains(beta)) return i;
  }
  throw ConstructionBroken("no recursion pivot for " + alpha.symbol());
}

}  // namespace

ChevalleyBasis build_chevalley_basis(const RootSystem& rs, const SignFunction& epsilon, NegativeRootRule rule) {
  require_alternating(rs.cartan(), epsilon);
  const std::size_t l = rs.rank();
  const std::size_t n_pos = rs.num_positive();
  std::vector<IntMatrix> e(rs.size());
  std::vector<IntMatrix> h;
  std::vector<IntMatrix> f_simple;
  for (std::size_t i = 0; i < l; ++i) h.push_back(build_h(rs, i));
  for (std::size_t i = 0; i < l; ++i) {
    const Integer s(epsilon[i]);
    e[i] = s * build_e(rs, i);
    f_simple.push_back(build_f(rs, i));
    e[rs.negative_index(i)] = Integer(-epsilon[i]) * f_simple.back();
  }
  for (std::size_t k = l; k < n_pos; ++k) {
    const Root& alpha = rs.root(k);
    const std::size_t i = recursion_pivot(rs, alpha);
    const Root beta = alpha - rs.simple_root(i);
    const std::size_t b = rs.index_of(beta);
    const Integer m(rs.m_minus_simple(i, beta));
    e[k] = divide_exact(bracket(Integer(epsilon[i]) * e[i], e[b]), m, "e_" + alpha.symbol());
    if (rule == NegativeRootRule::Recursion) {
      const Integer mp(rs.m_plus_simple(i, -beta));
      e[rs.negative_index(k)] =
          divide_exact(bracket(f_simple[i], e[rs.negative_index(b)]), mp, "e_" + (-alpha).symbol());
    }
  }
  if (rule == NegativeRootRule::Involution) {
    for (std::size_t k = l; k < n_pos; ++k) e[rs.negative_index(k)] = -conjugate_by_omega(rs, e[k]);
  }
  for (std::size_t k = 0; k < rs.size(); ++k) certify(e[k], "e_" + rs.root(k).symbol());
  return ChevalleyBasis(epsilon, std::move(e), std::move(h), ModelBasis(rs));
}

const Integer& StructureConstantTable::at(std::size_t alpha, std::size_t beta) const {
  auto it = entries.find({alpha, beta});
  if (it == entries.end()) throw UnknownRoot("no structure constant for this pair");
  return it->second;
}

namespace {

/// c with x = c * y, or nullopt.
template <class T>
std::optional<T> proportionality(const Matrix<T>& x, const Matrix<T>& y) {
  const auto& xd = x.data();
  const auto& yd = y.data();
  std::size_t pivot = yd.size();
  for (std::size_t k = 0; k < yd.size(); ++k) {
    if (!is_zero(yd[k])) {
      pivot = k;
      break;
    }
  }
  if (pivot == yd.size()) return std::nullopt;
  if constexpr (std::is_same_v<T, Integer>) {
    if (!mpz_divisible_p(xd[pivot].get_mpz_t(), yd[pivot].get_mpz_t())) return std::nullopt;
    const Integer c = xd[pivot] / yd[pivot];
    if (!(c * y == x)) return std::nullopt;
    return c;
  } else {
    return std::nullopt;
  }
}

}  // namespace

StructureConstantTable structure_constants(const RootSystem& rs, const ChevalleyBasis& basis) {
  StructureConstantTable table;
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const auto sum = rs.find(rs.root(a) + rs.root(b));
      if (!sum) continue;
      const IntMatrix br = bracket(basis.e(a), basis.e(b));
      const auto c = proportionality(br, basis.e(*sum));
      if (!c) {
        throw ConstructionBroken("[e_" + rs.root(a).symbol() + ", e_" + rs.root(b).symbol() +
                                 "] is not a multiple of e_" + rs.root(*sum).symbol());
      }
      table.entries[{a, b}] = *c;
    }
  }
  return table;
}

RingMatrix build_n_i(const RootSystem& rs, std::size_t i, const RingElem& t) {
  const RingElem t_inv = t.inverse();
  const IntMatrix e = build_e(rs, i);
  const IntMatrix f = build_f(rs, i);
  const DividedPowerFamily de = divided_powers(e);
  const GroupElem x = exp_nilpotent(de, t);
  const GroupElem y = exp_nilpotent(divided_powers(f), -t_inv);
  return (x * y * x).matrix;
}

RingMatrix n_i_closed_form(const RootSystem& rs, std::size_t i, const RingElem& t) {
  if (i >= rs.rank()) throw UsageError("simple index out of range");
  const RingSpec& ring = t.spec();
  const RingElem t_inv = t.inverse();
  const ModelBasis model(rs);
  const std::size_t n = model.dimension();
  RingMatrix out(n, n, RingElem::zero(ring));
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    const std::size_t col = model.of_u(j);
    out(col, col) += RingElem::one(ring);
    out(model.of_u(i), col) -= RingElem::from_integer(ring, Integer(std::abs(rs.cartan()(j, i))));
  }
  const std::size_t pos_i = model.of_root(i);
  const std::size_t neg_i = model.of_root(rs.negative_index(i));
  out(neg_i, pos_i) = t_inv * t_inv;
  out(pos_i, neg_i) = t * t;
  const Root ai = rs.simple_root(i);
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const Root& alpha = rs.root(k);
    if (alpha == ai || alpha == -ai) continue;
    const int m = rs.m_minus_simple(i, alpha);
    const int p = rs.pairing(alpha, ai);
    RingElem c = t.pow(-p);
    if (m % 2 == 0) c = -c;
    out(model.of_root(rs.index_of(rs.reflect(i, alpha))), model.of_root(k)) = c;
  }
  return out;
}

namespace {

IntMatrix integral_view(const RingMatrix& m) { return require_integral(to_rational(m), "n_i(1)"); }

}  // namespace

int eta_conjugate_sign(const RootSystem& rs, const ChevalleyBasis& basis, std::size_t root_index) {
  const Root& alpha = rs.root(root_index);
  const WeylWord w = rs.weyl_word(alpha);
  const RingSpec zz = RingSpec::integers();
  const std::size_t n = ModelBasis(rs).dimension();
  IntMatrix eta = IntMatrix::identity(n, Integer(0), Integer(1));
  IntMatrix eta_inv = eta;
  for (std::size_t i : w.word) {
    eta = eta * integral_view(build_n_i(rs, i, RingElem::one(zz)));
    eta_inv = integral_view(build_n_i(rs, i, -RingElem::one(zz))) * eta_inv;
  }
  const IntMatrix conj = eta * build_e(rs, w.base) * eta_inv;
  const IntMatrix& target = basis.e(root_index);
  if (conj == target) return 1;
  if (-conj == target) return -1;
  throw ConstructionBroken("eta-conjugate of e_" + std::to_string(w.base + 1) + " is not +-e_" + alpha.symbol());
}

std::vector<GaussMatrix> hat_basis(const RootSystem& rs, const ChevalleyBasis& basis) {
  std::vector<GaussMatrix> out;
  out.reserve(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    GaussMatrix m = to_gaussian(basis.e(k));
    if (std::abs(rs.root(k).height()) % 2 == 1) m *= Gaussian::unit_i();
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t verify_hat_basis(const RootSystem& rs, const ChevalleyBasis& basis) {
  const std::vector<GaussMatrix> hat = hat_basis(rs, basis);
  std::size_t checked = 0;
  for (std::size_t a = 0; a < rs.size(); ++a) {
    const Root& alpha = rs.root(a);
    const GaussMatrix h = to_gaussian(build_h_alpha(rs, alpha));
    if (!(bracket(hat[a], hat[rs.negative_index(a)]) == h)) {
      throw ConstructionBroken("[e^_a, e^_-a] != h_a for a = " + alpha.symbol());
    }
    ++checked;
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const auto sum = rs.find(alpha + rs.root(b));
      if (!sum) continue;
      const GaussMatrix br = bracket(hat[a], hat[b]);
      const Gaussian m(rs.m_minus(alpha, rs.root(b)));
      const GaussMatrix target = m * hat[*sum];
      if (!(br == target) && !(br == -target)) {
        throw ConstructionBroken("[e^_a, e^_b] != +-m e^_(a+b) for a = " + alpha.symbol() +
                                 ", b = " + rs.root(b).symbol());
      }
      ++checked;
    }
  }
  return checked;
}

const std::vector<TableEntry>& g2_reference_table() {
  static const std::vector<TableEntry> table = {
      {Root{{1, 0}}, Root{{0, 1}}, 1},     {Root{{1, 0}}, Root{{1, 3}}, 1},
      {Root{{0, 1}}, Root{{1, 1}}, -2},    {Root{{0, 1}}, Root{{1, 2}}, -3},
      {Root{{1, 1}}, Root{{1, 2}}, -3},    {Root{{1, 1}}, Root{{-1, 0}}, 1},
      {Root{{1, 1}}, Root{{0, -1}}, -3},   {Root{{1, 2}}, Root{{0, -1}}, -2},
      {Root{{1, 2}}, Root{{-1, -1}}, -2},  {Root{{1, 3}}, Root{{0, -1}}, -1},
      {Root{{1, 3}}, Root{{-1, -2}}, 1},   {Root{{2, 3}}, Root{{-1, 0}}, 1},
      {Root{{2, 3}}, Root{{-1, -1}}, 1},   {Root{{2, 3}}, Root{{-1, -2}}, 1},
      {Root{{2, 3}}, Root{{-1, -3}}, 1},
  };
  return table;
}

std::string g2_table(const RootSystem& rs, const ChevalleyBasis& basis) {
  if (!(rs.cartan() == CartanMatrix::from_type("G2"))) {
    throw UsageError("the bracket table is only defined for the standard G2 Cartan matrix");
  }
  std::ostringstream out;
  out << "epsilon = " << basis.epsilon().to_string() << "\n";
  for (const TableEntry& row : g2_reference_table()) {
    const std::size_t a = rs.index_of(row.alpha);
    const std::size_t b = rs.index_of(row.beta);
    const std::size_t s = rs.index_of(row.alpha + row.beta);
    const auto c = proportionality(bracket(basis.e(a), basis.e(b)), basis.e(s));
    if (!c) throw ConstructionBroken("bracket not proportional in the G2 table");
    out << "[e(" << row.alpha.symbol() << "), e(" << row.beta.symbol() << ")] = ";
    if (*c == -1) {
      out << "-";
    } else if (*c != 1) {
      out << c->get_str() << " ";
    }
    out << "e(" << rs.root(s).symbol() << ")\n";
  }
  return out.str();
}

}  // namespace chevalley
