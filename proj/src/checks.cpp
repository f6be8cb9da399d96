#include "chevalley/checks.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "chevalley/adjoint.hpp"
#include "chevalley/chevalley_group.hpp"
#include "chevalley/lie_closure.hpp"

namespace chevalley {

namespace {

/// Counts verified instances and keeps the first failure.
class Tally {
 public:
  void require(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  void credit(std::size_t k) { count_ += k; }
  bool ok() const { return failure_.empty(); }
  CheckResult result(const std::string& name) const {
    if (ok()) return {name, true, std::to_string(count_) + " instances"};
    return {name, false, failure_};
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

CheckResult run_check(const std::string& name, const std::function<void(Tally&)>& body) {
  Tally tally;
  try {
    body(tally);
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
  return tally.result(name);
}

std::string sym(const Root& r) { return r.symbol(); }

bool is_strictly_upper(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (!is_zero(m(r, c))) return false;
    }
  }
  return true;
}

bool is_strictly_lower(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      if (!is_zero(m(r, c))) return false;
    }
  }
  return true;
}

bool is_nonnegative(const IntMatrix& m) {
  for (const Integer& x : m.data()) {
    if (sgn(x) < 0) return false;
  }
  return true;
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> t = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return t;
}

}  // namespace

std::vector<CheckResult> check_root_strings(const RootSystem& rs) {
  std::vector<CheckResult> out;
  const auto& roots = rs.roots();
  const std::size_t l = rs.rank();

  out.push_back(run_check("roots: (a,b) > 0 implies b - a is a root or b = a", [&](Tally& t) {
    for (const Root& a : roots) {
      for (const Root& b : roots) {
        if (rs.form(a, b) <= 0) continue;
        t.require(a == b || rs.contains(b - a), [&] { return "a = " + sym(a) + ", b = " + sym(b); });
      }
    }
  }));

  out.push_back(run_check("roots: a + a_i - a_j in Phi forces a - a_j (resp. a + a_i) in Phi", [&](Tally& t) {
    for (const Root& a : roots) {
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          if (i == j) continue;
          const Root ai = rs.simple_root(i);
          const Root aj = rs.simple_root(j);
          if (!rs.contains(a + ai - aj)) continue;
          if (rs.contains(a + ai) && !(a == aj)) {
            t.require(rs.contains(a - aj), [&] { return "(a) fails at a = " + sym(a); });
          }
          if (rs.contains(a - aj) && !(a == -ai)) {
            t.require(rs.contains(a + ai), [&] { return "(b) fails at a = " + sym(a); });
          }
        }
      }
    }
  }));

  out.push_back(run_check("roots: m_i^-(a - a_j) m_j^+(a) = m_j^+(a + a_i) m_i^-(a)", [&](Tally& t) {
    for (const Root& a : roots) {
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          if (i == j) continue;
          const Root ai = rs.simple_root(i);
          const Root aj = rs.simple_root(j);
          if (!rs.contains(a + ai) || !rs.contains(a - aj) || !rs.contains(a + ai - aj)) continue;
          const int lhs = rs.m_minus_simple(i, a - aj) * rs.m_plus_simple(j, a);
          const int rhs = rs.m_plus_simple(j, a + ai) * rs.m_minus_simple(i, a);
          t.require(lhs == rhs, [&] { return "a = " + sym(a) + ", i = " + std::to_string(i + 1) +
                                             ", j = " + std::to_string(j + 1); });
        }
      }
    }
  }));

  out.push_back(run_check("roots: (b,a^v)(a,b^v) in {0,1,2,3}, 3 only in rank 2", [&](Tally& t) {
    for (const Root& a : roots) {
      for (const Root& b : roots) {
        if (a == b || a == -b) continue;
        const int prod = rs.pairing(b, a) * rs.pairing(a, b);
        t.require(prod >= 0 && prod <= 3 && (prod != 3 || l == 2),
                  [&] { return "a = " + sym(a) + ", b = " + sym(b) + ", product " + std::to_string(prod); });
      }
    }
  }));

  out.push_back(run_check("roots: at most two root lengths", [&](Tally& t) {
    std::set<int> lengths;
    for (const Root& a : roots) lengths.insert(rs.form(a, a));
    t.require(lengths.size() <= 2, [&] { return std::to_string(lengths.size()) + " distinct lengths"; });
  }));

  out.push_back(run_check("roots: q - p = (b,a^v), p + q <= 3, m_a^-(b) = m_a^+(-b)", [&](Tally& t) {
    for (const Root& a : roots) {
      for (const Root& b : roots) {
        if (a == b || a == -b) continue;
        const RootString s = rs.root_string(a, b);
        t.require(s.q - s.p == rs.pairing(b, a) && s.p + s.q <= 3 && (s.p + s.q < 3 || l == 2) &&
                      rs.m_minus(a, b) == rs.m_plus(a, -b),
                  [&] { return "a = " + sym(a) + ", b = " + sym(b); });
      }
    }
  }));

  out.push_back(run_check("roots: closed under simple reflections, Phi = Phi+ u -Phi+", [&](Tally& t) {
    for (const Root& a : roots) {
      t.require(a.is_positive() != a.is_negative() && rs.contains(-a), [&] { return sym(a); });
      for (std::size_t i = 0; i < l; ++i) {
        t.require(rs.contains(rs.reflect(i, a)) && rs.reflect(i, rs.reflect(i, a)) == a,
                  [&] { return "s_" + std::to_string(i + 1) + "(" + sym(a) + ")"; });
      }
    }
  }));

  out.push_back(run_check("roots: Weyl words reproduce every root", [&](Tally& t) {
    for (const Root& a : roots) {
      const WeylWord w = rs.weyl_word(a);
      Root r = rs.simple_root(w.base);
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = rs.reflect(*it, r);
      t.require(r == a, [&] { return sym(a); });
    }
  }));
  return out;
}

std::vector<CheckResult> check_adjoint_relations(const RootSystem& rs) {
  std::vector<CheckResult> out;
  const std::size_t l = rs.rank();
  std::vector<IntMatrix> e, f, h;
  for (std::size_t i = 0; i < l; ++i) {
    e.push_back(build_e(rs, i));
    f.push_back(build_f(rs, i));
    h.push_back(build_h(rs, i));
  }
  const IntMatrix omega = build_omega(rs);
  const std::size_t n = ModelBasis(rs).dimension();
  const IntMatrix id = IntMatrix::identity(n, Integer(0), Integer(1));
  const auto idx = [](std::size_t i) { return std::to_string(i + 1); };

  out.push_back(run_check("adjoint: e_i, f_i non-negative and strictly upper / lower triangular", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      t.require(is_nonnegative(e[i]) && is_strictly_upper(e[i]), [&] { return "e_" + idx(i); });
      t.require(is_nonnegative(f[i]) && is_strictly_lower(f[i]), [&] { return "f_" + idx(i); });
    }
  }));

  out.push_back(run_check("adjoint: e_i, f_i, h_i nonzero, h_i commute and are independent", [&](Tally& t) {
    MatrixSpan hs(n, n);
    for (std::size_t i = 0; i < l; ++i) {
      t.require(!e[i].is_zero() && !f[i].is_zero() && !h[i].is_zero(), [&] { return "index " + idx(i); });
      hs.insert(h[i]);
      for (std::size_t j = 0; j < l; ++j) {
        t.require(bracket(h[i], h[j]).is_zero(), [&] { return "[h_" + idx(i) + ", h_" + idx(j) + "]"; });
      }
    }
    t.require(hs.dimension() == l, [&] { return "h_i span has dimension " + std::to_string(hs.dimension()); });
  }));

  out.push_back(run_check("adjoint: omega^2 = id, omega e_i = f_i omega, omega h_i = -h_i omega", [&](Tally& t) {
    t.require(omega * omega == id, [] { return std::string("omega^2"); });
    for (std::size_t i = 0; i < l; ++i) {
      t.require(omega * e[i] == f[i] * omega, [&] { return "omega e_" + idx(i); });
      t.require(omega * h[i] == -(h[i] * omega), [&] { return "omega h_" + idx(i); });
    }
  }));

  out.push_back(run_check("adjoint: [h_j, e_i] = a_ji e_i and [h_j, f_i] = -a_ji f_i", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        const Integer a(rs.cartan()(j, i));
        t.require(bracket(h[j], e[i]) == a * e[i], [&] { return "[h_" + idx(j) + ", e_" + idx(i) + "]"; });
        t.require(bracket(h[j], f[i]) == Integer(-a) * f[i], [&] { return "[h_" + idx(j) + ", f_" + idx(i) + "]"; });
      }
    }
  }));

  out.push_back(run_check("adjoint: [e_i, f_i] = h_i", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      t.require(bracket(e[i], f[i]) == h[i], [&] { return "i = " + idx(i); });
    }
  }));

  out.push_back(run_check("adjoint: [e_i, f_j] = 0 for i != j", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j) continue;
        t.require(bracket(e[i], f[j]).is_zero(), [&] { return "i = " + idx(i) + ", j = " + idx(j); });
      }
    }
  }));

  out.push_back(run_check("adjoint: h_a = sum x_i h_i, h_a_i = h_i, h_-a = -h_a", [&](Tally& t) {
    for (const Root& a : rs.roots()) {
      const IntMatrix ha = build_h_alpha(rs, a);
      const std::vector<Rational> x = coroot_coefficients(rs, a);
      RatMatrix comb(n, n, Rational(0));
      for (std::size_t i = 0; i < l; ++i) comb += x[i] * to_rational(h[i]);
      t.require(comb == to_rational(ha), [&] { return "h_" + sym(a); });
      t.require(build_h_alpha(rs, -a) == -ha, [&] { return "h_-" + sym(a); });
    }
    for (std::size_t i = 0; i < l; ++i) {
      t.require(build_h_alpha(rs, rs.simple_root(i)) == h[i], [&] { return "h_a" + idx(i); });
    }
  }));
  return out;
}

std::vector<CheckResult> check_closure(const RootSystem& rs) {
  std::vector<CheckResult> out;
  const std::size_t l = rs.rank();
  const std::size_t n = ModelBasis(rs).dimension();
  std::vector<IntMatrix> es, fs, hs;
  for (std::size_t i = 0; i < l; ++i) {
    es.push_back(build_e(rs, i));
    fs.push_back(build_f(rs, i));
    hs.push_back(build_h(rs, i));
  }
  std::optional<LieClosure> g;
  out.push_back(run_check("closure: dim g = |Phi| + rank", [&](Tally& t) {
    std::vector<IntMatrix> gens = es;
    gens.insert(gens.end(), fs.begin(), fs.end());
    g = lie_closure(gens);
    t.require(g->dimension() == rs.size() + l, [&] {
      return "dim g = " + std::to_string(g->dimension()) + ", expected " + std::to_string(rs.size() + l);
    });
  }));
  if (!g) return out;

  std::optional<RootSpaceDecomposition> dec;
  out.push_back(run_check("closure: g_0 = h has dimension rank, root spaces are lines labelled by Phi", [&](Tally& t) {
    dec = root_space_decomposition(g->span, hs);
    const WeightLabel zero(l, 0);
    std::set<std::size_t> seen;
    for (const auto& [w, space] : dec->spaces) {
      if (w == zero) {
        t.require(space.dimension() == l, [&] { return "dim g_0 = " + std::to_string(space.dimension()); });
        for (const IntMatrix& h : hs) t.require(space.contains(h), [] { return std::string("h_i not in g_0"); });
        continue;
      }
      const auto k = root_of_weight(rs, w);
      t.require(k.has_value() && space.dimension() == 1 && seen.insert(*k).second, [&] {
        std::ostringstream s;
        s << "weight (";
        for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
        s << ") has dimension " << space.dimension();
        return s.str();
      });
    }
    t.require(seen.size() == rs.size(), [&] { return std::to_string(seen.size()) + " root spaces found"; });
  }));

  out.push_back(run_check("closure: n+, n- strictly triangular of dimension |Phi+|, g traceless", [&](Tally& t) {
    const LieClosure np = lie_closure(es);
    const LieClosure nm = lie_closure(fs);
    const TriangularReport rep = triangular_report(rs, *g, np, nm);
    for (const IntMatrix& m : g->monomials) t.require(is_zero(trace(m)), [] { return std::string("trace"); });
    t.require(rep.passed(), [&] { return rep.failures.front(); });
  }));

  out.push_back(run_check("module: every basis vector of M generates M", [&](Tally& t) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> v(n, Rational(0));
      v[k] = 1;
      const RationalSpan span = spin_submodule(rs, v);
      t.require(span.dimension() == n, [&] {
        return "basis vector " + ModelBasis(rs).legend(rs)[k] + " spans " + std::to_string(span.dimension());
      });
    }
  }));

  if (dec) {
    out.push_back(run_check("closure: e_alpha spans the alpha root space of g", [&](Tally& t) {
      const ChevalleyBasis basis = build_chevalley_basis(rs, two_colorings(rs.cartan()).first);
      for (std::size_t k = 0; k < rs.size(); ++k) {
        const MatrixSpan& line = dec->at(weight_of_root(rs, rs.root(k)));
        t.require(!basis.e(k).is_zero() && line.contains(basis.e(k)), [&] { return "e_" + sym(rs.root(k)); });
      }
    }));
  }
  return out;
}

std::vector<CheckResult> check_chevalley_basis(const RootSystem& rs, const SignFunction& epsilon) {
  std::vector<CheckResult> out;
  const std::string tag = " [eps " + epsilon.to_string() + "]";
  std::optional<ChevalleyBasis> basis;
  out.push_back(run_check("basis: e_alpha integral, primitive, nilpotent with integral divided powers" + tag,
                          [&](Tally& t) {
                            basis = build_chevalley_basis(rs, epsilon);
                            for (std::size_t k = 0; k < rs.size(); ++k) {
                              const IntMatrix& e = basis->e(k);
                              t.require(content(e) == 1 && nilpotency_index(e) > 0,
                                        [&] { return "e_" + sym(rs.root(k)); });
                              divided_powers(e);
                            }
                          }));
  if (!basis) return out;
  const ChevalleyBasis& b = *basis;
  const std::size_t l = rs.rank();

  out.push_back(run_check("basis: e_a_i = eps(i) e_i, e_-a_i = -eps(i) f_i" + tag, [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      t.require(b.e(i) == Integer(epsilon[i]) * build_e(rs, i), [&] { return "e_a" + std::to_string(i + 1); });
      t.require(b.e(rs.negative_index(i)) == Integer(-epsilon[i]) * build_f(rs, i),
                [&] { return "e_-a" + std::to_string(i + 1); });
    }
  }));

  out.push_back(run_check("basis: every recursion pivot gives the same e_alpha" + tag, [&](Tally& t) {
    for (std::size_t k = l; k < rs.num_positive(); ++k) {
      const Root& a = rs.root(k);
      for (std::size_t i = 0; i < l; ++i) {
        const Root beta = a - rs.simple_root(i);
        if (!beta.is_positive() || !rs.contains(beta)) continue;
        const IntMatrix via = divide_exact(bracket(build_e(rs, i), b.e(rs.index_of(beta))),
                                           Integer(rs.m_minus_simple(i, beta)), "pivot");
        t.require(via == b.e(k), [&] { return "e_" + sym(a) + " via index " + std::to_string(i + 1); });
      }
    }
  }));

  out.push_back(run_check("basis: omega e_alpha omega = -e_-alpha (against the mirrored recursion)" + tag,
                          [&](Tally& t) {
                            const ChevalleyBasis mirrored =
                                build_chevalley_basis(rs, epsilon, NegativeRootRule::Recursion);
                            for (std::size_t k = 0; k < rs.size(); ++k) {
                              t.require(conjugate_by_omega(rs, b.e(k)) == -mirrored.e(rs.negative_index(k)),
                                        [&] { return "alpha = " + sym(rs.root(k)); });
                            }
                          }));

  out.push_back(run_check("basis: [e_alpha, e_-alpha] = (-1)^ht(alpha) h_alpha" + tag, [&](Tally& t) {
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const Root& a = rs.root(k);
      const IntMatrix ha = build_h_alpha(rs, a);
      const IntMatrix expected = (a.height() % 2 == 0) ? ha : -ha;
      t.require(bracket(b.e(k), b.e(rs.negative_index(k))) == expected, [&] { return "alpha = " + sym(a); });
    }
  }));

  std::optional<StructureConstantTable> table;
  out.push_back(run_check("basis: |N_a,b| = m_a^-(b) and N_b,a = -N_a,b" + tag, [&](Tally& t) {
    table = structure_constants(rs, b);
    for (const auto& [key, n] : table->entries) {
      const Root& a = rs.root(key.first);
      const Root& c = rs.root(key.second);
      t.require(abs(n) == rs.m_minus(a, c) && table->at(key.second, key.first) == -n,
                [&] { return "a = " + sym(a) + ", b = " + sym(c) + ", N = " + n.get_str(); });
    }
  }));

  if (table) {
    out.push_back(run_check("basis: N_a_i,b = eps(i) m_i^-(b)" + tag, [&](Tally& t) {
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t k = 0; k < rs.size(); ++k) {
          if (!rs.contains(rs.simple_root(i) + rs.root(k))) continue;
          t.require(table->at(i, k) == epsilon[i] * rs.m_minus_simple(i, rs.root(k)),
                    [&] { return "i = " + std::to_string(i + 1) + ", b = " + sym(rs.root(k)); });
        }
      }
    }));
  }

  out.push_back(run_check("basis: changing eps to -eps negates every e_alpha" + tag, [&](Tally& t) {
    const ChevalleyBasis neg = build_chevalley_basis(rs, epsilon.negated());
    for (std::size_t k = 0; k < rs.size(); ++k) {
      t.require(neg.e(k) == -b.e(k), [&] { return "alpha = " + sym(rs.root(k)); });
    }
  }));

  out.push_back(run_check("basis: eta e_i eta^-1 = +-e_alpha along the Weyl word" + tag, [&](Tally& t) {
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const int s = eta_conjugate_sign(rs, b, k);
      t.require(s == 1 || s == -1, [&] { return "alpha = " + sym(rs.root(k)); });
    }
  }));
  return out;
}

std::vector<CheckResult> check_n_i(const RootSystem& rs, const SignFunction& epsilon) {
  std::vector<CheckResult> out;
  const RingSpec qq = RingSpec::rationals();
  const std::size_t l = rs.rank();
  const std::size_t n = ModelBasis(rs).dimension();
  const ModelBasis model(rs);
  const RatMatrix id = RatMatrix::identity(n, Rational(0), Rational(1));
  const auto label = [](std::size_t i, const Rational& t) {
    return "n_" + std::to_string(i + 1) + "(" + t.get_str() + ")";
  };

  // n_i(t) and n_i(-t) over QQ, indexed [i][sample].
  std::vector<std::vector<RatMatrix>> n_pos(l), n_neg(l);
  out.push_back(run_check("n_i(t): triple product equals the closed form, n_i(t)^-1 = n_i(-t)", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      for (const Rational& s : sample_points()) {
        const RingElem ts = RingElem::from_rational(qq, s);
        const RatMatrix prod = to_rational(build_n_i(rs, i, ts));
        const RatMatrix closed = to_rational(n_i_closed_form(rs, i, ts));
        const RatMatrix inv = to_rational(build_n_i(rs, i, -ts));
        t.require(prod == closed, [&] { return label(i, s); });
        t.require(prod * inv == id, [&] { return label(i, s) + " inverse"; });
        n_pos[i].push_back(prod);
        n_neg[i].push_back(inv);
      }
    }
  }));
  if (n_pos.front().size() != sample_points().size()) return out;

  out.push_back(run_check("n_i(t): n_i(t)^4 = id and n_i(t)^2 v_a = (-1)^(a,a_i^v) v_a", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t s = 0; s < sample_points().size(); ++s) {
        const RatMatrix sq = n_pos[i][s] * n_pos[i][s];
        t.require(sq * sq == id, [&] { return label(i, sample_points()[s]) + "^4"; });
        for (std::size_t k = 0; k < rs.size(); ++k) {
          const std::size_t p = model.of_root(k);
          const int sign = (rs.pairing(rs.root(k), rs.simple_root(i)) % 2 == 0) ? 1 : -1;
          bool ok = true;
          for (std::size_t r = 0; r < n; ++r) ok = ok && sq(r, p) == (r == p ? Rational(sign) : Rational(0));
          t.require(ok, [&] { return label(i, sample_points()[s]) + "^2 on v_" + sym(rs.root(k)); });
        }
      }
    }
  }));

  out.push_back(run_check("n_i(t): n_i(t) h_a n_i(t)^-1 = h_s_i(a)", [&](Tally& t) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t s = 0; s < sample_points().size(); ++s) {
        for (const Root& a : rs.roots()) {
          const RatMatrix lhs = n_pos[i][s] * to_rational(build_h_alpha(rs, a)) * n_neg[i][s];
          t.require(lhs == to_rational(build_h_alpha(rs, rs.reflect(i, a))),
                    [&] { return label(i, sample_points()[s]) + ", a = " + sym(a); });
        }
      }
    }
  }));

  out.push_back(run_check("n_i(t): n_i(t) phi(m) n_i(t)^-1 = phi(n_i(t) m) [eps " + epsilon.to_string() + "]",
                          [&](Tally& t) {
                            const ChevalleyBasis basis = build_chevalley_basis(rs, epsilon);
                            std::vector<RatMatrix> phi;
                            for (std::size_t k = 0; k < n; ++k) phi.push_back(to_rational(basis.phi_basis(k)));
                            for (std::size_t i = 0; i < l; ++i) {
                              for (std::size_t s = 0; s < sample_points().size(); ++s) {
                                const RatMatrix& ni = n_pos[i][s];
                                for (std::size_t k = 0; k < n; ++k) {
                                  RatMatrix rhs(n, n, Rational(0));
                                  for (std::size_t r = 0; r < n; ++r) {
                                    if (!is_zero(ni(r, k))) rhs += ni(r, k) * phi[r];
                                  }
                                  const RatMatrix lhs = ni * phi[k] * n_neg[i][s];
                                  t.require(lhs == rhs, [&] {
                                    return label(i, sample_points()[s]) + " on " + model.legend(rs)[k];
                                  });
                                }
                              }
                            }
                          }));
  return out;
}

std::vector<CheckResult> check_exponentials(const RootSystem& rs) {
  std::vector<CheckResult> out;
  std::vector<std::pair<RingSpec, std::vector<RingElem>>> rings;
  {
    const RingSpec qq = RingSpec::rationals();
    std::vector<RingElem> ts;
    for (const Rational& s : sample_points()) ts.push_back(RingElem::from_rational(qq, s));
    rings.emplace_back(qq, ts);
  }
  for (std::uint64_t p : {2, 3}) {
    const RingSpec fp = RingSpec::prime_field(p);
    std::vector<RingElem> ts;
    for (std::uint64_t a = 0; a < p; ++a) ts.push_back(RingElem::from_integer(fp, Integer(static_cast<unsigned long>(a))));
    rings.emplace_back(fp, ts);
  }
  const std::size_t n = ModelBasis(rs).dimension();
  out.push_back(run_check("exp: closed-form x_i(t), y_i(t) equal the divided-power exponentials", [&](Tally& t) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const DividedPowerFamily de = divided_powers(build_e(rs, i));
      const DividedPowerFamily df = divided_powers(build_f(rs, i));
      for (const auto& [ring, ts] : rings) {
        for (const RingElem& s : ts) {
          const std::string where = "i = " + std::to_string(i + 1) + ", t = " + s.to_string() + " in " + ring.name();
          t.require(x_gen(rs, i, s) == exp_nilpotent(de, s), [&] { return "x: " + where; });
          t.require(y_gen(rs, i, s) == exp_nilpotent(df, s), [&] { return "y: " + where; });
        }
      }
    }
  }));
  out.push_back(run_check("exp: exp(tX) exp(-tX) = id for X = e_i, f_i", [&](Tally& t) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      for (const auto& [ring, ts] : rings) {
        const GroupElem id = GroupElem::identity(n, ring);
        for (const RingElem& s : ts) {
          t.require(x_gen(rs, i, s) * x_gen(rs, i, -s) == id && y_gen(rs, i, s) * y_gen(rs, i, -s) == id,
                    [&] { return "i = " + std::to_string(i + 1) + ", t = " + s.to_string() + " in " + ring.name(); });
        }
      }
    }
  }));
  return out;
}

std::vector<CheckResult> check_hat_basis(const RootSystem& rs, const SignFunction& epsilon) {
  return {run_check("hat basis: [e^_a, e^_-a] = h_a, [e^_a, e^_b] = +-m_a^-(b) e^_(a+b) [eps " +
                        epsilon.to_string() + "]",
                    [&](Tally& t) {
                      t.credit(verify_hat_basis(rs, build_chevalley_basis(rs, epsilon)));
                    })};
}

CheckResult check_g2_table(const RootSystem& rs) {
  return run_check("G2 bracket table matches the published constants", [&](Tally& t) {
    if (!(rs.cartan() == CartanMatrix::from_type("G2"))) throw UsageError("not the standard G2 Cartan matrix");
    const SignFunction eps = SignFunction::parse(rs.cartan(), "+-");
    const ChevalleyBasis b = build_chevalley_basis(rs, eps);
    const StructureConstantTable table = structure_constants(rs, b);
    for (const TableEntry& row : g2_reference_table()) {
      const Integer& n = table.at(rs.index_of(row.alpha), rs.index_of(row.beta));
      t.require(n == row.n, [&] {
        return "[" + sym(row.alpha) + ", " + sym(row.beta) + "]: got " + n.get_str() + ", table has " +
               std::to_string(row.n);
      });
    }
  });
}

CheckResult check_group_order(const RootSystem& rs, std::uint64_t q, std::uint64_t cap, std::uint64_t seed) {
  const auto [type, rank] = identify_type(rs);
  const std::string name = "group: |G(GF(" + std::to_string(q) + "))| by BFS equals the order formula";
  Tally t;
  try {
    const RingSpec field = RingSpec::prime_field(q);
    const Integer expected = classical_order_oracle(type, rank, q);
    const GroupEnumeration g = generate_group_bfs(rs, field, cap);
    const Integer order(static_cast<unsigned long>(g.order()));
    if (order != expected) {
      return {name, false,
              "BFS order " + order.get_str() + " != formula " + expected.get_str() + " for " + std::string(1, type) +
                  std::to_string(rank) + " over GF(" + std::to_string(q) + ") with generators x_i(t), y_i(t), t != 0"};
    }
    t.credit(1);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 8; ++trial) {
      const GroupElem x = g.element(rng() % g.order());
      t.require(determinant_mod_p(x).is_unit(), [] { return std::string("determinant not a unit"); });
      t.require(power(x, order) == GroupElem::identity(x.dimension(), field),
                [] { return std::string("g^|G| != id"); });
    }
    const ChevalleyBasis basis = build_chevalley_basis(rs, two_colorings(rs.cartan()).first);
    for (std::size_t k = 0; k < rs.size(); ++k) {
      for (std::uint64_t s = 1; s < q; ++s) {
        const GroupElem x = x_alpha_gen(basis, k, RingElem::from_integer(field, Integer(static_cast<unsigned long>(s))));
        t.require(g.contains(x), [&] { return "x_" + sym(rs.root(k)) + "(" + std::to_string(s) + ") not in G"; });
      }
    }
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
  return t.result(name);
}

std::vector<CheckResult> run_verification(const RootSystem& rs, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> more) {
    for (CheckResult& r : more) out.push_back(std::move(r));
  };
  append(check_root_strings(rs));
  append(check_adjoint_relations(rs));
  append(check_closure(rs));
  const auto [eps, neg] = two_colorings(rs.cartan());
  for (const SignFunction& e : {eps, neg}) append(check_chevalley_basis(rs, e));
  append(check_n_i(rs, eps));
  append(check_exponentials(rs));
  for (const SignFunction& e : {eps, neg}) append(check_hat_basis(rs, e));
  if (rs.cartan() == CartanMatrix::from_type("G2")) out.push_back(check_g2_table(rs));
  const auto [type, rank] = identify_type(rs);
  try {
    if (classical_order_oracle(type, rank, 2) <= options.group_limit) {
      out.push_back(check_group_order(rs, 2, options.group_limit, options.seed));
    }
  } catch (const UnsupportedType&) {
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
  return out.str();
}

}  // namespace chevalley
