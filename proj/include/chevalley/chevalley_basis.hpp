#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/adjoint.hpp"
#include "chevalley/exponential.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

/// epsilon: I -> {+1, -1} alternating across every edge of the Dynkin diagram.
struct SignFunction {
  std::vector<int> values;

  int operator[](std::size_t i) const { return values.at(i); }
  SignFunction negated() const;
  /// "+-+" style.
  std::string to_string() const;
  /// Parses "+-+" (or "-+-"); UsageError if malformed or not alternating.
  static SignFunction parse(const CartanMatrix& cartan, const std::string& text);

  friend bool operator==(const SignFunction&, const SignFunction&) = default;
};

/// The two alternating sign functions; the first has epsilon(1) = +1.
std::pair<SignFunction, SignFunction> two_colorings(const CartanMatrix& cartan);

enum class NegativeRootRule {
  /// e_{-alpha} = -omega e_alpha omega.
  Involution,
  /// e_{-alpha} = [f_i, e_{-beta}] / m_i^+(-beta), the mirror of the positive recursion.
  Recursion,
};

/// {h_i} u {e_alpha}: the images of the basis of M under the module
/// isomorphism M -> g pinned by e_{alpha_i} = eps(i) e_i.
class ChevalleyBasis {
 public:
  ChevalleyBasis(SignFunction epsilon, std::vector<IntMatrix> e, std::vector<IntMatrix> h, ModelBasis model)
      : epsilon_(std::move(epsilon)), e_(std::move(e)), h_(std::move(h)), model_(model) {}

  const SignFunction& epsilon() const { return epsilon_; }
  /// e_alpha for the root with the given index.
  const IntMatrix& e(std::size_t root_index) const { return e_.at(root_index); }
  const IntMatrix& h(std::size_t i) const { return h_.at(i); }
  std::size_t num_roots() const { return e_.size(); }
  std::size_t rank() const { return h_.size(); }

  /// Image of the basis vector at a model position: v_alpha -> e_alpha,
  /// u_i -> -eps(i) h_i.
  IntMatrix phi_basis(std::size_t position) const;
  /// Image of an arbitrary vector of M.
  RatMatrix phi(const std::vector<Rational>& coefficients) const;

 private:
  SignFunction epsilon_;
  std::vector<IntMatrix> e_;
  std::vector<IntMatrix> h_;
  ModelBasis model_;
};

/// Height recursion: e_alpha = [e_i, e_{alpha - alpha_i}] / m_i^-(alpha - alpha_i)
/// with i the smallest index such that alpha - alpha_i is a positive root.
/// Every result is checked integral, primitive and nilpotent.
ChevalleyBasis build_chevalley_basis(const RootSystem& rs, const SignFunction& epsilon,
                                     NegativeRootRule rule = NegativeRootRule::Involution);

/// N_{alpha,beta} for all root indices with alpha + beta a root.
struct StructureConstantTable {
  std::map<std::pair<std::size_t, std::size_t>, Integer> entries;

  std::size_t size() const { return entries.size(); }
  const Integer& at(std::size_t alpha, std::size_t beta) const;
  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;
};

/// Solves [e_alpha, e_beta] = N e_{alpha+beta}; ConstructionBroken if the
/// bracket is not a multiple.
StructureConstantTable structure_constants(const RootSystem& rs, const ChevalleyBasis& basis);

/// exp(t e_i) exp(-t^-1 f_i) exp(t e_i).
RingMatrix build_n_i(const RootSystem& rs, std::size_t i, const RingElem& t);
/// The same map written down from its action on the basis of M.
RingMatrix n_i_closed_form(const RootSystem& rs, std::size_t i, const RingElem& t);

/// eta = n_{i_1}(1) ... n_{i_k}(1) for the Weyl word of alpha; returns the
/// sign s with e_alpha = s * eta e_base eta^-1.
int eta_conjugate_sign(const RootSystem& rs, const ChevalleyBasis& basis, std::size_t root_index);

/// e_alpha for even height, i * e_alpha for odd height, over Z[i].
std::vector<GaussMatrix> hat_basis(const RootSystem& rs, const ChevalleyBasis& basis);
/// Checks [e^_a, e^_-a] = h_a and [e^_a, e^_b] = +-m_a^-(b) e^_{a+b}; returns
/// the number of relations checked, ConstructionBroken on a mismatch.
std::size_t verify_hat_basis(const RootSystem& rs, const ChevalleyBasis& basis);

struct TableEntry {
  Root alpha;
  Root beta;
  int n;
};

/// The published G2 bracket table for eps = (+1, -1), with a_12 = -1, a_21 = -3.
const std::vector<TableEntry>& g2_reference_table();
/// Renders the G2 table relations with the constants computed from basis.
std::string g2_table(const RootSystem& rs, const ChevalleyBasis& basis);

}  // namespace chevalley
