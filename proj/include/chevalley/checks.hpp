#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevalley/chevalley_basis.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Count of verified instances on success, the first counterexample otherwise.
  std::string detail;
};

// Each group of checks runs exhaustively over the given root system. Errors
// thrown by the library while checking are reported as failures.

std::vector<CheckResult> check_root_strings(const RootSystem& rs);
std::vector<CheckResult> check_adjoint_relations(const RootSystem& rs);
/// Closure dimension, root space decomposition, triangularity, trace,
/// irreducibility of M, and that each e_alpha spans its root space.
std::vector<CheckResult> check_closure(const RootSystem& rs);
std::vector<CheckResult> check_chevalley_basis(const RootSystem& rs, const SignFunction& epsilon);
/// n_i(t) at t in {1, -1, 2, 1/2} over QQ.
std::vector<CheckResult> check_n_i(const RootSystem& rs, const SignFunction& epsilon);
/// Closed-form x_i(t), y_i(t) against divided-power exponentials over QQ, GF(2), GF(3).
std::vector<CheckResult> check_exponentials(const RootSystem& rs);
std::vector<CheckResult> check_hat_basis(const RootSystem& rs, const SignFunction& epsilon);
/// Only meaningful for the standard G2 Cartan matrix with epsilon = (+1, -1).
CheckResult check_g2_table(const RootSystem& rs);
/// BFS order over GF(q) against the order formula, plus determinant, exponent
/// and root-element membership spot checks on seeded random elements.
CheckResult check_group_order(const RootSystem& rs, std::uint64_t q, std::uint64_t cap, std::uint64_t seed);

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// The GF(2) group check runs only when the formula predicts at most this many elements.
  std::uint64_t group_limit = 200'000;
};

/// Everything above for one root system, both sign functions.
std::vector<CheckResult> run_verification(const RootSystem& rs, const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
/// One "PASS  name  detail" / "FAIL  name  detail" line per result.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace chevalley
