#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

/// Validated Cartan matrix of an irreducible finite root system, with the
/// convention a_ij = (alpha_j, alpha_i^vee). Indices are 0-based.
class CartanMatrix {
 public:
  /// "A3", "B2", "G2", ... using Bourbaki numbering; G2 has alpha_1 long.
  static CartanMatrix from_type(std::string_view designation);
  /// Validates a raw integer matrix; InvalidCartan names the failed condition.
  static CartanMatrix from_entries(const std::vector<std::vector<long>>& rows);

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  /// Minimal positive integers d with d_i a_ij = d_j a_ji.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  /// (alpha_i, alpha_j) = d_i a_ij.
  int form(std::size_t i, std::size_t j) const { return symmetrizer_[i] * (*this)(i, j); }
  /// Designation the matrix was built from, empty for raw input.
  const std::string& designation() const { return designation_; }

  std::vector<std::vector<long>> rows() const;
  IntMatrix as_matrix() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  CartanMatrix() = default;
  void validate();

  std::size_t rank_ = 0;
  std::vector<int> entries_;
  std::vector<int> symmetrizer_;
  std::string designation_;
};

/// Splits "G2" into ('G', 2); UsageError for anything else.
std::pair<char, int> parse_designation(std::string_view designation);

}  // namespace chevalley
