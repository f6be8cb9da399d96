#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/cartan.hpp"

namespace chevalley {

/// Integer coordinates over the simple roots.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  /// "[1,2]".
  std::string to_string() const;
  /// "a1+2a2", "-a1-3a2".
  std::string symbol() const;

  friend Root operator-(const Root& r);
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& r);
  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

/// The alpha-string through beta is beta - q alpha, ..., beta + p alpha.
struct RootString {
  int p = 0;
  int q = 0;
  friend bool operator==(const RootString&, const RootString&) = default;
};

/// alpha = s_{word[0]} ... s_{word[last]} (alpha_base).
struct WeylWord {
  std::vector<std::size_t> word;
  std::size_t base = 0;
};

/// The finite reduced root system of a Cartan matrix. Roots are ordered:
/// positive roots by ascending height (descending lexicographic coords
/// within a height, so simple roots come in index order), then their
/// negatives in the same order.
class RootSystem {
 public:
  /// Closes the simple roots under the simple reflections.
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }
  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return num_positive_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t index) const { return roots_.at(index); }

  std::optional<std::size_t> find(const Root& r) const;
  bool contains(const Root& r) const { return find(r).has_value(); }
  /// Throws UnknownRoot.
  std::size_t index_of(const Root& r) const;
  /// Index of -root(index).
  std::size_t negative_index(std::size_t index) const;
  std::size_t simple_index(std::size_t i) const { return i; }
  Root simple_root(std::size_t i) const;
  std::size_t highest_root_index() const { return num_positive_ - 1; }

  /// Symmetrized bilinear form (beta, alpha).
  int form(const Root& beta, const Root& alpha) const;
  /// (beta, alpha^vee); both must be roots.
  int pairing(const Root& beta, const Root& alpha) const;
  /// (beta, alpha_i^vee) for any integer vector beta.
  int simple_pairing(const Root& beta, std::size_t i) const;

  /// UnknownRoot if either is not a root; DegenerateString if beta = +-alpha.
  RootString root_string(const Root& alpha, const Root& beta) const;
  /// m_alpha^-(beta) = q + 1.
  int m_minus(const Root& alpha, const Root& beta) const;
  /// m_alpha^+(beta) = p + 1.
  int m_plus(const Root& alpha, const Root& beta) const;
  /// m_i^-(beta) for the simple root alpha_i.
  int m_minus_simple(std::size_t i, const Root& beta) const;
  int m_plus_simple(std::size_t i, const Root& beta) const;

  Root reflect(std::size_t i, const Root& beta) const;
  /// Greedy height descent: at each step the smallest index whose simple
  /// reflection lowers the height. For negative alpha the word for -alpha is
  /// extended by its base index.
  WeylWord weyl_word(const Root& alpha) const;

 private:
  void require_index(std::size_t i) const;

  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t num_positive_ = 0;
};

inline RootSystem generate_roots(const CartanMatrix& cartan) { return RootSystem(cartan); }

/// ('B', 3) etc., recognised from root counts and root lengths; works for raw
/// Cartan input in any labelling.
std::pair<char, int> identify_type(const RootSystem& rs);

}  // namespace chevalley
