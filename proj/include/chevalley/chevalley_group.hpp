#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "chevalley/chevalley_basis.hpp"
#include "chevalley/exponential.hpp"

namespace chevalley {

/// x_alpha(t) = exp(t e_alpha).
GroupElem x_alpha_gen(const ChevalleyBasis& basis, std::size_t root_index, const RingElem& t);

/// x_i(t), y_i(t) for every simple index and every t in F_q^x, in that order.
std::vector<GroupElem> group_generators(const RootSystem& rs, const RingSpec& field);

/// 5,000,000 unless CHEVALLEY_BFS_CAP is set to a positive integer.
std::uint64_t default_bfs_cap();

/// A finite matrix group over a prime field, stored as packed residue keys in
/// breadth-first discovery order.
class GroupEnumeration {
 public:
  GroupEnumeration(RingSpec field, std::size_t dimension);

  const RingSpec& field() const { return field_; }
  std::size_t dimension() const { return dimension_; }
  std::uint64_t order() const { return order_.size(); }
  /// 1 when p < 256, else 4 (little endian).
  std::size_t bytes_per_entry() const { return bytes_per_entry_; }

  bool contains(const GroupElem& g) const;
  GroupElem element(std::size_t k) const;
  const std::string& key_at(std::size_t k) const { return *order_.at(k); }

  /// Binary dump: "CHVG", u32 dimension, u32 modulus, u32 bytes per entry,
  /// u64 count, then count row-major matrices (all little endian).
  void write_dump(const std::string& path) const;

  std::string key(const GroupElem& g) const;
  GroupElem decode(const std::string& key) const;
  /// Returns false if the key was already present.
  bool insert(std::string key);

 private:
  RingSpec field_;
  std::size_t dimension_;
  std::size_t bytes_per_entry_;
  std::unordered_set<std::string> keys_;
  std::vector<const std::string*> order_;
};

/// Closure of {1} under right multiplication by the generators. CapExceeded
/// once more than cap elements have been found.
GroupEnumeration enumerate_group(const std::vector<GroupElem>& generators, std::uint64_t cap);

/// G_R for R = F_p, generated by x_i(t), y_i(t).
GroupEnumeration generate_group_bfs(const RootSystem& rs, const RingSpec& field, std::uint64_t cap);

/// q^N prod (q^d_i - 1) / |Z| for the adjoint group of the given type over F_q.
/// UsageError if q is not a prime power, UnsupportedType for unknown types.
Integer classical_order_oracle(char type, int rank, std::uint64_t q);

/// Determinant of a square matrix over a prime field.
RingElem determinant_mod_p(const GroupElem& g);

/// g^k by repeated squaring, k >= 0.
GroupElem power(const GroupElem& g, const Integer& k);

}  // namespace chevalley
