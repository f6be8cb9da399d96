#include "chevalley/chevalley_group.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>

namespace chevalley {

GroupElem x_alpha_gen(const ChevalleyBasis& basis, std::size_t root_index, const RingElem& t) {
  return exp_nilpotent(basis.e(root_index), t);
}

std::vector<GroupElem> group_generators(const RootSystem& rs, const RingSpec& field) {
  if (field.kind() != RingKind::PrimeField) throw UsageError("group enumeration needs a prime field");
  std::vector<GroupElem> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    for (std::uint32_t t = 1; t < field.modulus(); ++t) {
      const RingElem s = RingElem::from_integer(field, Integer(t));
      gens.push_back(x_gen(rs, i, s));
      gens.push_back(y_gen(rs, i, s));
    }
  }
  return gens;
}

std::uint64_t default_bfs_cap() {
  if (const char* env = std::getenv("CHEVALLEY_BFS_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 5'000'000;
}

GroupEnumeration::GroupEnumeration(RingSpec field, std::size_t dimension)
    : field_(field), dimension_(dimension), bytes_per_entry_(field.modulus() < 256 ? 1 : 4) {
  if (field.kind() != RingKind::PrimeField) throw UsageError("group enumeration needs a prime field");
}

std::string GroupEnumeration::key(const GroupElem& g) const {
  if (!(g.ring == field_) || g.dimension() != dimension_) throw UsageError("element does not belong to this group");
  std::string out;
  out.reserve(dimension_ * dimension_ * bytes_per_entry_);
  for (const RingElem& x : g.matrix.data()) {
    const std::uint32_t r = x.as_residue();
    for (std::size_t b = 0; b < bytes_per_entry_; ++b) out.push_back(static_cast<char>((r >> (8 * b)) & 0xff));
  }
  return out;
}

GroupElem GroupEnumeration::decode(const std::string& key) const {
  const std::size_t n = dimension_;
  if (key.size() != n * n * bytes_per_entry_) throw UsageError("malformed group element key");
  GroupElem g{field_, RingMatrix(n, n, RingElem::zero(field_))};
  for (std::size_t k = 0; k < n * n; ++k) {
    std::uint32_t r = 0;
    for (std::size_t b = 0; b < bytes_per_entry_; ++b) {
      r |= static_cast<std::uint32_t>(static_cast<unsigned char>(key[k * bytes_per_entry_ + b])) << (8 * b);
    }
    g.matrix.data()[k] = RingElem::from_integer(field_, Integer(r));
  }
  return g;
}

bool GroupEnumeration::insert(std::string key) {
  auto [it, fresh] = keys_.insert(std::move(key));
  if (fresh) order_.push_back(&*it);
  return fresh;
}

bool GroupEnumeration::contains(const GroupElem& g) const { return keys_.count(key(g)) > 0; }

GroupElem GroupEnumeration::element(std::size_t k) const { return decode(*order_.at(k)); }

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64(std::ofstream& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xff));
}

/// Nonzero entries of X - I for a generator X.
struct SparseStep {
  std::size_t row;
  std::size_t col;
  std::uint32_t value;
};

}  // namespace

void GroupEnumeration::write_dump(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out.write("CHVG", 4);
  put_u32(out, static_cast<std::uint32_t>(dimension_));
  put_u32(out, field_.modulus());
  put_u32(out, static_cast<std::uint32_t>(bytes_per_entry_));
  put_u64(out, order_.size());
  for (const std::string* k : order_) out.write(k->data(), static_cast<std::streamsize>(k->size()));
  if (!out) throw UsageError("write to " + path + " failed");
}

GroupEnumeration enumerate_group(const std::vector<GroupElem>& generators, std::uint64_t cap) {
  if (generators.empty()) throw UsageError("no generators");
  const RingSpec field = generators.front().ring;
  const std::size_t n = generators.front().dimension();
  const std::uint64_t p = field.modulus();
  GroupEnumeration group(field, n);

  // Right multiplication by I + S only touches the columns named in S:
  // (gX)(:, c) = g(:, c) + sum over (r, c, v) in S of v * g(:, r).
  std::vector<std::vector<SparseStep>> steps;
  for (const GroupElem& x : generators) {
    if (!(x.ring == field) || x.dimension() != n) throw UsageError("generators must share ring and size");
    std::vector<SparseStep> s;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t v = x.matrix(r, c).as_residue();
        if (r == c) v = static_cast<std::uint32_t>((v + p - 1) % p);
        if (v != 0) s.push_back({r, c, v});
      }
    }
    steps.push_back(std::move(s));
  }

  const std::size_t bpe = group.bytes_per_entry();
  auto unpack = [&](const std::string& key, std::vector<std::uint64_t>& m) {
    for (std::size_t k = 0; k < n * n; ++k) {
      std::uint64_t r = 0;
      for (std::size_t b = 0; b < bpe; ++b) r |= static_cast<std::uint64_t>(static_cast<unsigned char>(key[k * bpe + b])) << (8 * b);
      m[k] = r;
    }
  };
  auto pack = [&](const std::vector<std::uint64_t>& m) {
    std::string key(n * n * bpe, '\0');
    for (std::size_t k = 0; k < n * n; ++k) {
      for (std::size_t b = 0; b < bpe; ++b) key[k * bpe + b] = static_cast<char>((m[k] >> (8 * b)) & 0xff);
    }
    return key;
  };

  std::vector<std::uint64_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  group.insert(pack(id));
  std::vector<std::uint64_t> cur(n * n);
  std::vector<std::uint64_t> next(n * n);
  for (std::size_t head = 0; head < group.order(); ++head) {
    unpack(group.key_at(head), cur);
    for (const auto& s : steps) {
      next = cur;
      for (const SparseStep& st : s) {
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t g = cur[i * n + st.row];
          if (g != 0) next[i * n + st.col] = (next[i * n + st.col] + g * st.value) % p;
        }
      }
      if (group.insert(pack(next)) && group.order() > cap) {
        throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements", group.order());
      }
    }
  }
  return group;
}

GroupEnumeration generate_group_bfs(const RootSystem& rs, const RingSpec& field, std::uint64_t cap) {
  return enumerate_group(group_generators(rs, field), cap);
}

namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<unsigned long> degrees(char type, int rank) {
  std::vector<unsigned long> d;
  switch (type) {
    case 'A':
      for (int k = 2; k <= rank + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= rank; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < rank; ++k) d.push_back(2 * k);
      d.push_back(rank);
      break;
    case 'E':
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      if (rank == 4) d = {2, 6, 8, 12};
      break;
    case 'G':
      if (rank == 2) d = {2, 6};
      break;
    default:
      break;
  }
  if (d.empty()) throw UnsupportedType(std::string("no order formula for type ") + type + std::to_string(rank));
  return d;
}

}  // namespace

Integer classical_order_oracle(char type, int rank, std::uint64_t q) {
  if (!is_prime_power(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  const std::vector<unsigned long> d = degrees(type, rank);
  const Integer qq(static_cast<unsigned long>(q));
  unsigned long num_positive = 0;
  Integer order(1);
  for (unsigned long di : d) {
    num_positive += di - 1;
    Integer qd;
    mpz_pow_ui(qd.get_mpz_t(), qq.get_mpz_t(), di);
    order *= qd - 1;
  }
  Integer qn;
  mpz_pow_ui(qn.get_mpz_t(), qq.get_mpz_t(), num_positive);
  order *= qn;
  Integer center(1);
  auto g = [](const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  };
  switch (type) {
    case 'A':
      center = g(Integer(rank + 1), qq - 1);
      break;
    case 'B':
    case 'C':
      center = g(Integer(2), qq - 1);
      break;
    case 'D': {
      Integer ql;
      mpz_pow_ui(ql.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(rank));
      center = g(Integer(4), ql - 1);
      break;
    }
    case 'E':
      if (rank == 6) center = g(Integer(3), qq - 1);
      if (rank == 7) center = g(Integer(2), qq - 1);
      break;
    default:
      break;
  }
  return order / center;
}

RingElem determinant_mod_p(const GroupElem& g) {
  if (g.ring.kind() != RingKind::PrimeField) throw UsageError("determinant_mod_p needs a prime field");
  RingMatrix m = g.matrix;
  const std::size_t n = m.rows();
  RingElem det = RingElem::one(g.ring);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return RingElem::zero(g.ring);
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const RingElem inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const RingElem f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

GroupElem power(const GroupElem& g, const Integer& k) {
  if (sgn(k) < 0) throw UsageError("negative exponent");
  GroupElem result = GroupElem::identity(g.dimension(), g.ring);
  GroupElem base = g;
  Integer e = k;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (sgn(e) > 0) base = base * base;
  }
  return result;
}

}  // namespace chevalley
