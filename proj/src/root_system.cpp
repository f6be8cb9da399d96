#include "chevalley/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace chevalley {

namespace {

constexpr std::size_t kRootCap = 1000000;

}  // namespace

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) && height() > 0;
}

bool Root::is_negative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; }) && height() < 0;
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

std::string Root::symbol() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Root operator-(const Root& r) {
  Root out = r;
  for (int& c : out.coords) c = -c;
  return out;
}

Root operator+(const Root& a, const Root& b) {
  if (a.coords.size() != b.coords.size()) throw UsageError("root rank mismatch");
  Root out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& r) {
  Root out = r;
  for (int& c : out.coords) c *= k;
  return out;
}

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const std::size_t l = cartan_.rank();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> todo;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    std::vector<int> beta = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      int k = simple_pairing(Root{beta}, i);
      if (k == 0) continue;
      std::vector<int> image = beta;
      image[i] -= k;
      if (seen.insert(image).second) {
        if (seen.size() > kRootCap) throw NotFiniteType("root generation exceeded 10^6 roots");
        todo.push_back(std::move(image));
      }
    }
  }

  std::vector<Root> positives;
  for (const auto& c : seen) {
    Root r{c};
    if (r.is_positive()) {
      positives.push_back(r);
    } else if (!r.is_negative()) {
      throw NotFiniteType("generated vector " + r.to_string() + " is neither positive nor negative");
    }
  }
  if (positives.size() * 2 != seen.size()) throw NotFiniteType("root set is not symmetric");
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  num_positive_ = positives.size();
  roots_ = positives;
  for (const Root& r : positives) roots_.push_back(-r);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k].coords, k);
}

std::optional<std::size_t> RootSystem::find(const Root& r) const {
  auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto idx = find(r);
  if (!idx) throw UnknownRoot(r.to_string() + " is not a root");
  return *idx;
}

std::size_t RootSystem::negative_index(std::size_t index) const {
  if (index >= roots_.size()) throw UnknownRoot("root index out of range");
  return index < num_positive_ ? index + num_positive_ : index - num_positive_;
}

void RootSystem::require_index(std::size_t i) const {
  if (i >= rank()) throw UsageError("simple index " + std::to_string(i) + " out of range");
}

Root RootSystem::simple_root(std::size_t i) const {
  require_index(i);
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

int RootSystem::form(const Root& beta, const Root& alpha) const {
  const std::size_t l = rank();
  if (beta.coords.size() != l || alpha.coords.size() != l) throw UsageError("root rank mismatch");
  int s = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (beta.coords[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j) s += beta.coords[i] * cartan_.form(i, j) * alpha.coords[j];
  }
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  index_of(beta);
  index_of(alpha);
  int num = 2 * form(beta, alpha);
  int den = form(alpha, alpha);
  if (num % den != 0) throw ConstructionBroken("non-integral pairing");
  return num / den;
}

int RootSystem::simple_pairing(const Root& beta, std::size_t i) const {
  int s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += beta.coords[j] * cartan_(i, j);
  return s;
}

RootString RootSystem::root_string(const Root& alpha, const Root& beta) const {
  index_of(alpha);
  index_of(beta);
  if (beta == alpha || beta == -alpha) throw DegenerateString("root string needs beta != +-alpha");
  RootString s;
  while (contains(beta + (s.p + 1) * alpha)) ++s.p;
  while (contains(beta - (s.q + 1) * alpha)) ++s.q;
  return s;
}

int RootSystem::m_minus(const Root& alpha, const Root& beta) const { return root_string(alpha, beta).q + 1; }

int RootSystem::m_plus(const Root& alpha, const Root& beta) const { return root_string(alpha, beta).p + 1; }

int RootSystem::m_minus_simple(std::size_t i, const Root& beta) const { return m_minus(simple_root(i), beta); }

int RootSystem::m_plus_simple(std::size_t i, const Root& beta) const { return m_plus(simple_root(i), beta); }

Root RootSystem::reflect(std::size_t i, const Root& beta) const {
  require_index(i);
  index_of(beta);
  Root out = beta;
  out.coords[i] -= simple_pairing(beta, i);
  return out;
}

WeylWord RootSystem::weyl_word(const Root& alpha) const {
  index_of(alpha);
  if (alpha.is_negative()) {
    WeylWord w = weyl_word(-alpha);
    w.word.push_back(w.base);
    return w;
  }
  WeylWord w;
  Root current = alpha;
  while (current.height() > 1) {
    std::size_t chosen = rank();
    for (std::size_t j = 0; j < rank(); ++j) {
      if (simple_pairing(current, j) > 0) {
        chosen = j;
        break;
      }
    }
    if (chosen == rank()) throw ConstructionBroken("no height-lowering reflection for " + current.to_string());
    w.word.push_back(chosen);
    current = reflect(chosen, current);
  }
  auto it = std::find(current.coords.begin(), current.coords.end(), 1);
  w.base = static_cast<std::size_t>(it - current.coords.begin());
  return w;
}

std::pair<char, int> identify_type(const RootSystem& rs) {
  const int l = static_cast<int>(rs.rank());
  const std::size_t n = rs.size();
  std::set<int> lengths;
  int min_length = 0;
  for (const Root& r : rs.roots()) {
    int len = rs.form(r, r);
    lengths.insert(len);
    if (min_length == 0 || len < min_length) min_length = len;
  }
  std::size_t short_roots = 0;
  for (const Root& r : rs.roots()) short_roots += rs.form(r, r) == min_length ? 1 : 0;
  const bool simply_laced = lengths.size() == 1;
  const auto L = static_cast<std::size_t>(l);
  if (simply_laced) {
    if (n == L * (L + 1)) return {'A', l};
    if (l >= 4 && n == 2 * L * (L - 1)) return {'D', l};
    if (l == 6 && n == 72) return {'E', 6};
    if (l == 7 && n == 126) return {'E', 7};
    if (l == 8 && n == 240) return {'E', 8};
  } else {
    if (l == 2 && n == 12) return {'G', 2};
    if (l == 4 && n == 48) return {'F', 4};
    if (n == 2 * L * L) {
      if (short_roots == 2 * L) return {'B', l};
      return {'C', l};
    }
  }
  throw UnsupportedType("could not identify root system type");
}

}  // namespace chevalley
