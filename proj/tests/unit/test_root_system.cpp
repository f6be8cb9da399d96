#include <doctest.h>

#include <set>

#include "chevalley/root_system.hpp"

using namespace chevalley;

namespace {

/// Positive roots by height induction: beta + a_i is a root iff p > 0, with
/// q read off by stepping down and p = q - (beta, a_i^vee).
std::set<std::vector<int>> positive_roots_by_height(const CartanMatrix& a) {
  const std::size_t l = a.rank();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> r(l, 0);
    r[i] = 1;
    layer.push_back(r);
    roots.insert(r);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int q = 0;
        for (std::vector<int> down = beta;;) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++q;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * a(i, j);
        if (q - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return roots;
}

std::size_t expected_count(char t, int l) {
  switch (t) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

const char* kTypes[] = {"A1", "A2", "A3", "A4", "A7", "B2", "B3", "B4", "C3", "C4", "D4", "D5",
                        "G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST_SUITE("rootsystem") {
  TEST_CASE("Cartan matrices of standard types") {
    CHECK(CartanMatrix::from_type("A1").rows() == std::vector<std::vector<long>>{{2}});
    const CartanMatrix g2 = CartanMatrix::from_type("G2");
    CHECK(g2(1, 0) == -3);
    CHECK(g2(0, 1) == -1);
    CHECK(g2.symmetrizer() == std::vector<int>{3, 1});
    const CartanMatrix b3 = CartanMatrix::from_type("B3");
    CHECK(b3(2, 1) == -2);
    const CartanMatrix c3 = CartanMatrix::from_type("C3");
    CHECK(c3(1, 2) == -2);
    const CartanMatrix d4 = CartanMatrix::from_type("D4");
    CHECK(d4(1, 3) == -1);
    CHECK(d4(2, 3) == 0);
  }

  TEST_CASE("invalid Cartan matrices name the failed condition") {
    auto fails_with = [](const std::vector<std::vector<long>>& rows, const std::string& needle) {
      try {
        CartanMatrix::from_entries(rows);
      } catch (const InvalidCartan& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
      }
      return false;
    };
    CHECK(fails_with({{2, -1}, {-1, 2}, {0, 0}}, "square"));
    CHECK(fails_with({{3, -1}, {-1, 2}}, "diagonal"));
    CHECK(fails_with({{2, 1}, {1, 2}}, "positive"));
    CHECK(fails_with({{2, -1}, {0, 2}}, "a_ij = 0"));
    CHECK(fails_with({{2, 0}, {0, 2}}, "connected"));
    CHECK(fails_with({{2, -2}, {-2, 2}}, "finite"));
    CHECK(fails_with({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, "finite"));
    CHECK(fails_with({}, "empty"));
    CHECK_THROWS_AS(CartanMatrix::from_type("B1"), UsageError);
    CHECK_THROWS_AS(CartanMatrix::from_type("E9"), UsageError);
    CHECK_THROWS_AS(CartanMatrix::from_type("X2"), UsageError);
  }

  TEST_CASE("root counts and height-induction oracle") {
    for (const std::string t : kTypes) {
      CAPTURE(t);
      const RootSystem rs(CartanMatrix::from_type(t));
      const auto [letter, rank] = parse_designation(t);
      CHECK(rs.size() == expected_count(letter, rank));
      std::set<std::vector<int>> pos;
      for (std::size_t k = 0; k < rs.num_positive(); ++k) pos.insert(rs.root(k).coords);
      CHECK(pos == positive_roots_by_height(rs.cartan()));
      CHECK(identify_type(rs) == std::make_pair(letter, rank));
    }
  }

  TEST_CASE("ordering: ascending height, simple roots first, negatives mirrored") {
    const RootSystem rs(CartanMatrix::from_type("B3"));
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.root(i) == rs.simple_root(i));
    for (std::size_t k = 1; k < rs.num_positive(); ++k) CHECK(rs.root(k - 1).height() <= rs.root(k).height());
    for (std::size_t k = 0; k < rs.num_positive(); ++k) CHECK(rs.root(rs.negative_index(k)) == -rs.root(k));
    CHECK(rs.root(rs.highest_root_index()).coords == std::vector<int>{1, 2, 2});
  }

  TEST_CASE("G2 has highest root 2a1+3a2 of height 5") {
    const RootSystem rs(CartanMatrix::from_type("G2"));
    CHECK(rs.size() == 12);
    CHECK(rs.root(rs.highest_root_index()).symbol() == "2a1+3a2");
    CHECK(rs.root(rs.highest_root_index()).height() == 5);
  }

  TEST_CASE("pairings") {
    const RootSystem g2(CartanMatrix::from_type("G2"));
    CHECK(g2.pairing(g2.simple_root(1), g2.simple_root(0)) == -1);
    CHECK(g2.pairing(g2.simple_root(0), g2.simple_root(1)) == -3);
    for (const Root& a : g2.roots()) CHECK(g2.pairing(a, a) == 2);
    const RootSystem a2(CartanMatrix::from_type("A2"));
    CHECK(a2.pairing(Root{{1, 1}}, Root{{1, 0}}) == 1);
    CHECK_THROWS_AS(a2.pairing(Root{{2, 0}}, Root{{1, 0}}), UnknownRoot);
  }

  TEST_CASE("root strings by membership scan") {
    const RootSystem a2(CartanMatrix::from_type("A2"));
    CHECK(a2.root_string(Root{{1, 0}}, Root{{0, 1}}) == RootString{1, 0});
    CHECK(a2.m_minus_simple(0, Root{{0, 1}}) == 1);
    CHECK(a2.m_plus_simple(0, Root{{0, 1}}) == 2);
    const RootSystem g2(CartanMatrix::from_type("G2"));
    CHECK(g2.root_string(Root{{0, 1}}, Root{{1, 0}}) == RootString{3, 0});
    CHECK(g2.m_minus_simple(1, Root{{1, 2}}) == 3);
    CHECK_THROWS_AS(g2.root_string(Root{{1, 0}}, Root{{-1, 0}}), DegenerateString);
    CHECK_THROWS_AS(g2.root_string(Root{{1, 0}}, Root{{1, 0}}), DegenerateString);
    const RootSystem b2(CartanMatrix::from_type("B2"));
    for (const Root& a : b2.roots()) {
      for (const Root& b : b2.roots()) {
        if (a == b || a == -b) continue;
        int p = 0, q = 0;
        while (b2.contains(b + (p + 1) * a)) ++p;
        while (b2.contains(b - (q + 1) * a)) ++q;
        CHECK(b2.root_string(a, b) == RootString{p, q});
        CHECK(b2.m_minus(a, b) == b2.m_plus(a, -b));
      }
    }
    const RootSystem a3(CartanMatrix::from_type("A3"));
    CHECK(a3.root_string(Root{{1, 0, 0}}, Root{{0, 0, 1}}) == RootString{0, 0});
  }

  TEST_CASE("reflections") {
    const RootSystem a2(CartanMatrix::from_type("A2"));
    CHECK(a2.reflect(0, Root{{0, 1}}) == Root{{1, 1}});
    for (std::size_t i = 0; i < 2; ++i) CHECK(a2.reflect(i, a2.simple_root(i)) == -a2.simple_root(i));
    const RootSystem a3(CartanMatrix::from_type("A3"));
    CHECK(a3.reflect(0, Root{{0, 0, 1}}) == Root{{0, 0, 1}});
    CHECK_THROWS_AS(a3.reflect(0, Root{{0, 0, 2}}), UnknownRoot);
  }

  TEST_CASE("Weyl words by greedy descent") {
    const RootSystem a2(CartanMatrix::from_type("A2"));
    const WeylWord w = a2.weyl_word(Root{{1, 1}});
    CHECK(w.word == std::vector<std::size_t>{0});
    CHECK(w.base == 1);
    const WeylWord s = a2.weyl_word(Root{{0, 1}});
    CHECK(s.word.empty());
    CHECK(s.base == 1);
    const RootSystem g2(CartanMatrix::from_type("G2"));
    const WeylWord h = g2.weyl_word(Root{{2, 3}});
    CHECK(h.word == std::vector<std::size_t>{0, 1});
    CHECK(h.base == 0);
    for (const std::string t : kTypes) {
      const RootSystem rs(CartanMatrix::from_type(t));
      for (const Root& a : rs.roots()) {
        const WeylWord ww = rs.weyl_word(a);
        Root r = rs.simple_root(ww.base);
        for (auto it = ww.word.rbegin(); it != ww.word.rend(); ++it) r = rs.reflect(*it, r);
        CHECK(r == a);
      }
    }
  }

  TEST_CASE("raw input in a permuted labelling") {
    // B3 with the short root first.
    const CartanMatrix a = CartanMatrix::from_entries({{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});
    const RootSystem rs(a);
    CHECK(rs.size() == 18);
    CHECK(identify_type(rs) == std::make_pair('B', 3));
    CHECK(a.designation().empty());
  }
}
