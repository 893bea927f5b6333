#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "specfock/partitions.hpp"

using namespace specfock;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Core by literally peeling rim hooks of length l until none remain.
int weight_by_rim_hooks(Partition lambda, int l) {
  int removed = 0;
  bool again = true;
  while (again) {
    again = false;
    for (int r = 1; r <= lambda.length() && !again; ++r) {
      for (int c = 1; c <= lambda.row(r) && !again; ++c) {
        if (hook_length(lambda, {r, c}) != l) continue;
        // Remove the rim hook from (r, c): shift the rows r..r+leg.
        int leg = 0;
        while (lambda.row(r + leg + 1) >= c) ++leg;
        std::vector<int> parts = lambda.parts();
        for (int k = r; k < r + leg; ++k) parts[k - 1] = parts[k] - 1;
        parts[r + leg - 1] = c - 1;
        std::vector<int> cleaned;
        for (int x : parts)
          if (x > 0) cleaned.push_back(x);
        lambda = Partition(cleaned);
        ++removed;
        again = true;
      }
    }
  }
  return removed;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(P({2, 1}).conjugate() == P({2, 1}));
  CHECK(P({3}).conjugate() == P({1, 1, 1}));
  CHECK(P({7, 7, 6, 5, 4, 2}).conjugate() == P({6, 6, 5, 5, 4, 3, 2}));
  CHECK_THROWS(P({1, 2}));
  CHECK_THROWS(P({2, 0}));
  CHECK(Partition::parse("7,7,6,5,4,2") == P({7, 7, 6, 5, 4, 2}));
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("(3, 1)") == P({3, 1}));
  CHECK_THROWS(Partition::parse("3,a"));
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK(P({7, 7, 6, 5, 4, 2}).to_string() == "7,7,6,5,4,2");
  CHECK(Node::parse("(1,15)") == Node{1, 15});
  CHECK(Node{2, 3}.to_string() == "(2,3)");
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("hook lengths and residues") {
  Partition lam = P({7, 7, 6, 5, 4, 2});
  CHECK(hook_length(lam, {1, 4}) == 8);
  CHECK(hook_length(lam, {4, 4}) == 3);
  CHECK(hook_length(P({1}), {1, 1}) == 1);
  CHECK_THROWS(hook_length(lam, {6, 3}));
  CHECK(residue({1, 1}, 5) == 0);
  CHECK(residue({2, 1}, 5) == 4);
  CHECK(residue({1, 15}, 5) == 4);
}

TEST_CASE("node lists") {
  auto a = node_lists(P({15, 9}), 0, 5);
  CHECK(a.addable == std::vector<Node>{{1, 16}});
  CHECK(a.removable.empty());
  auto b = node_lists(P({15, 9}), 3, 5);
  CHECK(b.addable == std::vector<Node>{{2, 10}, {3, 1}});
  CHECK(b.removable.empty());
  for (int i = 0; i < 3; ++i) {
    auto e = node_lists(Partition(), i, 3);
    CHECK(e.addable.size() == (i == 0 ? 1u : 0u));
    CHECK(e.removable.empty());
  }
  // Conjugation swaps rows and columns and negates residues.
  for (int n = 0; n <= 9; ++n)
    for (const auto& lam : partitions_of(n))
      for (int l = 2; l <= 5; ++l)
        for (int i = 0; i < l; ++i) {
          auto x = node_lists(lam, i, l);
          auto y = node_lists(lam.conjugate(), (l - i) % l, l);
          std::set<Node> xa, ya, xr, yr;
          for (auto v : x.addable) xa.insert({v.col, v.row});
          for (auto v : y.addable) ya.insert(v);
          for (auto v : x.removable) xr.insert({v.col, v.row});
          for (auto v : y.removable) yr.insert(v);
          CHECK(xa == ya);
          CHECK(xr == yr);
        }
}

TEST_CASE("node counts") {
  auto c1 = n_counts(P({16, 9}), P({15, 9}), 5);
  CHECK(c1.right == 0);
  CHECK(c1.residue == 0);
  CHECK(c1.node == Node{1, 16});
  // Two-row lambda with lambda1 - lambda2 = -1 mod l, node added in row 2.
  auto c2 = n_counts(P({7, 6}), P({7, 5}), 3);
  CHECK(c2.right == 1);
  // Node (1,2) of (2,1) at l = 2: removable 1-node (2,1) lies to its left.
  auto c3 = n_counts(P({2, 1}), P({1, 1}), 2);
  CHECK(c3.residue == 1);
  CHECK(c3.left == -1);
  CHECK(c3.right == 0);
  CHECK_THROWS(n_counts(P({2, 1}), P({2, 1}), 2));
  CHECK_THROWS(n_counts(P({3}), P({1, 1}), 2));
}

TEST_CASE("cores and weights") {
  auto a = core_and_weight(P({2, 1}), 2);
  CHECK(a.core == P({2, 1}));
  CHECK(a.weight == 0);
  auto b = core_and_weight(P({2, 2}), 2);
  CHECK(b.core.empty());
  CHECK(b.weight == 2);
  for (int n = 0; n <= 14; ++n)
    for (const auto& lam : partitions_of(n))
      for (int l = 2; l <= 7; ++l) {
        auto cw = core_and_weight(lam, l);
        if (n < l) {
          CHECK(cw.core == lam);
          CHECK(cw.weight == 0);
        }
        // Bead count does not change the core.
        CHECK(core_and_weight(lam, l, cw.core.length() + lam.length() + l).core == cw.core);
        CHECK(weight_by_rim_hooks(lam, l) == cw.weight);
        int divisible = 0;
        for (int r = 1; r <= lam.length(); ++r)
          for (int c = 1; c <= lam.row(r); ++c) divisible += hook_length(lam, {r, c}) % l == 0;
        CHECK(divisible == cw.weight);
      }
}

TEST_CASE("weight identity for single-node pairs") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& lam : partitions_of(n))
      for (const Node& node : lam.removable_nodes()) {
        Partition mu = lam.remove_node(node.row);
        for (int l = 2; l <= 6; ++l) {
          auto c = n_counts(lam, mu, l);
          CHECK(-core_and_weight(mu, l).weight == -core_and_weight(lam, l).weight + c.left + c.right);
        }
      }
}

TEST_CASE("regularity and orders") {
  CHECK(is_l_regular(P({2, 1}), 2));
  CHECK_FALSE(is_l_regular(P({1, 1}), 2));
  CHECK_FALSE(is_l_regular(P({3, 3, 3, 1}), 3));
  CHECK(dominance_refining_order(P({2}), P({1, 1})) == std::strong_ordering::greater);
  CHECK(dominance_refining_order(P({2, 2}), P({3, 1})) == std::strong_ordering::less);
  CHECK(dominance_refining_order(P({2, 2}), P({2, 2})) == std::strong_ordering::equal);
  CHECK_THROWS(dominance_refining_order(P({2}), P({1})));
  for (int n = 1; n <= 9; ++n) {
    auto all = partitions_of(n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (a != b && dominates(a, b)) CHECK(dominance_refining_order(a, b) == std::strong_ordering::greater);
  }
  CHECK_FALSE(dominates(P({3, 1, 1, 1}), P({2, 2, 2})));
  CHECK_FALSE(dominates(P({2, 2, 2}), P({3, 1, 1, 1})));
}

TEST_CASE("digit containment") {
  CHECK(contains(38, 2, 3));
  CHECK_FALSE(contains(38, 29, 3));
  CHECK(contains(38, 0, 3));
  CHECK(contains(38, 11, 3));
  CHECK_FALSE(contains(38, 27, 3));
  CHECK_THROWS(contains(5, 1, 4));
  for (int p : {2, 3, 5, 7})
    for (long long a = 0; a <= 200; ++a)
      for (long long b = 0; b <= 250; ++b)
        if (contains(a, b, p)) CHECK(b <= a);
}

TEST_CASE("tableaux") {
  Tableau t = Tableau::row_reading(P({3, 2}));
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK(t.is_standard());
  Tableau c = Tableau::column_reading(P({3, 2}));
  CHECK(c.rows() == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
  CHECK(c.conjugate().shape() == P({2, 2, 1}));
  CHECK(t.position(4) == Node{2, 1});
  CHECK(t.restricted(3).shape() == P({3}));
  CHECK_THROWS(Tableau({{1, 1}}));
  CHECK_THROWS(Tableau({{1}, {2, 3}}));
  Tableau bad({{2, 1}, {3}});
  CHECK_FALSE(bad.is_row_standard());
  Tableau rs({{1, 3}, {2}});
  CHECK(rs.is_standard());
  Tableau rsn({{2, 3}, {1}});
  CHECK(rsn.is_row_standard());
  CHECK_FALSE(rsn.is_standard());
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto st = standard_tableaux(lam);
      CHECK(static_cast<long long>(st.size()) == count_standard_tableaux(lam));
      for (const auto& s : st) CHECK(s.is_standard());
      auto rst = row_standard_tableaux(lam);
      for (const auto& s : rst) CHECK(s.is_row_standard());
      // Multinomial count n! / prod(lambda_i!).
      long long expect = 1;
      for (int k = 2; k <= n; ++k) expect *= k;
      for (int part : lam.parts())
        for (int k = 2; k <= part; ++k) expect /= k;
      CHECK(static_cast<long long>(rst.size()) == expect);
    }
}
