#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specfock/branching.hpp"
#include "specfock/fock.hpp"

using namespace specfock;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Scan every cell near the diagram and count i-nodes above (right) or below (left) row r.
int scan(const Partition& lam, int r, int i, int l, bool right, bool indent_minus_removable) {
  int count = 0;
  for (int rr = 1; rr <= lam.length() + 1; ++rr) {
    if (right ? rr >= r : rr <= r) continue;
    for (int cc = 1; cc <= lam.row(1) + 1; ++cc) {
      if (residue({rr, cc}, l) != i) continue;
      bool inside = lam.contains({rr, cc});
      bool ind = !inside && (cc == 1 || lam.contains({rr, cc - 1})) && (rr == 1 || lam.contains({rr - 1, cc}));
      bool rem = inside && !lam.contains({rr, cc + 1}) && !lam.contains({rr + 1, cc});
      int delta = (ind ? 1 : 0) - (rem ? 1 : 0);
      count += indent_minus_removable ? delta : -delta;
    }
  }
  return count;
}

const Rational kSpecs[] = {Rational(2), Rational(-3, 5), Rational(7, 4)};

}  // namespace

TEST_CASE("gram branching scalar") {
  CHECK(gram_branch_scalar(P({7, 7, 6, 5, 4, 2}), 5).value_at_one() == Rational(5, 2));
  CHECK(gram_branch_scalar(P({5}), 1) == GaussRatio::one());
  CHECK(gram_branch_scalar(P({2, 2}), 2).value_at_one() == 2);
  CHECK_THROWS(gram_branch_scalar(P({2, 2}), 1));
  CHECK(restriction_valuation(P({7, 7, 6, 5, 4, 2}), 5, 5) == 1);
  CHECK(restriction_valuation(P({7, 7, 6, 5, 4, 2}), 5, 7) == 0);
  CHECK(restriction_valuation(P({4}), 1, 3) == 0);
}

TEST_CASE("restriction valuation equals the right node count") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : partitions_of(n))
      for (const Node& node : lam.removable_nodes())
        for (int l = 2; l <= 8; ++l) {
          Partition mu = lam.remove_node(node.row);
          int i = residue(node, l);
          CHECK(restriction_valuation(lam, node.row, l) == scan(mu, node.row, i, l, true, true));
        }
}

TEST_CASE("hook products and gamma") {
  CHECK(hook_product(P({1})) == GaussRatio({1}, {}));
  CHECK(hook_product(P({2, 1})) == GaussRatio({3, 1, 1}, {}));
  CHECK(hook_product(P({2, 2})) == GaussRatio({3, 2, 2, 1}, {}));
  CHECK(gamma_of_tableau(Tableau::row_reading(P({2, 1}))).value_at_one() == 2);
  CHECK(gamma_of_tableau(Tableau::row_reading(P({2, 1}))).evaluate(3) == 4);
  CHECK(gamma_of_tableau(Tableau::row_reading(P({3}))).evaluate(2) == Rational(3 * 7));
  CHECK(gamma_of_tableau(Tableau::row_reading(P({1}))) == GaussRatio::one());
  CHECK_THROWS(gamma_of_tableau(Tableau({{2, 1}})));
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      for (const Rational& q : kSpecs)
        CHECK(gamma_of_tableau(Tableau::row_reading(lam)).evaluate(q) == gamma_of_shape(lam).evaluate(q));
      if (n > 6) continue;
      for (const auto& t : standard_tableaux(lam)) {
        GaussRatio both = gamma_of_tableau(t) * gamma_of_tableau(t.conjugate());
        for (const Rational& q : kSpecs) CHECK(both.evaluate(q) == hook_product(lam).evaluate(q));
      }
    }
}

TEST_CASE("induction scalar") {
  auto a = induction_scalar(P({1}), 1, 2);
  CHECK(a.ratio == GaussRatio({1}, {2}));
  CHECK(a.valuation == -1);
  auto b = induction_scalar(P({1}), 2, 5);
  CHECK(b.ratio == GaussRatio::one());
  CHECK(b.valuation == 0);
  auto c = induction_scalar(P({1, 1}), 1, 2);
  CHECK(c.ratio == GaussRatio({2}, {3}));
  CHECK(c.valuation == 1);
  CHECK_THROWS(induction_scalar(P({1, 1}), 2, 2));
  // The simplified closed form: row-i hooks of lambda^i over the old columns.
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (const Node& node : lam.addable_nodes()) {
        Partition big = lam.add_node(node.row);
        std::vector<int> num, den;
        for (int j = 1; j <= lam.row(node.row); ++j) {
          num.push_back(hook_length(big, {node.row, j}) - 1);
          den.push_back(hook_length(big, {node.row, j}));
        }
        CHECK(induction_scalar(lam, node.row, 2).ratio == GaussRatio(num, den));
      }
}

TEST_CASE("induction valuation equals the left count") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& lam : partitions_of(n))
      for (const Node& node : lam.addable_nodes())
        for (int l = 2; l <= 8; ++l) {
          int i = residue(node, l);
          int expect = scan(lam, node.row, i, l, false, false);
          CHECK(induction_scalar(lam, node.row, l).valuation == expect);
          CHECK(left_count(lam, node.row, l) == expect);
        }
}

TEST_CASE("duality valuation") {
  CHECK(duality_valuation(P({2, 1}), 2) == 0);
  CHECK(duality_valuation(P({2, 2}), 2) == 2);
  CHECK(duality_valuation(P({2, 1}), 5) == 0);
  for (int n = 0; n <= 14; ++n)
    for (const auto& lam : partitions_of(n))
      for (int l = 2; l <= 7; ++l) CHECK(duality_valuation(lam, l) == core_and_weight(lam, l).weight);
}
