#include "specfock/branching.hpp"

#include <stdexcept>

namespace specfock {

GaussRatio gram_branch_scalar(const Partition& lambda, int r) {
  const int c = lambda.row(r);
  if (!lambda.is_removable({r, c})) throw std::invalid_argument("row " + std::to_string(r) + " has no removable node");
  std::vector<int> num, den;
  for (int a = 1; a < r; ++a) {
    int h = hook_length(lambda, {a, c});
    num.push_back(h);
    den.push_back(h - 1);
  }
  return GaussRatio(num, den);
}

int restriction_valuation(const Partition& lambda, int r, int l) {
  return cyclo_valuation(gram_branch_scalar(lambda, r), l);
}

GaussRatio hook_product(const Partition& lambda) {
  std::vector<int> hooks;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) hooks.push_back(hook_length(lambda, {r, c}));
  return GaussRatio(hooks, {});
}

GaussRatio gamma_step(const Tableau& t, int m) {
  Tableau small = t.restricted(m);
  const Partition& shape = small.shape();
  Node pos = small.position(m);
  std::vector<int> num, den;
  for (int j = 1; j < pos.col; ++j) {
    int h = hook_length(shape, {pos.row, j});
    num.push_back(h);
    den.push_back(h - 1);
  }
  return GaussRatio(num, den);
}

GaussRatio gamma_of_tableau(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("gamma_of_tableau needs a standard tableau");
  GaussRatio g;
  for (int m = 2; m <= t.size(); ++m) g *= gamma_step(t, m);
  return g;
}

GaussRatio gamma_of_shape(const Partition& lambda) {
  std::vector<int> num;
  for (int part : lambda.parts())
    for (int j = 1; j <= part; ++j) num.push_back(j);
  return GaussRatio(num, {});
}

Partition add_to_row(const Partition& lambda, int i) {
  if (i < 1 || !lambda.is_addable({i, lambda.row(i) + 1}))
    throw std::invalid_argument("row " + std::to_string(i) + " admits no added node");
  return lambda.add_node(i);
}

GaussRatio lowest_vector_norm(const Partition& lambda, int i) {
  Partition big = add_to_row(lambda, i);
  std::vector<int> num, den;
  for (int j = 1; j <= lambda.row(i); ++j) {
    int h = hook_length(big, {i, j});
    num.push_back(h - 1);
    den.push_back(h);
  }
  return gamma_of_shape(big.conjugate()) * gamma_of_shape(lambda) * GaussRatio(num, den);
}

GaussRatio image_norm(const Partition& lambda, int i) {
  Partition big = add_to_row(lambda, i);
  return gamma_of_shape(big) * gamma_of_shape(big.conjugate());
}

InductionScalar induction_scalar(const Partition& lambda, int i, int l) {
  GaussRatio stretch({lambda.row(i) + 1}, {});
  GaussRatio m = lowest_vector_norm(lambda, i) * stretch / image_norm(lambda, i);
  return {m, cyclo_valuation(m, l)};
}

int left_count(const Partition& lambda, int i, int l) {
  Partition big = add_to_row(lambda, i);
  NCounts nc = n_counts(big, lambda, l);
  return -nc.left;
}

int duality_valuation(const Partition& lambda, int l) {
  return cyclo_valuation(hook_product(lambda), l);
}

}  // namespace specfock
