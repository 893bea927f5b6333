#pragma once

#include "specfock/laurent.hpp"
#include "specfock/partitions.hpp"

namespace specfock {

/// m_r^2 for removing the last node of row r: prod [H_ac] / [H_ac - 1] over a < r, c = lambda_r.
GaussRatio gram_branch_scalar(const Partition& lambda, int r);
int restriction_valuation(const Partition& lambda, int r, int l);

/// Product of [h] over every cell.
GaussRatio hook_product(const Partition& lambda);

/// gamma_{tm}: row hook quotient of m after deleting m+1..n from t.
GaussRatio gamma_step(const Tableau& t, int m);
/// gamma_t = prod_{m=2}^n gamma_{tm}; t must be standard.
GaussRatio gamma_of_tableau(const Tableau& t);
/// gamma_lambda = prod_i [lambda_i]!.
GaussRatio gamma_of_shape(const Partition& lambda);

/// lambda^i: lambda with one node added to row i (throws if not addable).
Partition add_to_row(const Partition& lambda, int i);

struct InductionScalar {
  GaussRatio ratio;
  int valuation = 0;
};

/// <*,*> of the lowest vector of the lambda^i layer, up to a power of q.
GaussRatio lowest_vector_norm(const Partition& lambda, int i);
/// <**,**> = gamma_{lambda^i} gamma_{(lambda^i)'}.
GaussRatio image_norm(const Partition& lambda, int i);
/// m = <*,*> [lambda_i + 1] / <**,**> and its cyclotomic valuation at l.
InductionScalar induction_scalar(const Partition& lambda, int i, int l);
/// Removable minus indent k-nodes strictly left of the new node (k its residue).
int left_count(const Partition& lambda, int i, int l);

/// Cyclotomic valuation of the hook product.
int duality_valuation(const Partition& lambda, int l);

}  // namespace specfock
