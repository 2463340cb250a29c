#pragma once

#include <cstddef>
#include <vector>

#include "packinglab/gram.hpp"
#include "packinglab/inversive.hpp"
#include "packinglab/matrix.hpp"

namespace packinglab {

/// V Q V^T for the rows V.
GramMatrix gram_matrix(const std::vector<InversiveVector>& rows);

/// Exact inverse of a full-rank Gram matrix; SingularGram otherwise.
GramMatrix dual_form(const GramMatrix& g);

bool is_rational_matrix(const GramMatrix& g);

/// Second coordinates of the rows, as a column.
std::vector<QuadExt> bends_vector(const std::vector<InversiveVector>& rows);

/// A = V M V^-1, acting on the left of the bends column: if the cluster rows V
/// are replaced by V M, the new bends are A b. SingularCluster when V is not
/// square and invertible.
Matrix bends_conjugate(const Matrix& m, const std::vector<InversiveVector>& rows);

Matrix stack_rows(const std::vector<InversiveVector>& rows);

struct VinbergVerdict {
  bool non_arithmetic = false;
  /// 0-based cycle i1 -> i2 -> ... -> iL -> i1 whose product failed.
  std::vector<std::size_t> witness;
  QuadExt product;
  std::size_t max_len = 0;
  std::size_t cycles_checked = 0;
};

/// Checks that the cyclic products of 2G over simple cycles of length at most
/// max_len are rational integers. Cycles are visited by length, then
/// lexicographically in their canonical rotation, so the reported witness is
/// the smallest one.
VinbergVerdict vinberg_test(const GramMatrix& g, std::size_t max_len = 8);

}  // namespace packinglab
