#pragma once

#include "hgp/binary_matrix.hpp"

namespace hgp {

/// Output of the strongly-lower-triangular Gaussian reduction of a binary
/// matrix h: a strongly lower triangular basis K of ker(h), its pivot rows
/// π(K), and the unit-vector basis F of a complement of the row space,
/// span(F) ⊕ rowspace(h) = full space.
struct TriangularKernel {
  std::vector<BitVector> kernel_basis;     // ordered by pivot, ascending
  std::vector<std::size_t> pivot_rows;     // 0-based, ascending
  std::vector<BitVector> complement_basis; // unit vectors at pivot_rows

  bool has_pivot(std::size_t pivot_row) const;
  /// Kernel basis vector whose pivot is the given 0-based row.
  const BitVector& basis_with_pivot(std::size_t pivot_row) const;
  /// Kernel basis as a matrix with one basis vector per column.
  BinaryMatrix as_matrix(std::size_t n) const;
};

/// Column-elimination Gaussian reduction that keeps the kernel basis
/// strongly lower triangular. The pivot search restarts from the first row
/// for every column. A zero matrix yields K = identity with every row a
/// pivot; a full-rank square matrix yields an empty kernel.
TriangularKernel strong_triangular_reduce(const BinaryMatrix& h);

/// True iff every column has a pivot (its lowest 1) with all entries below
/// zero, all pivots sit on distinct rows, and each pivot row is zero on
/// every column whose own pivot lies strictly lower. The last condition is
/// the order-free reading of the "reordering if necessary" clause: it is
/// what "entries to the right of the pivot are zero" becomes once columns
/// are sorted by ascending pivot row.
bool is_strongly_lower_triangular(const BinaryMatrix& m);

}  // namespace hgp
