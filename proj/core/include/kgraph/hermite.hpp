// Integer lattice tools: Hermite and Smith normal forms, lattice membership,
// kernels and eventual kernels. All arithmetic is exact.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kgraph/integer.hpp"

namespace kgraph {

/// Column-style Hermite normal form H = A * U with U unimodular.
///
/// The first `rank` columns of H are the nonzero ones. Column j has its
/// pivot at row pivot_rows[j] (strictly increasing), the pivot is positive,
/// entries above the pivot are zero and the entries to its left in the pivot
/// row lie in [0, pivot). The form depends only on the column lattice of A.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Row-style form H = U * A, the transpose of the column form of A^t.
/// Invariant under left multiplication of A by unimodular matrices.
HermiteForm row_hermite_normal_form(const IntMatrix& a);

/// D = U * A * V with U, V unimodular, D diagonal and d_1 | d_2 | ...
/// (nonnegative, zeros trailing).
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  IntVector invariant_factors;  // length min(rows, cols)

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Some x in Z^cols with A x = b, if one exists.
std::optional<IntVector> lattice_member(const IntMatrix& a, const IntVector& b);

/// Columns form a Z-basis of ker A (a saturated subgroup).
IntMatrix kernel_basis(const IntMatrix& a);

/// Z-basis of the eventual kernel union_m ker A^m of a square matrix.
struct StableKernel {
  IntMatrix basis;  // N x r, columns are basis vectors
  /// Least m >= 1 with ker A^m = ker A^{m+1}; 0 for the empty matrix.
  std::size_t stabilized_at = 0;

  std::size_t rank() const noexcept { return basis.cols(); }
  bool contains(const IntVector& x) const;
};

StableKernel stable_kernel(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

}  // namespace kgraph
