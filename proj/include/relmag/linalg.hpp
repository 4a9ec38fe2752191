#ifndef RELMAG_LINALG_HPP
#define RELMAG_LINALG_HPP

#include <relmag/matrix.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace relmag {

/// max_i sum_j |a_ij|
BigInt infinity_norm(const IntegerMatrix& a);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const IntegerMatrix& a);

/// Pivot columns of the echelon form, choosing the first nonzero entry in
/// column order. This is the lexicographically earliest independent column set.
std::vector<std::size_t> pivot_columns(const IntegerMatrix& a);

/// Basis of the null space, one vector per free column, each in primitive
/// integer form. Empty iff rank(a) == cols.
std::vector<RationalVector> nullspace_basis(const IntegerMatrix& a);

/// Bareiss determinant. Throws NonSquareMatrix.
BigInt determinant(const IntegerMatrix& m);

/// Determinant by Laplace expansion along successive rows, memoized over the
/// set of consumed columns and skipping zero entries. Independent of the
/// elimination route; intended for cross-checks on small or sparse matrices.
BigInt laplace_determinant(const IntegerMatrix& m);

/// x_i = det(A_i) / det(A). Throws NonSquareMatrix or SingularMatrix.
RationalVector cramer_solve(const IntegerMatrix& a, std::span<const BigRational> b);

/// Unique solution by fraction-free elimination and back substitution.
RationalVector elimination_solve(const IntegerMatrix& a, std::span<const BigRational> b);

/// Scale a nonzero rational vector to integers with gcd 1 and first nonzero
/// coordinate positive. Parallel vectors map to the same result.
IntegerVector primitive(std::span<const BigRational> v);

bool is_zero(std::span<const BigRational> v);

/// Row-stacks vectors into a matrix and returns its rank.
std::size_t rank_of_vectors(const std::vector<IntegerVector>& vectors);

} // namespace relmag

#endif // RELMAG_LINALG_HPP
