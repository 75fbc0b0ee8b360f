#ifndef HOPFDUAL_LINALG_HPP
#define HOPFDUAL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hopfdual/matrix.hpp"

namespace hopfdual {

/*
 * Exact dense linear algebra.
 *
 * Over Q the forward elimination is fraction-free: rows are scaled to
 * primitive integer vectors and combined as p*row_i - a*row_r, followed by
 * content removal, so entries stay integral and small. Over F_p plain
 * Gaussian elimination is used. Only the final back-substitution divides.
 *
 * The field routines (rank, kernel_basis, solve, ...) reject Z with
 * std::domain_error; use smith_normal_form there.
 */

struct EchelonForm {
    Matrix reduced;                    ///< reduced row echelon form (pivots normalized to 1)
    std::vector<std::size_t> pivots;   ///< pivot column of row i, increasing
};

/// Reduced row echelon form over a field.
EchelonForm row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; one column per non-pivot column of m.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Free variables are set
/// to zero, so the returned solution is deterministic.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Solves m X = b column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Inverse of a square matrix; nullopt if singular (over Z: if not unimodular).
std::optional<Matrix> inverse(const Matrix& m);

/// Entrywise image in another ring (Z -> Q, Q -> F_p, integral Q -> Z, ...).
Matrix change_ring(const Matrix& m, Ring target);

/// Indices of a maximal set of linearly independent columns (leftmost first).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Determinant by Bareiss elimination; valid over Q, F_p and Z.
Scalar determinant(const Matrix& m);

/// M = U * D * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    Matrix U;
    Matrix D;
    Matrix V;
};

/// Integer input only (std::domain_error otherwise).
SmithForm smith_normal_form(const Matrix& m);

/// Diagonal of the Smith form (length min(rows, cols)), without tracking U, V.
std::vector<mpz_class> invariant_factors(const Matrix& m);

/// True iff the columns of m are linearly independent. Over Z this is decided
/// by the Smith form (no zero invariant factor among the first cols()).
bool has_full_column_rank(const Matrix& m);

/// Tensor product of linear maps; e_i (x) e_j is index i * (dim of second) + j.
Matrix kronecker(const Matrix& a, const Matrix& b);

} // namespace hopfdual

#endif
