#ifndef HOPFDUAL_FAMILIES_HPP
#define HOPFDUAL_FAMILIES_HPP

#include <cstddef>

#include "hopfdual/structures.hpp"

namespace hopfdual {

// Multiplication tables.

/// Z/n under addition; element i is g^i.
MultiplicationTable cyclic_group_table(std::size_t n);
/// Symmetric group on n letters, elements in lexicographic order of their
/// one-line notation (index 0 is the identity); (s * t)(x) = s(t(x)).
MultiplicationTable symmetric_group_table(std::size_t n);
/// {1, a, b} with a, b left zeros: xy = x for x, y in {a, b}.
MultiplicationTable left_zero_monoid_table();
/// {0, ..., n-1} under max (identity 0).
MultiplicationTable max_monoid_table(std::size_t n);

// Algebras and coalgebras.

/// R as a rank-1 algebra.
AlgebraPresentation base_algebra(Ring ring);
/// Rank-1 coalgebra, Delta e = e (x) e, eps e = 1.
CoalgebraPresentation base_coalgebra(Ring ring);
/// M_n(R) on matrix units E_ab (index a * n + b), E_ab E_cd = delta_bc E_ad.
AlgebraPresentation matrix_algebra(std::size_t n, Ring ring);
/// Comatrix coalgebra: Delta e_ij = sum_k e_ik (x) e_kj, eps e_ij = delta_ij.
CoalgebraPresentation comatrix_coalgebra(std::size_t n, Ring ring);
/// R[x]/(x^n) on 1, x, ..., x^{n-1}.
AlgebraPresentation truncated_polynomial_algebra(std::size_t n, Ring ring);
/// Divided powers d_0..d_{n-1}: Delta d_k = sum_{i+j=k} d_i (x) d_j, eps d_k = delta_k0.
CoalgebraPresentation divided_power_coalgebra(std::size_t n, Ring ring);

} // namespace hopfdual

#endif
