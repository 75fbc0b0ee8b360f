#ifndef HOPFDUAL_DUALITY_HPP
#define HOPFDUAL_DUALITY_HPP

#include "hopfdual/structures.hpp"

namespace hopfdual {

/// C* with multiplication Delta* o Lambda_{C,C} and unit eps*.
/// On the dual basis: c*[i][j][k] = d[k][i][j], unit = counit.
AlgebraPresentation dual_algebra(const CoalgebraPresentation& c);

/// A* with comultiplication Lambda_{A,A}^-1 o m* and counit e*.
/// On the dual basis: d*[k][i][j] = c[i][j][k], counit = unit.
/// Requires Lambda to be invertible, which holds for every finite-rank free carrier.
CoalgebraPresentation dual_coalgebra_fgp(const AlgebraPresentation& a);

/// Evaluation A -> A** is an algebra isomorphism onto
/// dual_algebra(dual_coalgebra_fgp(A)).
AxiomReport verify_fgp_duality(const AlgebraPresentation& a,
                               std::size_t witness_limit = kDefaultWitnessLimit);

struct Transposed {
    LinearMap map;
    bool morphism;   ///< the transposed map respects the dual structure
};

/*
 * The hom-set bijection Alg(A, C*) = Coalg(C, A*) for finite-rank free
 * carriers.
 *
 * transpose_forward: phi : A -> C* (algebra morphism) |-> phi^ = phi* o ev_C : C -> A*,
 * with verdict is_coalgebra_morphism(phi^, C, dual_coalgebra_fgp(A)).
 * Throws std::invalid_argument when phi is not an algebra morphism.
 */
Transposed transpose_forward(const LinearMap& phi, const AlgebraPresentation& a,
                             const CoalgebraPresentation& c);

/// psi : C -> A* (coalgebra morphism) |-> psi* o ev_A : A -> C*, with verdict
/// is_algebra_morphism(.., A, dual_algebra(C)).
Transposed transpose_backward(const LinearMap& psi, const CoalgebraPresentation& c,
                              const AlgebraPresentation& a);

} // namespace hopfdual

#endif
