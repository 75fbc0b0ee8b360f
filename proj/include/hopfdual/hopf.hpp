#ifndef HOPFDUAL_HOPF_HPP
#define HOPFDUAL_HOPF_HPP

#include <cstddef>

#include "hopfdual/structures.hpp"

namespace hopfdual {

/// An algebra and a coalgebra on the same carrier.
struct BialgebraPresentation {
    AlgebraPresentation algebra;
    CoalgebraPresentation coalgebra;

    BialgebraPresentation(AlgebraPresentation algebra, CoalgebraPresentation coalgebra);

    const FreeModule& carrier() const { return algebra.carrier(); }
    const Ring& ring() const { return algebra.ring(); }
    std::size_t rank() const { return algebra.rank(); }
};

struct HopfPresentation {
    BialgebraPresentation bialgebra;
    LinearMap antipode;

    HopfPresentation(BialgebraPresentation bialgebra, LinearMap antipode);

    const AlgebraPresentation& algebra() const { return bialgebra.algebra; }
    const CoalgebraPresentation& coalgebra() const { return bialgebra.coalgebra; }
    const FreeModule& carrier() const { return bialgebra.carrier(); }
    const Ring& ring() const { return bialgebra.ring(); }
    std::size_t rank() const { return bialgebra.rank(); }
};

/// Algebra and coalgebra axioms, then Delta : A -> A (x) A and eps : A -> R
/// as algebra morphisms.
AxiomReport check_bialgebra(const BialgebraPresentation& b,
                            std::size_t witness_limit = kDefaultWitnessLimit);

/// S * id = id * S = e o eps under convolution, and S : A -> A^op an algebra
/// morphism. Assumes the bialgebra itself passes.
AxiomReport check_antipode(const HopfPresentation& h,
                           std::size_t witness_limit = kDefaultWitnessLimit);

/// Both checks.
AxiomReport check_hopf(const HopfPresentation& h, std::size_t witness_limit = kDefaultWitnessLimit);

/// Algebra part dual_algebra(coalgebra), coalgebra part dual_coalgebra_fgp(algebra).
BialgebraPresentation dual_bialgebra_findim(const BialgebraPresentation& b);
/// Dual bialgebra with antipode S^T.
HopfPresentation dual_hopf_findim(const HopfPresentation& h);

/// R[G]: Delta g = g (x) g, eps g = 1, S g = g^-1. Throws
/// std::invalid_argument unless the table is a group.
HopfPresentation group_algebra_hopf(const MultiplicationTable& table, Ring ring,
                                    std::vector<std::string> labels = {});

/*
 * Sweedler's 4-dimensional Hopf algebra on 1, g, x, gx:
 *   g^2 = 1, x^2 = 0, xg = -gx,
 *   Delta g = g (x) g, Delta x = x (x) 1 + g (x) x, eps g = 1, eps x = 0.
 * Every structure constant, and S, comes from reducing words in g, x to
 * normal form. Throws std::invalid_argument in characteristic 2.
 */
HopfPresentation sweedler_h4(Ring ring);

bool is_commutative(const AlgebraPresentation& a);
bool is_cocommutative(const CoalgebraPresentation& c);

/// Algebra and coalgebra morphism.
AxiomReport bialgebra_morphism_report(const LinearMap& f, const BialgebraPresentation& b,
                                      const BialgebraPresentation& d,
                                      std::size_t witness_limit = kDefaultWitnessLimit);

/// R[Z/n] -> R^{Z/n}, g^a |-> (g^b |-> w^{ab}) for a primitive n-th root of
/// unity w in F_p. The codomain carries dual_hopf_findim(R[Z/n]).
/// Throws std::invalid_argument when F_p has no such root (or ring is not F_p).
LinearMap cyclic_character_map(std::size_t n, Ring ring);

} // namespace hopfdual

#endif
