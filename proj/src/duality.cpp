#include "hopfdual/duality.hpp"

#include <stdexcept>

#include "hopfdual/linalg.hpp"

namespace hopfdual {

namespace {

SparseTensor mul_from_matrix(const Matrix& m, std::size_t n)
{
    SparseTensor t;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t ij = 0; ij < n * n; ++ij)
            if (!m(k, ij).is_zero())
                t.emplace(std::array<std::size_t, 3>{ij / n, ij % n, k}, m(k, ij));
    return t;
}

SparseTensor comul_from_matrix(const Matrix& m, std::size_t n)
{
    SparseTensor t;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t ij = 0; ij < n * n; ++ij)
            if (!m(ij, k).is_zero())
                t.emplace(std::array<std::size_t, 3>{k, ij / n, ij % n}, m(ij, k));
    return t;
}

} // namespace

AlgebraPresentation dual_algebra(const CoalgebraPresentation& c)
{
    const FreeModule& carrier = c.carrier();
    // C* (x) C* --Lambda--> (C (x) C)* --Delta*--> C*
    const LinearMap lambda = lambda_map(carrier, carrier);
    const Matrix mul = c.comultiplication_matrix().transpose() * lambda.matrix();
    // R --eps*--> C*, with R* identified with R
    const Matrix unit = c.counit_matrix().transpose();
    return AlgebraPresentation(carrier.dual(), mul_from_matrix(mul, c.rank()),
                               unit.column_vector(0));
}

CoalgebraPresentation dual_coalgebra_fgp(const AlgebraPresentation& a)
{
    const FreeModule& carrier = a.carrier();
    const LinearMap lambda = lambda_map(carrier, carrier);
    auto lambda_inv = inverse(lambda.matrix());
    if (!lambda_inv)
        throw std::domain_error("Lambda is not invertible on this carrier");
    // A* --m*--> (A (x) A)* --Lambda^-1--> A* (x) A*
    const Matrix comul = *lambda_inv * a.multiplication_matrix().transpose();
    const Matrix counit = a.unit_matrix().transpose();
    return CoalgebraPresentation(carrier.dual(), comul_from_matrix(comul, a.rank()),
                                 counit.row_vector(0));
}

AxiomReport verify_fgp_duality(const AlgebraPresentation& a, std::size_t witness_limit)
{
    const LinearMap ev = evaluation(a.carrier());
    const AlgebraPresentation double_dual = dual_algebra(dual_coalgebra_fgp(a));
    AxiomReport report = algebra_morphism_report(ev, a, double_dual, witness_limit);
    if (!inverse(ev.matrix())) {
        const Ring ring = a.ring();
        report.fail("evaluation invertible", {}, determinant(ev.matrix()), Scalar::one(ring));
    }
    return report;
}

Transposed transpose_forward(const LinearMap& phi, const AlgebraPresentation& a,
                             const CoalgebraPresentation& c)
{
    const AlgebraPresentation c_dual = dual_algebra(c);
    if (phi.domain().rank() != a.rank() || phi.codomain().rank() != c.rank())
        throw std::invalid_argument("transpose_forward: phi must map A into C*");
    if (!is_algebra_morphism(phi, a, c_dual))
        throw std::invalid_argument("transpose_forward: phi is not an algebra morphism");
    // C --ev--> C** --phi*--> A*
    const LinearMap hat = dual_map(phi).after(evaluation(c.carrier()));
    const LinearMap result(c.carrier(), a.carrier().dual(), hat.matrix());
    return {result, is_coalgebra_morphism(result, c, dual_coalgebra_fgp(a))};
}

Transposed transpose_backward(const LinearMap& psi, const CoalgebraPresentation& c,
                              const AlgebraPresentation& a)
{
    const CoalgebraPresentation a_dual = dual_coalgebra_fgp(a);
    if (psi.domain().rank() != c.rank() || psi.codomain().rank() != a.rank())
        throw std::invalid_argument("transpose_backward: psi must map C into A*");
    if (!is_coalgebra_morphism(psi, c, a_dual))
        throw std::invalid_argument("transpose_backward: psi is not a coalgebra morphism");
    // A --ev--> A** --psi*--> C*
    const LinearMap hat = dual_map(psi).after(evaluation(a.carrier()));
    const LinearMap result(a.carrier(), c.carrier().dual(), hat.matrix());
    return {result, is_algebra_morphism(result, a, dual_algebra(c))};
}

} // namespace hopfdual
