#ifndef HOPFDUAL_FINITE_DUAL_HPP
#define HOPFDUAL_FINITE_DUAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hopfdual/recurrence.hpp"
#include "hopfdual/structures.hpp"

namespace hopfdual {

/// The polynomial algebra R[x] with basis 1, x, x^2, ...
struct PolynomialAlgebra {
    Ring ring;
};

/*
 * A finite dual A° presented as a coalgebra C together with the inclusion
 * kappa : C -> A*.
 *
 * Finite-rank ambient: kappa is an n x r matrix, column k holding the
 * coordinates of g_k in the dual basis of A*.
 * Polynomial ambient: g_k is a recurrent sequence, g_k(x^m) its m-th term.
 */
class FiniteDualCoalgebra {
public:
    using Ambient = std::variant<AlgebraPresentation, PolynomialAlgebra>;

    FiniteDualCoalgebra(AlgebraPresentation ambient, CoalgebraPresentation coalgebra,
                        Matrix kappa);
    FiniteDualCoalgebra(PolynomialAlgebra ambient, CoalgebraPresentation coalgebra,
                        std::vector<RecurrentSequence> functionals);

    bool polynomial() const { return std::holds_alternative<PolynomialAlgebra>(ambient_); }
    const Ambient& ambient() const { return ambient_; }
    const CoalgebraPresentation& coalgebra() const { return coalgebra_; }
    const Ring& ring() const { return coalgebra_.ring(); }
    std::size_t rank() const { return coalgebra_.rank(); }

    /// Finite-rank ambient only.
    const AlgebraPresentation& algebra() const;
    const Matrix& kappa() const;
    /// Polynomial ambient only.
    const std::vector<RecurrentSequence>& functionals() const { return functionals_; }

    /// g_k on the m-th basis element of the ambient (e_m or x^m).
    Scalar value(std::size_t k, std::size_t m) const;

    /// Same inclusion, different coalgebra structure on the same carrier.
    FiniteDualCoalgebra with_coalgebra(CoalgebraPresentation coalgebra) const;

private:
    Ambient ambient_;
    CoalgebraPresentation coalgebra_;
    Matrix kappa_;
    std::vector<RecurrentSequence> functionals_;
};

/// Raised when a functional turns out not to lie in the finite dual.
class MembershipError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// For finite rank A° = A*, presented as dual_coalgebra_fgp(A) with kappa = id.
FiniteDualCoalgebra finite_dual_findim(const AlgebraPresentation& a);

struct OrbitReport {
    bool finitely_generated = true;
    Matrix basis;                  ///< columns span A.f inside A*
    std::size_t truncation_bound;  ///< generators examined before the span closed
};

/// The orbit A.f of f in A* under (a.f)(b) = f(b a). Field coefficients only.
OrbitReport orbit_module(const AlgebraPresentation& a, const Vector& f);

struct MembershipReport {
    bool member = false;
    std::size_t minimal_order = 0;
    Vector minimal_recurrence;
    std::vector<std::size_t> hankel_ranks;   ///< ranks of the stabilization checks
    std::string diagnostic;                  ///< empty when member
};

/*
 * Whether f lies in R[x]°: the stored terms must agree with the stored
 * recurrence, the recurrence re-derived from a long prefix must not exceed the
 * stored order, and Hankel matrices just past that order must stay at its rank.
 */
MembershipReport polyalg_membership(const RecurrentSequence& f);
bool is_in_finite_dual_polyalg(const RecurrentSequence& f);

/*
 * The subcoalgebra of R[x]° generated by f: basis g_k = x^k . f for k below
 * the minimal order, comultiplication solved from
 *     g_k(x^{m+n}) = sum_{i,j} D[k][i][j] g_i(x^m) g_j(x^n)
 * on a probe grid and re-checked on a grid twice as large; eps(g_k) = g_k(1).
 * Throws MembershipError when f is not in the finite dual.
 */
FiniteDualCoalgebra orbit_coalgebra_polyalg(const RecurrentSequence& f);

inline constexpr std::size_t kDefaultProbeDegree = 8;

/// Values of the basis functionals on the probes, rows = probes, cols = g_k.
/// Finite rank: the probes are the basis of A and probe_degree is ignored.
/// Polynomial: the probes are 1, x, ..., x^probe_degree.
Matrix kappa_probe(const FiniteDualCoalgebra& fd, std::size_t probe_degree = kDefaultProbeDegree);

/*
 * Phi : A° (x) B° -> (A (x) B)° for finite-rank A, B, solved from
 *     kappa_{A(x)B} Phi = Lambda_{A,B} (kappa_A (x) kappa_B)
 * with the codomain finite_dual_findim(tensor_algebra(A, B)).
 */
LinearMap phi_map(const FiniteDualCoalgebra& fa, const FiniteDualCoalgebra& fb);

/// Lambda o (kappa (x) kappa) o Delta = m* o kappa and eps = e* o kappa on
/// the probe grid, plus injectivity of kappa on the probes.
AxiomReport check_induced_quotient(const FiniteDualCoalgebra& fd,
                                   std::size_t probe_degree = kDefaultProbeDegree,
                                   std::size_t witness_limit = kDefaultWitnessLimit);

/*
 * For a coalgebra C with injective iota : C -> A* making it a subcoalgebra
 * (the induced-quotient law holds for iota), true iff iota factors through
 * kappa_{A°}: every orbit A.iota(c_k) lies in the image of kappa_{A°} and the
 * factored map C -> A° is a coalgebra morphism.
 */
bool check_minimality(const AlgebraPresentation& a, const CoalgebraPresentation& c,
                      const LinearMap& iota);

} // namespace hopfdual

#endif
