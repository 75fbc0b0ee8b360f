#include <random>

#include <gtest/gtest.h>

#include "hopfdual/duality.hpp"
#include "hopfdual/families.hpp"
#include "hopfdual/finite_dual.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/verify.hpp"

using namespace hopfdual;

namespace {

const Ring Q = Ring::rationals();

std::vector<mpz_class> fibonacci_numbers(std::size_t count)
{
    std::vector<mpz_class> f{0, 1};
    while (f.size() < count)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

} // namespace

TEST(PolyalgMembership, GeometricIsGrouplike)
{
    const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::geometric(Q, Scalar(Q, 2L)));
    ASSERT_EQ(fd.rank(), 1u);
    EXPECT_EQ(fd.coalgebra().constant(0, 0, 0), Scalar::one(Q));
    EXPECT_EQ(fd.coalgebra().counit()[0], Scalar::one(Q));
    EXPECT_EQ(fd.value(0, 10), Scalar(Q, 1024L));
}

TEST(PolyalgMembership, DeltaOneIsPrimitiveOverTheCounit)
{
    // g0 = delta_1, g1 = x.g0 = delta_0: Delta g0 = g0 (x) g1 + g1 (x) g0, Delta g1 = g1 (x) g1
    const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::delta(Q, 1));
    ASSERT_EQ(fd.rank(), 2u);
    const CoalgebraPresentation& c = fd.coalgebra();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_EQ(c.constant(0, i, j), Scalar(Q, i + j == 1 ? 1L : 0L));
            EXPECT_EQ(c.constant(1, i, j), Scalar(Q, i == 1 && j == 1 ? 1L : 0L));
        }
    EXPECT_EQ(c.counit(), (Vector{Scalar(Q, 0L), Scalar(Q, 1L)}));
    EXPECT_TRUE(check_coalgebra_axioms(c).passed);
}

TEST(PolyalgMembership, FibonacciComultiplicationOracle)
{
    const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::fibonacci(Q));
    ASSERT_EQ(fd.rank(), 2u);
    const auto fib = fibonacci_numbers(32);
    // g_k(x^m) = F_{m+k}
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t m = 0; m <= 10; ++m)
            for (std::size_t n = 0; n <= 10; ++n) {
                Scalar s = Scalar::zero(Q);
                for (const auto& [key, c] : fd.coalgebra().comul())
                    if (key[0] == k)
                        s += c * Scalar(Q, fib[m + key[1]]) * Scalar(Q, fib[n + key[2]]);
                EXPECT_EQ(s, Scalar(Q, fib[k + m + n])) << k << " " << m << " " << n;
            }
    EXPECT_EQ(fd.coalgebra().counit(), (Vector{Scalar(Q, 0L), Scalar(Q, 1L)}));
    EXPECT_TRUE(check_coalgebra_axioms(fd.coalgebra()).passed);
    EXPECT_TRUE(check_induced_quotient(fd).passed);
}

TEST(PolyalgMembership, InconsistentClaimsRejected)
{
    const RecurrentSequence s(Q, {Scalar(Q, 1L), Scalar(Q, 2L), Scalar(Q, 4L), Scalar(Q, 9L)},
                              {Scalar(Q, 2L)});
    const MembershipReport r = polyalg_membership(s);
    EXPECT_FALSE(r.member);
    EXPECT_NE(r.diagnostic.find("a_3"), std::string::npos);
    EXPECT_THROW(orbit_coalgebra_polyalg(s), MembershipError);
}

TEST(PolyalgMembership, NonMinimalStoredRecurrence)
{
    // 2^n stored with a_{n+2} = 3 a_{n+1} - 2 a_n
    const RecurrentSequence s(Q, {Scalar(Q, 1L), Scalar(Q, 2L)}, {Scalar(Q, 3L), Scalar(Q, -2L)});
    const MembershipReport r = polyalg_membership(s);
    ASSERT_TRUE(r.member);
    EXPECT_EQ(r.minimal_order, 1u);
    EXPECT_EQ(r.minimal_recurrence, Vector{Scalar(Q, 2L)});
    EXPECT_EQ(orbit_coalgebra_polyalg(s).rank(), 1u);
}

TEST(PolyalgMembership, ZeroFunctional)
{
    const RecurrentSequence zero(Q, {}, {});
    EXPECT_TRUE(is_in_finite_dual_polyalg(zero));
    EXPECT_EQ(orbit_coalgebra_polyalg(zero).rank(), 0u);
}

TEST(PolyalgMembershipProperty, CorpusOrbitsSatisfyTheQuotientLaw)
{
    for (const auto& ns : recurrent_corpus()) {
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(ns.sequence);
        EXPECT_TRUE(check_coalgebra_axioms(fd.coalgebra()).passed) << ns.name;
        for (std::size_t deg : {4, 8, 12})
            EXPECT_TRUE(check_induced_quotient(fd, deg).passed) << ns.name << " " << deg;
    }
}

TEST(InducedQuotient, PerturbedComultiplicationFails)
{
    for (const auto& na : algebra_corpus(Q)) {
        const FiniteDualCoalgebra fd = finite_dual_findim(na.algebra);
        ASSERT_TRUE(check_induced_quotient(fd).passed) << na.name;
        const auto bad = fd.with_coalgebra(perturbed_comultiplication(fd.coalgebra(), {0, 0, 0}, Scalar::one(Q)));
        const AxiomReport r = check_induced_quotient(bad);
        ASSERT_FALSE(r.passed) << na.name;
        EXPECT_EQ(r.witnesses.front().law, "induced comultiplication");
    }
    const FiniteDualCoalgebra fib = orbit_coalgebra_polyalg(RecurrentSequence::fibonacci(Q));
    EXPECT_FALSE(check_induced_quotient(
                     fib.with_coalgebra(perturbed_comultiplication(fib.coalgebra(), {1, 0, 1}, Scalar(Q, -1L))))
                     .passed);
}

TEST(InducedQuotient, WrongCounitFails)
{
    const FiniteDualCoalgebra fd = finite_dual_findim(matrix_algebra(2, Q));
    const CoalgebraPresentation& c = fd.coalgebra();
    const AxiomReport r = check_induced_quotient(fd.with_coalgebra(
        CoalgebraPresentation(c.carrier(), c.comul(), unit_vector(Q, 4, 1))));
    ASSERT_FALSE(r.passed);
    EXPECT_EQ(r.witnesses.front().law, "induced counit");
}

TEST(OrbitModule, CharacterAndPointMass)
{
    const AlgebraPresentation a = monoid_algebra(cyclic_group_table(3), Q);
    // the trivial character spans a one-dimensional orbit
    const OrbitReport trivial = orbit_module(a, Vector(3, Scalar::one(Q)));
    EXPECT_TRUE(trivial.finitely_generated);
    EXPECT_EQ(trivial.basis.cols(), 1u);
    // a point mass generates all of A*
    EXPECT_EQ(orbit_module(a, unit_vector(Q, 3, 1)).basis.cols(), 3u);
    // (e_i . f)(e_j) = f(e_j e_i)
    const OrbitReport full = orbit_module(a, unit_vector(Q, 3, 1));
    EXPECT_EQ(rank(full.basis), 3u);
}

TEST(PhiMap, InvertibleCoalgebraMorphism)
{
    const auto corpus = algebra_corpus(Q);
    for (std::size_t i = 0; i < corpus.size(); i += 3)
        for (std::size_t j = 1; j < corpus.size(); j += 4) {
            const auto& a = corpus[i].algebra;
            const auto& b = corpus[j].algebra;
            if (a.rank() * b.rank() > 16)
                continue;
            const FiniteDualCoalgebra fa = finite_dual_findim(a), fb = finite_dual_findim(b);
            const LinearMap phi = phi_map(fa, fb);
            EXPECT_TRUE(inverse(phi.matrix()).has_value());
            const CoalgebraPresentation target = dual_coalgebra_fgp(tensor_algebra(a, b));
            EXPECT_TRUE(is_coalgebra_morphism(phi, tensor_coalgebra(fa.coalgebra(), fb.coalgebra()), target))
                << corpus[i].name << " " << corpus[j].name;
        }
}

TEST(Minimality, DualCoalgebraFactors)
{
    const AlgebraPresentation a = matrix_algebra(2, Q);
    const CoalgebraPresentation c = dual_coalgebra_fgp(a);
    EXPECT_TRUE(check_minimality(a, c, LinearMap(c.carrier(), a.carrier().dual(), Matrix::identity(Q, 4))));
}

TEST(Minimality, NonSubcoalgebraRejected)
{
    // divided powers placed inside the grouplike coalgebra Q^2* = (Q x Q)*
    const AlgebraPresentation a = dual_algebra(group_algebra_hopf(cyclic_group_table(2), Q).coalgebra());
    const CoalgebraPresentation c = divided_power_coalgebra(2, Q);
    EXPECT_FALSE(check_minimality(a, c, LinearMap(c.carrier(), a.carrier().dual(), Matrix::identity(Q, 2))));
    EXPECT_THROW(check_minimality(a, c, LinearMap(c.carrier(), a.carrier().dual(), Matrix(Q, {{1, 1}, {1, 1}}))),
                 std::invalid_argument);
}

TEST(KappaProperty, InjectiveOnCorpusAcrossProbeDegrees)
{
    for (Ring ring : {Q, Ring::prime_field(5), Ring::integers()})
        for (const auto& na : algebra_corpus(ring))
            EXPECT_TRUE(has_full_column_rank(kappa_probe(finite_dual_findim(na.algebra))));
    for (const auto& ns : recurrent_corpus()) {
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(ns.sequence);
        for (std::size_t deg = fd.rank(); deg <= 10; ++deg)
            EXPECT_TRUE(has_full_column_rank(kappa_probe(fd, deg))) << ns.name << " " << deg;
    }
}

TEST(KappaProperty, RandomRecurrencesGiveValidOrbits)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        Vector r, init;
        for (std::size_t i = 0; i < d; ++i) {
            r.push_back(Scalar(Q, static_cast<long>(rng() % 7) - 3));
            init.push_back(Scalar(Q, static_cast<long>(rng() % 7) - 3));
        }
        const RecurrentSequence s(Q, init, r);
        ASSERT_TRUE(is_in_finite_dual_polyalg(s));
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(s);
        EXPECT_LE(fd.rank(), d);
        EXPECT_TRUE(check_coalgebra_axioms(fd.coalgebra()).passed);
        EXPECT_TRUE(check_induced_quotient(fd, 10).passed);
    }
}
