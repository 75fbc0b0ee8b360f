#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hopfdual/linalg.hpp"

using namespace hopfdual;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();

// Leibniz expansion, independent of the elimination code.
Scalar leibniz_determinant(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total = Scalar::zero(m.ring());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        Scalar term(m.ring(), inversions % 2 ? -1L : 1L);
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// k-th determinantal divisor: gcd of all k x k minors.
mpz_class determinantal_divisor(const Matrix& m, std::size_t k)
{
    std::vector<bool> rsel(m.rows()), csel(m.cols());
    std::fill(rsel.end() - static_cast<std::ptrdiff_t>(k), rsel.end(), true);
    mpz_class g = 0;
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.end() - static_cast<std::ptrdiff_t>(k), csel.end(), true);
        do {
            Matrix minor(m.ring(), k, k);
            std::size_t r2 = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rsel[r])
                    continue;
                std::size_t c2 = 0;
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (csel[c])
                        minor(r2, c2++) = m(r, c);
                ++r2;
            }
            mpz_class d = leibniz_determinant(minor).numerator();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    return g;
}

Matrix random_matrix(std::mt19937_64& rng, Ring ring, std::size_t rows, std::size_t cols, long spread)
{
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(ring, static_cast<long>(rng() % (2 * spread + 1)) - spread);
    return m;
}

} // namespace

TEST(Linalg, RankAndKernel)
{
    const Matrix m(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    EXPECT_EQ(rank(m), 2u);
    const Matrix k = kernel_basis(m);
    ASSERT_EQ(k.cols(), 1u);
    // (1, -2, 1) up to scale
    EXPECT_EQ(k(0, 0) * Scalar(Q, -2L), k(1, 0));
    EXPECT_EQ(k(0, 0), k(2, 0));
    EXPECT_TRUE((m * k).is_zero());
}

TEST(Linalg, SolveConsistentAndInconsistent)
{
    const Matrix m(Q, {{1, 1}, {2, 2}});
    EXPECT_FALSE(solve(m, Vector{Scalar(Q, 1L), Scalar(Q, 3L)}));
    const auto x = solve(m, Vector{Scalar(Q, 1L), Scalar(Q, 2L)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Scalar(Q, 1L));   // free variable set to zero
    EXPECT_EQ((*x)[1], Scalar(Q, 0L));
}

TEST(Linalg, Inverse)
{
    const auto inv = inverse(Matrix(Q, {{2, 1}, {1, 1}}));
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, Matrix(Q, {{1, -1}, {-1, 2}}));
    EXPECT_FALSE(inverse(Matrix(Q, {{1, 2}, {2, 4}})));
    EXPECT_FALSE(inverse(Matrix(Z, {{2, 0}, {0, 1}})));
    EXPECT_EQ(*inverse(Matrix(Z, {{2, 1}, {1, 1}})), Matrix(Z, {{1, -1}, {-1, 2}}));
    const Matrix perm(Q, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    EXPECT_EQ(*inverse(perm), perm.transpose());
}

TEST(Linalg, FieldRoutinesRejectIntegers)
{
    EXPECT_THROW(rank(Matrix(Z, {{1}})), std::domain_error);
}

TEST(Linalg, KroneckerIndexConvention)
{
    const Matrix a(Q, {{1, 2}, {3, 4}});
    const Matrix b(Q, {{0, 5}, {6, 7}});
    const Matrix k = kronecker(a, b);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q)
                    EXPECT_EQ(k(i * 2 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Linalg, SmithFormOfSmallExample)
{
    // d1 = gcd of entries = 2, d1 d2 = |det| = 8
    const Matrix m(Z, {{2, 4}, {6, 8}});
    const auto f = invariant_factors(m);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], 2);
    EXPECT_EQ(f[1], 4);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * s.D * s.V, m);
}

TEST(Linalg, FullColumnRankOverIntegers)
{
    EXPECT_TRUE(has_full_column_rank(Matrix(Z, {{2}, {4}})));
    EXPECT_FALSE(has_full_column_rank(Matrix(Z, {{1, 2}, {2, 4}})));
    EXPECT_FALSE(has_full_column_rank(Matrix(Z, {{1, 2, 3}})));
}

TEST(LinalgProperty, DeterminantMatchesLeibniz)
{
    std::mt19937_64 rng(11);
    for (Ring ring : {Q, Z, Ring::prime_field(7)})
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            const Matrix m = random_matrix(rng, ring, n, n, 4);
            EXPECT_EQ(determinant(m), leibniz_determinant(m)) << m;
        }
}

TEST(LinalgProperty, SmithFormAgreesWithDeterminantalDivisors)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        Matrix m = random_matrix(rng, Z, rows, cols, 6);
        if (trial % 4 == 0 && rows > 1)   // force a dependency
            for (std::size_t c = 0; c < cols; ++c)
                m(rows - 1, c) = m(0, c) * Scalar(Z, 2L);
        const SmithForm s = smith_normal_form(m);
        EXPECT_EQ(s.U * s.D * s.V, m);
        EXPECT_TRUE(determinant(s.U).is_unit());
        EXPECT_TRUE(determinant(s.V).is_unit());
        const auto f = invariant_factors(m);
        mpz_class product = 1;
        for (std::size_t k = 1; k <= f.size(); ++k) {
            EXPECT_EQ(s.D(k - 1, k - 1).numerator(), f[k - 1]);
            if (k > 1 && f[k - 1] != 0)
                EXPECT_EQ(f[k - 1] % f[k - 2], 0);
            product *= f[k - 1];
            EXPECT_EQ(product, determinantal_divisor(m, k)) << m;
        }
    }
}

TEST(LinalgProperty, KernelAndSolveOnRandomMatrices)
{
    std::mt19937_64 rng(3);
    for (Ring ring : {Q, Ring::prime_field(5)})
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            const Matrix m = random_matrix(rng, ring, rows, cols, 9);
            const Matrix k = kernel_basis(m);
            EXPECT_EQ(k.cols() + rank(m), cols);
            EXPECT_TRUE((m * k).is_zero());
            const Vector x = random_matrix(rng, ring, cols, 1, 5).column_vector(0);
            const Vector b = m.apply(x);
            const auto y = solve(m, b);
            ASSERT_TRUE(y);
            EXPECT_EQ(m.apply(*y), b);
        }
}

TEST(LinalgProperty, FractionFreeEliminationOnLargeEntries)
{
    // Entries near 10^12; rank decided against the Leibniz determinant.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(Q, 4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                m(r, c) = Scalar(Q, mpz_class(std::to_string(rng() % 2000000000000ULL)),
                                 mpz_class(1 + static_cast<long>(rng() % 5)));
        if (trial % 2)
            for (std::size_t c = 0; c < 4; ++c)
                m(3, c) = m(0, c) + m(1, c);
        EXPECT_EQ(rank(m) == 4, !leibniz_determinant(m).is_zero());
        const auto inv = inverse(m);
        if (inv)
            EXPECT_TRUE((m * *inv).is_identity());
    }
}

TEST(Linalg, ChangeRing)
{
    const Matrix m(Z, {{7, -1}});
    EXPECT_EQ(change_ring(m, Ring::prime_field(5)), Matrix(Ring::prime_field(5), {{2, 4}}));
    EXPECT_EQ(change_ring(m, Q), Matrix(Q, {{7, -1}}));
}
