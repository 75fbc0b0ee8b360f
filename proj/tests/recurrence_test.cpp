#include <random>

#include <gtest/gtest.h>

#include "hopfdual/linalg.hpp"
#include "hopfdual/recurrence.hpp"

using namespace hopfdual;

namespace {

const Ring Q = Ring::rationals();

mpz_class factorial(long n)
{
    mpz_class f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// c_n = 1! 2! ... (n-1)!
mpz_class superfactorial(long n)
{
    mpz_class c = 1;
    for (long i = 1; i < n; ++i)
        c *= factorial(i);
    return c;
}

// det of the n x n Hilbert matrix is c_n^4 / c_{2n}
Scalar hilbert_determinant(long n)
{
    const mpz_class c = superfactorial(n);
    return Scalar(Q, c * c * c * c, superfactorial(2 * n));
}

Vector reciprocals(long count)
{
    Vector v;
    for (long n = 0; n < count; ++n)
        v.push_back(Scalar(Q, 1, n + 1));
    return v;
}

} // namespace

TEST(RecurrentSequence, GeometricAndDelta)
{
    const auto g = RecurrentSequence::geometric(Q, Scalar(Q, 3L));
    mpz_class p = 1;
    for (std::size_t n = 0; n < 12; ++n, p *= 3)
        EXPECT_EQ(g.at(n), Scalar(Q, p));
    const auto d = RecurrentSequence::delta(Q, 2);
    for (std::size_t n = 0; n < 8; ++n)
        EXPECT_EQ(d.at(n), Scalar(Q, n == 2 ? 1L : 0L));
}

TEST(RecurrentSequence, FibonacciOracle)
{
    const auto f = RecurrentSequence::fibonacci(Q);
    mpz_class a = 0, b = 1;
    for (std::size_t n = 0; n < 80; ++n) {
        EXPECT_EQ(f.at(n), Scalar(Q, a));
        const mpz_class t = a + b;
        a = b;
        b = t;
    }
}

TEST(RecurrentSequence, ShiftAndPrefix)
{
    const auto f = RecurrentSequence::fibonacci(Q);
    const auto s = f.shift(3);
    EXPECT_EQ(s.order(), 2u);
    for (std::size_t n = 0; n < 20; ++n)
        EXPECT_EQ(s.at(n), f.at(n + 3));
    const Vector p = f.prefix(6);
    ASSERT_EQ(p.size(), 6u);
    EXPECT_EQ(p[5], Scalar(Q, 5L));
}

TEST(RecurrentSequence, StoredClaimsAreReturnedAsStored)
{
    const RecurrentSequence s(Q, {Scalar(Q, 1L), Scalar(Q, 2L), Scalar(Q, 4L), Scalar(Q, 9L)},
                              {Scalar(Q, 2L)});
    EXPECT_EQ(s.at(3), Scalar(Q, 9L));
    EXPECT_EQ(s.at(4), Scalar(Q, 18L));
}

TEST(RecurrentSequence, ConstructionChecks)
{
    EXPECT_THROW(RecurrentSequence(Q, {Scalar(Q, 1L)}, {Scalar(Q, 1L), Scalar(Q, 1L)}),
                 std::invalid_argument);
    EXPECT_THROW(RecurrentSequence(Q, {Scalar(Ring::integers(), 1L)}, {Scalar(Q, 1L)}),
                 std::domain_error);
}

TEST(MinimalRecurrence, KnownSequences)
{
    const auto fib = minimal_recurrence(RecurrentSequence::fibonacci(Q).prefix(10), 4);
    ASSERT_TRUE(fib);
    EXPECT_EQ(*fib, (Vector{Scalar(Q, 1L), Scalar(Q, 1L)}));
    const auto d1 = minimal_recurrence(RecurrentSequence::delta(Q, 1).prefix(10), 4);
    ASSERT_TRUE(d1);
    EXPECT_EQ(d1->size(), 2u);
    const auto zero = minimal_recurrence(Q, zero_vector(Q, 8), 4);
    ASSERT_TRUE(zero);
    EXPECT_TRUE(zero->empty());
}

TEST(MinimalRecurrence, ReciprocalsHaveNoShortRecurrence)
{
    EXPECT_FALSE(minimal_recurrence(reciprocals(10), 4));
    // exactly 2 * 4 terms always admit an order-4 fit
    EXPECT_TRUE(minimal_recurrence(reciprocals(8), 4));
}

TEST(MinimalRecurrence, ShortPrefixRejected)
{
    EXPECT_THROW(minimal_recurrence(reciprocals(5), 3), std::invalid_argument);
}

TEST(Hankel, ReciprocalsGiveHilbertMatrices)
{
    const Vector terms = reciprocals(20);
    for (long n = 1; n <= 8; ++n) {
        const Matrix h = hankel_matrix(terms, n, n);
        EXPECT_EQ(h(n - 1, n - 1), Scalar(Q, 1, 2 * n - 1));
        EXPECT_EQ(determinant(h), hilbert_determinant(n)) << n;
        EXPECT_EQ(rank(h), static_cast<std::size_t>(n));
    }
    EXPECT_EQ(hankel_matrix(terms, 2, 3, 4)(1, 2), Scalar(Q, 1, 8));
}

TEST(RecurrenceProperty, RandomRecurrencesAreRecovered)
{
    std::mt19937_64 rng(31);
    auto draw = [&] { return Scalar(Q, static_cast<long>(rng() % 11) - 5); };
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + rng() % 4;
        Vector r, init;
        for (std::size_t i = 0; i < d; ++i) {
            r.push_back(draw());
            init.push_back(draw());
        }
        if (r.back().is_zero())
            r.back() = Scalar::one(Q);
        const RecurrentSequence s(Q, init, r);
        const Vector prefix = s.prefix(24);
        const auto found = minimal_recurrence(prefix, 4);
        ASSERT_TRUE(found);
        ASSERT_LE(found->size(), d);
        // the found recurrence regenerates the whole prefix
        const std::size_t e = found->size();
        const RecurrentSequence t(Q, Vector(prefix.begin(), prefix.begin() + e), *found);
        EXPECT_EQ(t.prefix(24), prefix);
        // the Hankel rank of the prefix equals the minimal order
        EXPECT_EQ(rank(hankel_matrix(prefix, 6, 6)), e);
    }
}
