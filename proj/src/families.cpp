#include "hopfdual/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfdual {

MultiplicationTable cyclic_group_table(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("cyclic group of order 0");
    MultiplicationTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return t;
}

MultiplicationTable symmetric_group_table(std::size_t n)
{
    if (n == 0 || n > 5)
        throw std::invalid_argument("symmetric group degree must be in 1..5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const std::size_t order = perms.size();
    MultiplicationTable t(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            std::vector<std::size_t> composed(n);
            for (std::size_t x = 0; x < n; ++x)
                composed[x] = perms[i][perms[j][x]];
            t[i][j] = static_cast<std::size_t>(
                std::find(perms.begin(), perms.end(), composed) - perms.begin());
        }
    return t;
}

MultiplicationTable left_zero_monoid_table()
{
    // 0 = identity, 1 = a, 2 = b
    return {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
}

MultiplicationTable max_monoid_table(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("max monoid of size 0");
    MultiplicationTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = std::max(i, j);
    return t;
}

AlgebraPresentation base_algebra(Ring ring)
{
    return AlgebraPresentation(FreeModule(ring, 1, {"1"}),
                               {{{0, 0, 0}, Scalar::one(ring)}}, {Scalar::one(ring)});
}

CoalgebraPresentation base_coalgebra(Ring ring)
{
    return CoalgebraPresentation(FreeModule(ring, 1, {"1"}),
                                 {{{0, 0, 0}, Scalar::one(ring)}}, {Scalar::one(ring)});
}

namespace {

std::vector<std::string> matrix_unit_labels(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            labels.push_back("E" + std::to_string(a) + std::to_string(b));
    return labels;
}

std::vector<std::string> power_labels(const std::string& stem, std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k)
        labels.push_back(stem + std::to_string(k));
    return labels;
}

} // namespace

AlgebraPresentation matrix_algebra(std::size_t n, Ring ring)
{
    if (n == 0)
        throw std::invalid_argument("matrix algebra of size 0");
    SparseTensor mul;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                mul.emplace(std::array<std::size_t, 3>{a * n + b, b * n + d, a * n + d},
                            Scalar::one(ring));
    Vector unit = zero_vector(ring, n * n);
    for (std::size_t a = 0; a < n; ++a)
        unit[a * n + a] = Scalar::one(ring);
    return AlgebraPresentation(FreeModule(ring, n * n, matrix_unit_labels(n)), std::move(mul),
                               std::move(unit));
}

CoalgebraPresentation comatrix_coalgebra(std::size_t n, Ring ring)
{
    if (n == 0)
        throw std::invalid_argument("comatrix coalgebra of size 0");
    SparseTensor comul;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                comul.emplace(std::array<std::size_t, 3>{i * n + j, i * n + k, k * n + j},
                              Scalar::one(ring));
    Vector counit = zero_vector(ring, n * n);
    for (std::size_t i = 0; i < n; ++i)
        counit[i * n + i] = Scalar::one(ring);
    return CoalgebraPresentation(FreeModule(ring, n * n, matrix_unit_labels(n)), std::move(comul),
                                 std::move(counit));
}

AlgebraPresentation truncated_polynomial_algebra(std::size_t n, Ring ring)
{
    if (n == 0)
        throw std::invalid_argument("truncated polynomial algebra of rank 0");
    SparseTensor mul;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; a + b < n; ++b)
            mul.emplace(std::array<std::size_t, 3>{a, b, a + b}, Scalar::one(ring));
    return AlgebraPresentation(FreeModule(ring, n, power_labels("x^", n)), std::move(mul),
                               unit_vector(ring, n, 0));
}

CoalgebraPresentation divided_power_coalgebra(std::size_t n, Ring ring)
{
    if (n == 0)
        throw std::invalid_argument("divided power coalgebra of rank 0");
    SparseTensor comul;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            comul.emplace(std::array<std::size_t, 3>{k, i, k - i}, Scalar::one(ring));
    return CoalgebraPresentation(FreeModule(ring, n, power_labels("d", n)), std::move(comul),
                                 unit_vector(ring, n, 0));
}

} // namespace hopfdual
