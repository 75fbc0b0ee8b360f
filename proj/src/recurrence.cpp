#include "hopfdual/recurrence.hpp"

#include <stdexcept>

#include "hopfdual/linalg.hpp"

namespace hopfdual {

RecurrentSequence::RecurrentSequence(Ring ring, Vector initial, Vector recurrence)
    : ring_(ring), initial_(std::move(initial)), recurrence_(std::move(recurrence))
{
    if (initial_.size() < recurrence_.size())
        throw std::invalid_argument("recurrence of order " + std::to_string(recurrence_.size()) +
                                    " needs at least that many initial terms, got " +
                                    std::to_string(initial_.size()));
    for (const auto& x : initial_)
        if (!(x.ring() == ring_))
            throw std::domain_error("initial term over a different ring");
    for (const auto& x : recurrence_)
        if (!(x.ring() == ring_))
            throw std::domain_error("recurrence coefficient over a different ring");
}

RecurrentSequence RecurrentSequence::geometric(Ring ring, const Scalar& ratio)
{
    return RecurrentSequence(ring, {Scalar::one(ring)}, {ratio});
}

RecurrentSequence RecurrentSequence::delta(Ring ring, std::size_t k)
{
    // k+1 zero coefficients: a_{n+k+1} = 0
    Vector initial = unit_vector(ring, k + 1, k);
    return RecurrentSequence(ring, std::move(initial), zero_vector(ring, k + 1));
}

RecurrentSequence RecurrentSequence::fibonacci(Ring ring)
{
    return RecurrentSequence(ring, {Scalar::zero(ring), Scalar::one(ring)},
                             {Scalar::one(ring), Scalar::one(ring)});
}

Vector RecurrentSequence::prefix(std::size_t count) const
{
    Vector a;
    a.reserve(count);
    const std::size_t d = order();
    for (std::size_t n = 0; n < count; ++n) {
        if (n < initial_.size()) {
            a.push_back(initial_[n]);
            continue;
        }
        Scalar next = Scalar::zero(ring_);
        for (std::size_t i = 1; i <= d; ++i)
            next += recurrence_[i - 1] * a[n - i];
        a.push_back(std::move(next));
    }
    return a;
}

Scalar RecurrentSequence::at(std::size_t n) const { return prefix(n + 1).back(); }

RecurrentSequence RecurrentSequence::shift(std::size_t k) const
{
    // keep at least d stored terms so the recurrence can continue
    const std::size_t keep = std::max(order(), initial_.size() > k ? initial_.size() - k : 0);
    Vector terms = prefix(k + keep);
    return RecurrentSequence(ring_, Vector(terms.begin() + static_cast<std::ptrdiff_t>(k), terms.end()),
                             recurrence_);
}

Matrix hankel_matrix(const Vector& terms, std::size_t rows, std::size_t cols, std::size_t offset)
{
    if (rows && cols && offset + rows + cols - 1 > terms.size())
        throw std::invalid_argument("not enough terms for the requested Hankel matrix");
    if (terms.empty())
        throw std::invalid_argument("Hankel matrix of an empty sequence");
    Matrix h(terms.front().ring(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            h(i, j) = terms[offset + i + j];
    return h;
}

std::optional<Vector> minimal_recurrence(Ring ring, const Vector& prefix, std::size_t max_order)
{
    if (prefix.size() < 2 * max_order)
        throw std::invalid_argument("prefix of length " + std::to_string(prefix.size()) +
                                    " is too short for order " + std::to_string(max_order) +
                                    " (need " + std::to_string(2 * max_order) + ")");
    const std::size_t len = prefix.size();
    for (std::size_t d = 0; d <= max_order; ++d) {
        if (d == 0) {
            if (is_zero_vector(prefix))
                return Vector{};
            continue;
        }
        // row n: sum_i r_i a_{n+d-i} = a_{n+d}, for n + d < len
        const std::size_t equations = len - d;
        Matrix m(ring, equations, d);
        Vector rhs;
        rhs.reserve(equations);
        for (std::size_t n = 0; n < equations; ++n) {
            for (std::size_t i = 1; i <= d; ++i)
                m(n, i - 1) = prefix[n + d - i];
            rhs.push_back(prefix[n + d]);
        }
        if (auto r = solve(m, rhs))
            return r;
    }
    return std::nullopt;
}

std::optional<Vector> minimal_recurrence(const Vector& prefix, std::size_t max_order)
{
    if (prefix.empty()) {
        if (max_order > 0)
            throw std::invalid_argument("empty prefix is too short for a positive order");
        return Vector{};
    }
    return minimal_recurrence(prefix.front().ring(), prefix, max_order);
}

} // namespace hopfdual
