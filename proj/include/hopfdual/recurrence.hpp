#ifndef HOPFDUAL_RECURRENCE_HPP
#define HOPFDUAL_RECURRENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfdual/matrix.hpp"

namespace hopfdual {

/*
 * A linear functional on the polynomial algebra R[x], f(x^n) = a_n, given by
 * stored initial terms and a recurrence of order d:
 *
 *     a_{n+d} = r_1 a_{n+d-1} + ... + r_d a_n.
 *
 * At least d initial terms are required. Terms stored beyond the first d are
 * claims that the recurrence must reproduce; they are returned as stored, so a
 * sequence whose claims contradict its recurrence is representable and is
 * rejected by the membership test rather than on construction. Order 0 with
 * all-zero initial terms is the zero functional.
 */
class RecurrentSequence {
public:
    RecurrentSequence(Ring ring, Vector initial, Vector recurrence);

    /// a_n = c^n.
    static RecurrentSequence geometric(Ring ring, const Scalar& ratio);
    /// a_n = delta_{n,k}.
    static RecurrentSequence delta(Ring ring, std::size_t k);
    /// 0, 1, 1, 2, 3, 5, ...
    static RecurrentSequence fibonacci(Ring ring);

    const Ring& ring() const { return ring_; }
    const Vector& initial() const { return initial_; }
    const Vector& recurrence() const { return recurrence_; }
    std::size_t order() const { return recurrence_.size(); }

    /// a_0, ..., a_{count-1}.
    Vector prefix(std::size_t count) const;
    Scalar at(std::size_t n) const;

    /// The action of x^k: (x^k . f)(x^n) = f(x^{n+k}).
    RecurrentSequence shift(std::size_t k = 1) const;

private:
    Ring ring_;
    Vector initial_;
    Vector recurrence_;
};

/// Hankel matrix H[i][j] = a_{offset+i+j} of the given size.
Matrix hankel_matrix(const Vector& terms, std::size_t rows, std::size_t cols,
                     std::size_t offset = 0);

/*
 * Least-order recurrence consistent with every term of the prefix, searching
 * orders 0..max_order; nullopt when none exists. When the order-d system is
 * underdetermined the solution with all free coefficients zero is returned.
 * Throws std::invalid_argument if prefix.size() < 2 * max_order.
 */
std::optional<Vector> minimal_recurrence(const Vector& prefix, std::size_t max_order);

/// Ring taken from the first element; the empty prefix needs it explicitly.
std::optional<Vector> minimal_recurrence(Ring ring, const Vector& prefix, std::size_t max_order);

} // namespace hopfdual

#endif
