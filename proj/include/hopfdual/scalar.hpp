#ifndef HOPFDUAL_SCALAR_HPP
#define HOPFDUAL_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfdual {

/*
 * Base ring tag. Every Scalar and every Matrix carries one; arithmetic between
 * different rings is rejected with std::domain_error.
 *
 *   Rational  - Q, arbitrary precision, lowest terms
 *   Prime     - F_p for a prime p < 2^63
 *   Integer   - Z, arbitrary precision
 */
class Ring {
public:
    enum class Kind : std::uint8_t { Rational, Prime, Integer };

    static Ring rationals() { return Ring(Kind::Rational, 0); }
    static Ring integers() { return Ring(Kind::Integer, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^63.
    static Ring prime_field(std::uint64_t p);

    /// Parses "Q", "Z" or "Fp:<prime>".
    static Ring parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_field() const { return kind_ != Kind::Integer; }
    /// 0 for Q and Z, p for F_p.
    std::uint64_t characteristic() const { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Ring& ring);

/*
 * An exact element of a base ring. Values are immutable; operators return
 * new values.
 *
 * Representation invariants:
 *   Q   : mpq in canonical form (positive denominator, lowest terms)
 *   F_p : integer residue in [0, p)
 *   Z   : integer (denominator 1)
 */
class Scalar {
public:
    /// Zero of Q. Mostly useful as a placeholder before assignment.
    Scalar() : ring_(Ring::rationals()), value_(0) {}
    Scalar(Ring ring, long value);
    Scalar(Ring ring, const mpz_class& value);
    /// Rational input is mapped into the ring: reduced mod p over F_p,
    /// rejected unless integral over Z.
    Scalar(Ring ring, const mpq_class& value);
    Scalar(Ring ring, const mpz_class& numerator, const mpz_class& denominator);

    static Scalar zero(Ring ring) { return Scalar(ring, 0L); }
    static Scalar one(Ring ring) { return Scalar(ring, 1L); }

    const Ring& ring() const { return ring_; }
    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_unit() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    /// Over Z the division must be exact (std::domain_error otherwise);
    /// division by zero throws std::domain_error in every ring.
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order on values of one ring (residues compare as integers in [0, p)).
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// "n" or "n/d".
    std::string to_string() const;

private:
    void normalize();
    void require_same_ring(const Scalar& other) const;

    Ring ring_;
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace hopfdual

#endif
