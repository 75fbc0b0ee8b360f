#include "hopfdual/scalar.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace hopfdual {

Ring Ring::prime_field(std::uint64_t p)
{
    if (p < 2 || p >= (std::uint64_t{1} << 63))
        throw std::invalid_argument("prime field modulus out of range: " + std::to_string(p));
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    // GMP's test is deterministic (BPSW) below 2^64.
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return Ring(Kind::Prime, p);
}

Ring Ring::parse(std::string_view text)
{
    if (text == "Q")
        return rationals();
    if (text == "Z")
        return integers();
    if (text.starts_with("Fp:")) {
        std::uint64_t p = 0;
        auto digits = text.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw std::invalid_argument("bad prime in base ring '" + std::string(text) + "'");
        return prime_field(p);
    }
    throw std::invalid_argument("unknown base ring '" + std::string(text) + "'");
}

std::string Ring::to_string() const
{
    switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Integer: return "Z";
    case Kind::Prime: return "Fp:" + std::to_string(modulus_);
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Ring& ring) { return os << ring.to_string(); }

namespace {

mpz_class modulus_of(const Ring& ring)
{
    std::uint64_t p = ring.modulus();
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return z;
}

} // namespace

Scalar::Scalar(Ring ring, long value) : ring_(ring), value_(value) { normalize(); }

Scalar::Scalar(Ring ring, const mpz_class& value) : ring_(ring), value_(value) { normalize(); }

Scalar::Scalar(Ring ring, const mpq_class& value) : ring_(ring), value_(value)
{
    value_.canonicalize();
    normalize();
}

Scalar::Scalar(Ring ring, const mpz_class& numerator, const mpz_class& denominator) : ring_(ring)
{
    if (denominator == 0)
        throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
    normalize();
}

void Scalar::normalize()
{
    switch (ring_.kind()) {
    case Ring::Kind::Rational:
        break;
    case Ring::Kind::Integer:
        if (value_.get_den() != 1)
            throw std::domain_error("non-integral value " + value_.get_str() + " in Z");
        break;
    case Ring::Kind::Prime: {
        mpz_class p = modulus_of(ring_);
        mpz_class num = value_.get_num();
        mpz_class den = value_.get_den();
        if (den != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("denominator " + den.get_str() + " not invertible mod " +
                                        p.get_str());
            num *= inv;
        }
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        value_ = mpq_class(r);
        break;
    }
    }
}

void Scalar::require_same_ring(const Scalar& other) const
{
    if (!(ring_ == other.ring_))
        throw std::domain_error("mixed base rings " + ring_.to_string() + " and " +
                                other.ring_.to_string());
}

bool Scalar::is_unit() const
{
    if (is_zero())
        return false;
    if (ring_.kind() == Ring::Kind::Integer)
        return value_ == 1 || value_ == -1;
    return true;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.value_ = -r.value_;
    if (ring_.kind() == Ring::Kind::Prime)
        r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    require_same_ring(other);
    value_ += other.value_;
    if (ring_.kind() == Ring::Kind::Prime)
        normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    require_same_ring(other);
    value_ -= other.value_;
    if (ring_.kind() == Ring::Kind::Prime)
        normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    require_same_ring(other);
    value_ *= other.value_;
    if (ring_.kind() == Ring::Kind::Prime)
        normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    require_same_ring(other);
    if (other.is_zero())
        throw std::domain_error("division by zero");
    switch (ring_.kind()) {
    case Ring::Kind::Rational:
        value_ /= other.value_;
        break;
    case Ring::Kind::Integer: {
        mpz_class a = value_.get_num();
        mpz_class b = other.value_.get_num();
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw std::domain_error("inexact division " + a.get_str() + " / " + b.get_str() +
                                    " in Z");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        value_ = mpq_class(q);
        break;
    }
    case Ring::Kind::Prime: {
        mpz_class p = modulus_of(ring_);
        mpz_class inv;
        mpz_class b = other.value_.get_num();
        mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
        value_ *= inv;
        normalize();
        break;
    }
    }
    return *this;
}

Scalar Scalar::inverse() const { return one(ring_) / *this; }

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.ring_ == b.ring_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    a.require_same_ring(b);
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace hopfdual
