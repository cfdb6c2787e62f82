#include "shirshov/scalar.hpp"

#include <utility>

namespace shirshov {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime below 2^31: " + std::to_string(p));
    return Field{p};
}

std::string Field::str() const {
    return is_rational() ? "Q" : "Fp(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(long value, Field field) : value_(value), field_(field) { reduce(); }

Scalar::Scalar(const mpq_class& value, Field field) : value_(value), field_(field) {
    value_.canonicalize();
    reduce();
}

Scalar Scalar::parse(const std::string& text, Field field) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed coefficient '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in coefficient '" + text + "'");
    q.canonicalize();
    return Scalar(q, field);
}

// Maps the stored rational into the field: canonical form over Q, the
// residue num * den^{-1} mod p over F_p.
void Scalar::reduce() {
    if (field_.is_rational()) return;
    const mpz_class p = field_.modulus();
    mpz_class num = value_.get_num() % p;
    mpz_class den = value_.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes in " + field_.str());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    value_ = mpq_class(r);
}

// Integers and rationals coerce into F_p; two different primes never mix.
void Scalar::check_field(const Scalar& other) const {
    if (field_ != other.field_ && !field_.is_rational() && !other.field_.is_rational())
        throw std::domain_error("mixing coefficients of " + field_.str() + " and " + other.field_.str());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_field(rhs);
    if (field_.is_rational() && !rhs.field_.is_rational()) {
        field_ = rhs.field_;
        reduce();
    }
    if (rhs.field_ == field_) {
        value_ += rhs.value_;
    } else {
        value_ += Scalar(rhs.value_, field_).value_;
    }
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_field(rhs);
    if (field_.is_rational() && !rhs.field_.is_rational()) {
        field_ = rhs.field_;
        reduce();
    }
    if (rhs.field_ == field_) {
        value_ *= rhs.value_;
    } else {
        value_ *= Scalar(rhs.value_, field_).value_;
    }
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out = *this;
    out.value_ = 1 / value_;
    out.reduce();
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.value_ = -value_;
    out.reduce();
    return out;
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace shirshov
