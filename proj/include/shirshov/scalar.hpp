#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace shirshov {

/// Coefficient field of a theory: the rationals (modulus 0) or F_p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const { return modulus_ == 0; }
    constexpr std::uint32_t modulus() const { return modulus_; }

    std::string str() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    constexpr explicit Field(std::uint32_t p) : modulus_(p) {}

    std::uint32_t modulus_ = 0;
};

/// An exact field element. Rationals are kept canonical by GMP; F_p
/// elements are stored as their residue in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(long value, Field field = Field::rationals());
    Scalar(const mpq_class& value, Field field = Field::rationals());

    /// Parses "n" or "p/q" (optionally signed).
    static Scalar parse(const std::string& text, Field field);

    Field field() const { return field_; }
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    /// Sign as printed: residues of F_p count as positive.
    bool is_negative() const { return sgn(value_) < 0; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    std::string str() const;

private:
    void reduce();
    void check_field(const Scalar& other) const;

    mpq_class value_{0};
    Field field_{};
};

}  // namespace shirshov
