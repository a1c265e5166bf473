#pragma once

/// @file rational.hpp
/// @brief Exact rational scalar used throughout the calculus.
///
/// Values are always in lowest terms with a positive denominator; zero is
/// stored as 0/1. The textual form is "p/q", or "p" when q == 1, and parsing
/// that form round-trips bit-exactly.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mfock {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p/q" or "p" with optional leading '-'. Throws ParseError.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] std::string to_string() const;

    /// Decimal rendering rounded half away from zero to `digits` places,
    /// trailing zeros stripped. Display only.
    [[nodiscard]] std::string to_decimal(int digits) const;

    /// Integer power; negative exponents invert (zero base rejected).
    [[nodiscard]] Rational pow(int exponent) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mfock
