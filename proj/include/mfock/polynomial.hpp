#pragma once

/// @file polynomial.hpp
/// @brief Dense univariate polynomials over the rationals.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mfock/rational.hpp"

namespace mfock {

/// Coefficients in ascending degree, never with a trailing zero. The empty
/// coefficient list is the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// c * t^k
    static Polynomial monomial(const Rational& c, std::size_t k);

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coefficient(std::size_t k) const;

    [[nodiscard]] Rational operator()(const Rational& t) const;

    /// Antiderivative with zero constant term.
    [[nodiscard]] Polynomial antiderivative() const;
    [[nodiscard]] Polynomial derivative() const;
    /// Integral over [lo, hi].
    [[nodiscard]] Rational integrate(const Rational& lo, const Rational& hi) const;
    /// q(t) = p(t - u).
    [[nodiscard]] Polynomial translated(const Rational& u) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend auto operator<=>(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace mfock
