#pragma once

/// @file piecewise.hpp
/// @brief Compactly supported piecewise-polynomial functions on [0, inf).
///
/// A function is stored as breakpoints x_0 < x_1 < ... < x_m (x_0 >= 0) and
/// one polynomial per half-open interval [x_j, x_{j+1}); it vanishes on
/// [0, x_0) and on [x_m, inf). Point values at breakpoints are therefore
/// right-continuous.
///
/// Every constructed value is canonical: adjacent equal pieces are merged and
/// zero pieces at either end of the support are dropped, so two descriptions
/// of the same function compare equal with operator==. The zero function has
/// no breakpoints at all.

#include <compare>
#include <vector>

#include "mfock/polynomial.hpp"
#include "mfock/rational.hpp"

namespace mfock {

class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;

    /// Throws DomainError unless breakpoints are strictly increasing, start at
    /// or after 0, and pieces.size() + 1 == breakpoints.size() (or both empty).
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    /// chi_[a, b)
    static PiecewisePolynomial indicator(const Rational& a, const Rational& b);
    /// p on [a, b), zero elsewhere.
    static PiecewisePolynomial on_interval(const Polynomial& p, const Rational& a, const Rational& b);

    [[nodiscard]] const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    [[nodiscard]] const std::vector<Polynomial>& pieces() const { return pieces_; }
    [[nodiscard]] bool is_zero() const { return pieces_.empty(); }
    [[nodiscard]] int max_degree() const;

    /// Value at t >= 0. Throws DomainError for negative t.
    [[nodiscard]] Rational operator()(const Rational& t) const;
    /// The polynomial valid on the interval containing t (zero outside support).
    [[nodiscard]] const Polynomial& piece_at(const Rational& t) const;

    /// Integral over [0, inf).
    [[nodiscard]] Rational integral() const;
    /// t -> integral over [t, inf). Constant on [0, x_0], zero after x_m.
    [[nodiscard]] PiecewisePolynomial tail_integral() const;
    /// t -> f(t - u) for t >= u, zero before. Throws DomainError for u < 0.
    [[nodiscard]] PiecewisePolynomial shifted(const Rational& u) const;
    /// Piecewise derivative, ignoring jumps at breakpoints.
    [[nodiscard]] PiecewisePolynomial derivative() const;

    PiecewisePolynomial& operator*=(const Rational& c);

    friend PiecewisePolynomial operator+(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
    friend PiecewisePolynomial operator-(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
    /// Pointwise product.
    friend PiecewisePolynomial operator*(const PiecewisePolynomial& f, const PiecewisePolynomial& g);
    friend PiecewisePolynomial operator*(const Rational& c, PiecewisePolynomial f) { return f *= c; }
    friend PiecewisePolynomial operator*(PiecewisePolynomial f, const Rational& c) { return f *= c; }
    PiecewisePolynomial operator-() const;

    friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;
    friend auto operator<=>(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

private:
    void canonicalize();

    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

}  // namespace mfock
