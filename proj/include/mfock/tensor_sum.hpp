#pragma once

/// @file tensor_sum.hpp
/// @brief Finite sums of pure tensors h_1 (x) ... (x) h_n on R_+^n.

#include <compare>
#include <vector>

#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"

namespace mfock {

struct TensorTerm {
    Rational coefficient;
    std::vector<PiecewisePolynomial> factors;

    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
    friend auto operator<=>(const TensorTerm&, const TensorTerm&) = default;
};

/// Arity 0 is allowed and denotes a constant: every term has no factors and the
/// value is the sum of the coefficients.
class TensorSum {
public:
    explicit TensorSum(int arity = 0);

    static TensorSum pure(std::vector<PiecewisePolynomial> factors, const Rational& coefficient = Rational(1));
    static TensorSum constant(const Rational& value);

    /// Appends a term; dropped when the coefficient or any factor is zero.
    /// Throws DomainError when factors.size() != arity.
    void add_term(const Rational& coefficient, std::vector<PiecewisePolynomial> factors);

    [[nodiscard]] int arity() const { return arity_; }
    [[nodiscard]] const std::vector<TensorTerm>& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    /// Sum of coefficients; only meaningful for arity 0.
    [[nodiscard]] Rational scalar_value() const;

    TensorSum& operator+=(const TensorSum& rhs);
    TensorSum& operator-=(const TensorSum& rhs);
    TensorSum& operator*=(const Rational& c);
    friend TensorSum operator+(TensorSum lhs, const TensorSum& rhs) { return lhs += rhs; }
    friend TensorSum operator-(TensorSum lhs, const TensorSum& rhs) { return lhs -= rhs; }
    friend TensorSum operator*(const Rational& c, TensorSum f) { return f *= c; }

    friend bool operator==(const TensorSum&, const TensorSum&) = default;
    friend auto operator<=>(const TensorSum&, const TensorSum&) = default;

private:
    int arity_;
    std::vector<TensorTerm> terms_;
};

}  // namespace mfock
