#pragma once

/// @file jacobi.hpp
/// @brief The Kolmogorov measure nu, encoded by the Jacobi coefficients of its
/// monic orthogonal polynomials.
///
/// The monic polynomials satisfy s p_k(s) = p_{k+1}(s) + b_k p_k(s) + a_k p_{k-1}(s)
/// with p_{-1} = 0, p_0 = 1. Only finitely many coefficients are stored: b_0..b_{K-1}
/// and a_1..a_{K-1}, where K is the depth. Any request beyond the depth throws
/// DepthError rather than truncating.

#include <optional>
#include <vector>

#include "mfock/polynomial.hpp"
#include "mfock/rational.hpp"

namespace mfock {

/// c_1, ..., c_K with c_k = a_0 a_1 ... a_{k-1}, a_0 := 1. c_k is the squared
/// norm of p_{k-1} in L^2(nu).
class NormSequence {
public:
    NormSequence() = default;
    explicit NormSequence(std::vector<Rational> values) : c_(std::move(values)) {}

    /// c_k for 1 <= k <= size(). Throws DepthError otherwise.
    [[nodiscard]] const Rational& operator[](int k) const;
    [[nodiscard]] int size() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] const std::vector<Rational>& values() const { return c_; }

    /// All-ones sequence of the given length (Lebesgue weights on every stratum).
    static NormSequence unit(int length);

private:
    std::vector<Rational> c_;
};

struct MeixnerParameters {
    Rational lambda;
    Rational eta;
    friend bool operator==(const MeixnerParameters&, const MeixnerParameters&) = default;
};

class JacobiData {
public:
    /// b = (b_0..b_{K-1}), a = (a_1..a_{K-1}). Throws DomainError if the sizes
    /// disagree, some a_k < 0, or a zero a_k is followed by a nonzero one.
    JacobiData(std::vector<Rational> b, std::vector<Rational> a);

    /// b_k = lambda, a_k = eta for every stored index.
    static JacobiData constant(const Rational& lambda, const Rational& eta, int depth);

    [[nodiscard]] int depth() const { return static_cast<int>(b_.size()); }
    /// b_k for 0 <= k < depth.
    [[nodiscard]] const Rational& b(int k) const;
    /// a_k for 1 <= k < depth; a_0 = 1 by convention.
    [[nodiscard]] const Rational& a(int k) const;
    [[nodiscard]] const std::vector<Rational>& b_values() const { return b_; }
    [[nodiscard]] const std::vector<Rational>& a_values() const { return a_; }

    /// p_k(s) by the three-term recurrence, 0 <= k <= depth.
    [[nodiscard]] Rational eval_p(int k, const Rational& s) const;
    /// p_k in monomial coefficients, 0 <= k <= depth.
    [[nodiscard]] Polynomial p_polynomial(int k) const;
    [[nodiscard]] NormSequence norms() const;
    /// m-th moment of nu, 0 <= m <= 2 depth - 2.
    [[nodiscard]] Rational nu_moment(int m) const;
    /// (lambda, eta) when all stored b_k agree and all stored a_k agree. For
    /// depth 1 no a_k is stored and eta is reported as 0.
    [[nodiscard]] std::optional<MeixnerParameters> is_meixner() const;

    friend bool operator==(const JacobiData&, const JacobiData&) = default;

private:
    std::vector<Rational> b_;
    std::vector<Rational> a_;
    Rational one_{1};
};

}  // namespace mfock
