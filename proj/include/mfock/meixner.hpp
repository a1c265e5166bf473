#pragma once

/// @file meixner.hpp
/// @brief Meixner-class machinery: expansions of orthogonal polynomials into
/// monomials, and the constructive check of the constant-coefficient
/// characterization.
///
/// A PolynomialExpansion stands for  constant + sum_i <omega^{(x)i}, f^(i)>.
/// Two independent recursions produce the expansion of an orthogonal polynomial
/// for constant Jacobi data (lambda, eta):
///  - r_expand applies the coefficient operators R_{i,n} to a TensorSum;
///  - cor35_step unrolls the recursion on lists of functions
///    P(h_1..h_n) = <omega,h_1> P(h_2..h_n) - lambda P(h_1 h_2, h_3..)
///                  - P(I(h_1,h_2,h_3), h_4..) - eta P(h_1 h_2 h_3, h_4..).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfock/fock.hpp"
#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"
#include "mfock/tensor_sum.hpp"

namespace mfock {

class PolynomialExpansion {
public:
    PolynomialExpansion() = default;

    static PolynomialExpansion monomial(const TensorSum& f);

    [[nodiscard]] const Rational& constant() const { return constant_; }
    [[nodiscard]] const std::map<int, TensorSum>& terms() const { return terms_; }
    /// Degree-i tensor sum (empty if absent).
    [[nodiscard]] TensorSum term(int i) const;

    /// Adds f into degree f.arity(); arity 0 adds to the constant.
    void add(const TensorSum& f);

    /// Left multiplication by <omega, h>: one extra leading tensor slot.
    [[nodiscard]] PolynomialExpansion times_omega(const PiecewisePolynomial& h) const;

    PolynomialExpansion& operator+=(const PolynomialExpansion& rhs);
    PolynomialExpansion& operator-=(const PolynomialExpansion& rhs);
    PolynomialExpansion& operator*=(const Rational& c);
    friend PolynomialExpansion operator+(PolynomialExpansion a, const PolynomialExpansion& b) { return a += b; }
    friend PolynomialExpansion operator-(PolynomialExpansion a, const PolynomialExpansion& b) { return a -= b; }
    friend PolynomialExpansion operator*(const Rational& c, PolynomialExpansion a) { return a *= c; }

private:
    Rational constant_;
    std::map<int, TensorSum> terms_;
};

/// f(t_1, t_1, t_2, ...). Throws DomainError for arity < 2.
TensorSum diag1(const TensorSum& f);
/// f(t_1, t_1, t_1, t_2, ...). Throws DomainError for arity < 3.
TensorSum diag2(const TensorSum& f);
/// integral_{t_1}^inf f(u, u, t_1, ...) du; for arity 2 the arity-0 sum holding
/// integral f(u, u) du. Throws DomainError for arity < 2.
TensorSum tail_contract(const TensorSum& f);
/// I(h_1, h_2, h_3)(t) = integral_t^inf h_1 h_2 du * h_3(t).
PiecewisePolynomial tail_product(const PiecewisePolynomial& h1, const PiecewisePolynomial& h2,
                                 const PiecewisePolynomial& h3);

/// sum_i <omega^{(x)i}, R_{i,n} f>. Throws DomainError for arity < 1.
PolynomialExpansion r_expand(const TensorSum& f, const Rational& lambda, const Rational& eta);

/// Expansion of <P^(n)(omega), h_1 |> ... |> h_n> by the list recursion.
PolynomialExpansion cor35_step(std::span<const PiecewisePolynomial> hs, const Rational& lambda,
                               const Rational& eta);

/// constant * Omega + sum over degrees and pure tensors of the chain vectors.
FockVector expansion_to_fock(const JacobiData& nu, const PolynomialExpansion& e);

struct DegreeReport {
    int degree = 0;
    bool pass = false;
    /// Sum over the tested words of the squared m-norm of the residual
    /// expansion_to_fock(r_expand(word)) - (degree-n projection).
    Rational residual_norm;
    /// First word (indices into the family) with nonzero residual, if any.
    std::vector<int> witness;
};

struct MeixnerReport {
    bool meixner = false;
    Rational lambda;
    Rational eta;
    std::vector<DegreeReport> degrees;

    /// Meixner data: every degree passed. Other data: some degree failed.
    [[nodiscard]] bool consistent() const;
    /// First failing degree, if any.
    [[nodiscard]] std::optional<int> first_failure() const;
};

/// For every n <= max_degree and every word of length n over the family,
/// compares expansion_to_fock(r_expand(word)) with the pure degree-n projection.
/// Non-constant data is tested with lambda = b_0, eta = a_1.
MeixnerReport meixner_verify(const JacobiData& nu, std::span<const PiecewisePolynomial> family, int max_degree);

}  // namespace mfock
