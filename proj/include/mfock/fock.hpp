#pragma once

/// @file fock.hpp
/// @brief Extended monotone Fock space R (+) sum_n L^2(T_n, m_n) and the noise operators.
///
/// Vectors are finite: a scalar plus finitely many StratifiedFunctions. The
/// field operator <omega, h> decomposes as creation + neutral + annihilation.
/// For general Jacobi data the neutral part weights the top block by b_{l_1} and
/// the diagonal part of the annihilation by a_{l_1+1}; for constant data
/// (lambda, eta) these reduce to lambda A0 and A1- + eta A2-.

#include <map>
#include <span>
#include <vector>

#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"
#include "mfock/stratified.hpp"

namespace mfock {

class FockVector {
public:
    FockVector() = default;
    explicit FockVector(Rational scalar) : scalar_(std::move(scalar)) {}
    /// Single-degree vector.
    explicit FockVector(StratifiedFunction component);

    static FockVector vacuum() { return FockVector(Rational(1)); }

    [[nodiscard]] const Rational& scalar() const { return scalar_; }
    [[nodiscard]] const std::map<int, StratifiedFunction>& graded() const { return graded_; }
    /// Degree-n component, or an empty function of that degree.
    [[nodiscard]] StratifiedFunction component(int n) const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::size_t term_count() const;

    void set_scalar(Rational s) { scalar_ = std::move(s); }
    /// Adds into the degree slot of f.
    void add(const StratifiedFunction& f);
    /// Drops every component of degree > n.
    void truncate_above(int n);

    FockVector& operator+=(const FockVector& rhs);
    FockVector& operator-=(const FockVector& rhs);
    FockVector& operator*=(const Rational& c);
    friend FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
    friend FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }
    friend FockVector operator*(const Rational& c, FockVector v) { return v *= c; }

private:
    Rational scalar_;
    std::map<int, StratifiedFunction> graded_;
};

/// Vacuum Omega = (1, 0, 0, ...).
inline FockVector vacuum() { return FockVector::vacuum(); }

/// A+(h): new top block (0, l...) with leading factor h, plus the merge into the
/// top block (l_1 + 1, ...) with leading factor multiplied by h.
FockVector create(const PiecewisePolynomial& h, const FockVector& v);
/// B0(h): top-block factor times b_{l_1} h.
FockVector neutral_general(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v);
/// B-(h): tail-integral contraction plus a_{l_1+1}-weighted diagonal evaluation.
FockVector annihilate_general(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v);
/// A0(h): top-block factor times h.
FockVector neutral_meixner(const PiecewisePolynomial& h, const FockVector& v);
/// A1-(h): tail-integral contraction only.
FockVector annihilate1(const PiecewisePolynomial& h, const FockVector& v);
/// A2-(h): diagonal evaluation with weight 1; zero on degrees 0 and 1.
FockVector annihilate2(const PiecewisePolynomial& h, const FockVector& v);
/// <omega, h> = A+(h) + B0(h) + B-(h).
FockVector omega_apply(const JacobiData& nu, const PiecewisePolynomial& h, const FockVector& v);

/// <omega, h_1> ... <omega, h_n> Omega (h_n applied first).
FockVector chain_vector(const JacobiData& nu, std::span<const PiecewisePolynomial> hs);

Rational fock_inner(const JacobiData& nu, const FockVector& f, const FockVector& g);
Rational fock_norm2(const JacobiData& nu, const FockVector& f);
/// Every graded component vanishes Lebesgue-a.e. and the scalar is 0.
bool fock_is_zero(const FockVector& f);

/// tau(<omega,h_1> ... <omega,h_n>): scalar part of the chain vector.
/// Components that can no longer return to degree 0 are discarded on the way.
Rational moment(const JacobiData& nu, std::span<const PiecewisePolynomial> hs);

/// Degree-n component of the chain vector: the orthogonal polynomial
/// <P^(n)(omega), h_1 (x) ... (x) h_n> seen in the Fock space.
StratifiedFunction orthogonal_projection(const JacobiData& nu, std::span<const PiecewisePolynomial> hs);

/// Closed form of the same projection: on stratum (l_1..l_i) the single term
/// whose j-th factor is the product of the h's in block j. Uses no Jacobi data.
StratifiedFunction projection_formula(std::span<const PiecewisePolynomial> hs);

}  // namespace mfock
