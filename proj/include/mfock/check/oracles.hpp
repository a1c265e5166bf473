#pragma once

/// @file oracles.hpp
/// @brief Reference computations that share no code path with the core
/// operators. Used only by tests and the verify command.

#include <span>
#include <vector>

#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"

namespace mfock::check {

/// Mixed moment of length <= 4 from the closed forms
///   t1 = 0, t2 = int h1 h2, t3 = b0 int h1 h2 h3,
///   t4 = b0^2 int h1h2h3h4 + int h1 h4 T(h2 h3) + a1 int h1h2h3h4 + int h1h2 int h3h4.
/// Throws DomainError for longer words.
Rational closed_form_moment(const JacobiData& nu, std::span<const PiecewisePolynomial> hs);

/// Integral of h_1(t_1)...h_i(t_i) over t_1 > ... > t_i > 0 for i <= 3, by
/// splitting into boxes of the common breakpoint grid. Off-diagonal boxes
/// factorize; a run of k equal cells [x, y) is integrated upward from x by
/// polynomial antiderivatives. Throws DomainError for i > 3 or i == 0.
Rational box_simplex_integral(const std::vector<PiecewisePolynomial>& factors);

/// f(t) on a uniform grid with the given step count over [0, hi], plus every
/// breakpoint and every midpoint between consecutive grid points.
std::vector<Rational> evaluation_grid(const std::vector<PiecewisePolynomial>& fs, int steps);

/// Moment functional of nu applied to a polynomial, coefficient by coefficient.
Rational nu_expectation(const JacobiData& nu, const Polynomial& p);

}  // namespace mfock::check
