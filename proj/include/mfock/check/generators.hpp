#pragma once

/// @file generators.hpp
/// @brief Seeded random test data. All draws go through one std::mt19937_64
/// so a seed fixes every value.

#include <cstdint>
#include <random>

#include "mfock/fock.hpp"
#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/stratified.hpp"

namespace mfock::check {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi);
    /// p/q with |p| <= bound * q and 1 <= q <= max_den.
    Rational rational(int bound, int max_den);
    /// Step function with between 2 and max_breakpoints breakpoints in [0, 4],
    /// denominators up to 4, integer values in [-3, 3].
    PiecewisePolynomial step_function(int max_breakpoints = 6);
    /// Like step_function, with pieces of degree up to max_degree.
    PiecewisePolynomial piecewise(int max_breakpoints = 4, int max_degree = 2);
    /// Random stratified function of the given degree with up to max_terms terms.
    StratifiedFunction stratified(int degree, int max_terms = 2);
    /// Random scalar plus random components of degrees 1..max_degree.
    FockVector fock(int max_degree, int max_terms = 2);
    /// Random b_k in [-2, 2], a_k in (0, 2].
    JacobiData jacobi(int depth);

private:
    std::mt19937_64 rng_;
};

}  // namespace mfock::check
