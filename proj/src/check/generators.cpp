#include "mfock/check/generators.hpp"

#include <algorithm>
#include <set>

namespace mfock::check {

int Generator::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Generator::rational(int bound, int max_den) {
    const int q = integer(1, max_den);
    return Rational(integer(-bound * q, bound * q), q);
}

namespace {

std::vector<Rational> sorted_points(Generator& g, int count) {
    std::set<Rational> pts;
    while (static_cast<int>(pts.size()) < count) {
        const int q = g.integer(1, 4);
        pts.insert(Rational(g.integer(0, 4 * q), q));
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

PiecewisePolynomial Generator::step_function(int max_breakpoints) {
    std::vector<Rational> bps = sorted_points(*this, integer(2, std::max(2, max_breakpoints)));
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) pieces.push_back(Polynomial::constant(Rational(integer(-3, 3))));
    return PiecewisePolynomial(std::move(bps), std::move(pieces));
}

PiecewisePolynomial Generator::piecewise(int max_breakpoints, int max_degree) {
    std::vector<Rational> bps = sorted_points(*this, integer(2, std::max(2, max_breakpoints)));
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        std::vector<Rational> coeffs;
        const int deg = integer(0, max_degree);
        for (int d = 0; d <= deg; ++d) coeffs.push_back(rational(2, 3));
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePolynomial(std::move(bps), std::move(pieces));
}

StratifiedFunction Generator::stratified(int degree, int max_terms) {
    StratifiedFunction f(degree);
    const int terms = integer(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        // Random composition of the degree: cut points chosen independently.
        std::vector<int> parts;
        int run = 0;
        for (int k = 1; k < degree; ++k) {
            if (integer(0, 1) == 1) {
                parts.push_back(run);
                run = 0;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::vector<PiecewisePolynomial> factors;
        for (std::size_t j = 0; j < parts.size(); ++j) factors.push_back(piecewise(3, 1));
        f.add_term(Composition(parts), rational(3, 2), std::move(factors));
    }
    return f;
}

FockVector Generator::fock(int max_degree, int max_terms) {
    FockVector v(rational(3, 3));
    for (int n = 1; n <= max_degree; ++n) {
        if (integer(0, 3) == 0) continue;
        v.add(stratified(n, max_terms));
    }
    return v;
}

JacobiData Generator::jacobi(int depth) {
    std::vector<Rational> b;
    std::vector<Rational> a;
    for (int k = 0; k < depth; ++k) b.push_back(rational(2, 2));
    for (int k = 1; k < depth; ++k) a.push_back(Rational(integer(1, 4), integer(1, 2)));
    return JacobiData(std::move(b), std::move(a));
}

}  // namespace mfock::check
