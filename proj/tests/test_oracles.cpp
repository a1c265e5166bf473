// Reference values are fixed here by hand before the oracles are trusted.
#include <gtest/gtest.h>

#include "mfock/check/generators.hpp"
#include "mfock/check/oracles.hpp"
#include "mfock/error.hpp"
#include "mfock/fock.hpp"

using namespace mfock;
using namespace mfock::check;

namespace {

PiecewisePolynomial chi(Rational a, Rational b) { return PiecewisePolynomial::indicator(a, b); }

}  // namespace

TEST(Oracle, ClosedFormHandValues) {
    const PiecewisePolynomial h = chi(0, 1);
    const std::vector<PiecewisePolynomial> w{h, h, h, h};
    for (int lambda : {0, 1, -2}) {
        for (int eta : {0, 1, 3}) {
            const JacobiData nu = JacobiData::constant(Rational(lambda), Rational(eta), 4);
            EXPECT_EQ(closed_form_moment(nu, std::span(w).first(1)), Rational(0));
            EXPECT_EQ(closed_form_moment(nu, std::span(w).first(2)), Rational(1));
            EXPECT_EQ(closed_form_moment(nu, std::span(w).first(3)), Rational(lambda));
            EXPECT_EQ(closed_form_moment(nu, w), Rational(lambda * lambda + eta) + Rational(3, 2));
        }
    }
    EXPECT_THROW(closed_form_moment(JacobiData::constant(0, 1, 4), std::vector<PiecewisePolynomial>(5, h)),
                 DomainError);
}

TEST(Oracle, BoxIntegralHandValues) {
    const PiecewisePolynomial h = chi(0, 1);
    const PiecewisePolynomial t = PiecewisePolynomial::on_interval(Polynomial{0, 1}, 0, 1);
    EXPECT_EQ(box_simplex_integral({h}), Rational(1));
    EXPECT_EQ(box_simplex_integral({h, h}), Rational(1, 2));
    EXPECT_EQ(box_simplex_integral({h, h, h}), Rational(1, 6));
    // integral over 1 > t1 > t2 > 0 of t1 = 1/3; of t2 = 1/6
    EXPECT_EQ(box_simplex_integral({t, h}), Rational(1, 3));
    EXPECT_EQ(box_simplex_integral({h, t}), Rational(1, 6));
    EXPECT_EQ(box_simplex_integral({chi(1, 2), chi(0, 1)}), Rational(1));
    EXPECT_EQ(box_simplex_integral({chi(0, 1), chi(1, 2)}), Rational(0));
    // chi_[0,2) then chi_[1,3): t1 in [1,3), t2 in [0,2), t1 > t2: 4 - 1/2 = 7/2
    EXPECT_EQ(box_simplex_integral({chi(1, 3), chi(0, 2)}), Rational(7, 2));
    EXPECT_EQ(box_simplex_integral({PiecewisePolynomial(), h}), Rational(0));
    EXPECT_THROW(box_simplex_integral({h, h, h, h}), DomainError);
}

TEST(Oracle, BoxMatchesNestedTails) {
    Generator gen(20);
    for (int k = 0; k < 30; ++k) {
        std::vector<PiecewisePolynomial> fs;
        for (int j = 0; j <= k % 3; ++j) fs.push_back(gen.piecewise(4, 2));
        EXPECT_EQ(box_simplex_integral(fs), simplex_integral(fs)) << k;
    }
}

TEST(Oracle, ClosedFormMatchesChain) {
    Generator gen(3);
    for (int k = 0; k < 40; ++k) {
        const JacobiData nu = gen.jacobi(4);
        std::vector<PiecewisePolynomial> hs;
        for (int j = 0; j <= k % 4; ++j) hs.push_back(gen.step_function(5));
        EXPECT_EQ(closed_form_moment(nu, hs), moment(nu, hs)) << k;
    }
}

TEST(Oracle, EvaluationGridCoversBreakpoints) {
    const auto grid = evaluation_grid({chi(Rational(1, 3), 2)}, 4);
    EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
    EXPECT_NE(std::find(grid.begin(), grid.end(), Rational(1, 3)), grid.end());
    EXPECT_NE(std::find(grid.begin(), grid.end(), Rational(3)), grid.end());
}

TEST(Oracle, NuExpectation) {
    const JacobiData nu = JacobiData::constant(0, 1, 4);
    // E[s^4 - s^2] = 2 - 1
    EXPECT_EQ(nu_expectation(nu, Polynomial{0, 0, -1, 0, 1}), Rational(1));
}
