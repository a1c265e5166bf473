#include <gtest/gtest.h>

#include "mfock/error.hpp"
#include "mfock/jacobi.hpp"

using mfock::JacobiData;
using mfock::Rational;

namespace {

JacobiData semicircle(int depth) { return JacobiData::constant(Rational(0), Rational(1), depth); }

}  // namespace

TEST(Jacobi, Validation) {
    EXPECT_THROW(JacobiData({0, 0}, {}), mfock::DomainError);
    EXPECT_THROW(JacobiData({0, 0}, {-1}), mfock::DomainError);
    EXPECT_THROW(JacobiData({0, 0, 0}, {0, 1}), mfock::DomainError);
    EXPECT_NO_THROW(JacobiData({0, 0, 0}, {1, 0}));
    EXPECT_NO_THROW(JacobiData({2}, {}));
}

TEST(Jacobi, EvalP) {
    const JacobiData nu = semicircle(4);
    EXPECT_EQ(nu.eval_p(0, Rational(17, 3)), Rational(1));
    EXPECT_EQ(nu.eval_p(2, Rational(2)), Rational(3));
    EXPECT_EQ(nu.eval_p(3, Rational(1)), Rational(-1));
    EXPECT_EQ(nu.p_polynomial(3).coefficients(), (std::vector<Rational>{0, -2, 0, 1}));
    EXPECT_THROW(nu.eval_p(5, Rational(0)), mfock::DepthError);
    EXPECT_THROW(nu.eval_p(-1, Rational(0)), mfock::DepthError);
}

TEST(Jacobi, Norms) {
    const auto ones = semicircle(5).norms();
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(ones[k], Rational(1));
    const auto geo = JacobiData::constant(Rational(1), Rational(3), 5).norms();
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(geo[k], Rational(3).pow(k - 1));
    const auto point = JacobiData::constant(Rational(2), Rational(0), 5).norms();
    EXPECT_EQ(point[1], Rational(1));
    for (int k = 2; k <= 5; ++k) EXPECT_EQ(point[k], Rational(0));
    EXPECT_THROW((void)ones[0], mfock::DepthError);
    EXPECT_THROW((void)ones[6], mfock::DepthError);
}

TEST(Jacobi, NormsScaleWithA) {
    const JacobiData nu({1, -1, 2, 0}, {Rational(1, 2), 3, 2});
    const JacobiData scaled({1, -1, 2, 0}, {Rational(1), 6, 4});
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(scaled.norms()[k], Rational(2).pow(k - 1) * nu.norms()[k]);
}

TEST(Jacobi, Moments) {
    const JacobiData nu = semicircle(3);
    EXPECT_EQ(nu.nu_moment(0), Rational(1));
    EXPECT_EQ(nu.nu_moment(1), Rational(0));
    EXPECT_EQ(nu.nu_moment(2), Rational(1));
    EXPECT_EQ(nu.nu_moment(4), Rational(2));
    EXPECT_THROW(nu.nu_moment(5), mfock::DepthError);
    // Point mass at 2: moments 2^m.
    const JacobiData point = JacobiData::constant(Rational(2), Rational(0), 3);
    EXPECT_EQ(point.nu_moment(3), Rational(8));
}

TEST(Jacobi, Meixner) {
    const auto m = semicircle(4).is_meixner();
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->lambda, Rational(0));
    EXPECT_EQ(m->eta, Rational(1));
    EXPECT_FALSE(JacobiData({0, 1, 0, 0}, {1, 1, 1}).is_meixner().has_value());
    const auto p = JacobiData::constant(Rational(2), Rational(0), 4).is_meixner();
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->lambda, Rational(2));
    EXPECT_EQ(p->eta, Rational(0));
}
