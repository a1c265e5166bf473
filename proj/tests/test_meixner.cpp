#include <gtest/gtest.h>

#include "mfock/error.hpp"
#include "mfock/meixner.hpp"

using namespace mfock;

namespace {

PiecewisePolynomial chi(Rational a, Rational b) { return PiecewisePolynomial::indicator(a, b); }
const PiecewisePolynomial kH = chi(0, 1);
const PiecewisePolynomial kRamp = PiecewisePolynomial::on_interval(Polynomial{0, 1}, 0, 2);
const PiecewisePolynomial kLate = chi(1, 3);
const Polynomial kOneMinusT{Rational(1), Rational(-1)};

/// Sum of coefficient * factor over an arity-1 tensor sum.
PiecewisePolynomial collapse(const TensorSum& f) {
    PiecewisePolynomial out;
    for (const auto& t : f.terms()) out = out + t.coefficient * t.factors[0];
    return out;
}

JacobiData semicircle(int depth = 6) { return JacobiData::constant(Rational(0), Rational(1), depth); }

}  // namespace

TEST(Meixner, Diag1) {
    EXPECT_EQ(diag1(TensorSum::pure({kH, kRamp})), TensorSum::pure({kH * kRamp}));
    EXPECT_TRUE(diag1(TensorSum::pure({chi(0, 1), chi(2, 3)})).empty());
    const TensorSum sum = TensorSum::pure({kH, kRamp}) + TensorSum::pure({kRamp, kLate}, Rational(3));
    EXPECT_EQ(collapse(diag1(sum)), kH * kRamp + Rational(3) * kRamp * kLate);
    EXPECT_THROW(diag1(TensorSum::pure({kH})), DomainError);
}

TEST(Meixner, Diag2) {
    EXPECT_EQ(diag2(TensorSum::pure({kH, kRamp, kLate})), TensorSum::pure({kH * kRamp * kLate}));
    EXPECT_TRUE(diag2(TensorSum(3)).empty());
    EXPECT_THROW(diag2(TensorSum::pure({kH, kH})), DomainError);
    const TensorSum sum = TensorSum::pure({kH, kH, kRamp, kH}) + TensorSum::pure({kLate, kLate, kLate, kRamp});
    EXPECT_EQ(diag2(sum).arity(), 2);
    EXPECT_EQ(diag2(sum).terms().size(), 2u);
}

TEST(Meixner, TailContract) {
    const TensorSum c2 = tail_contract(TensorSum::pure({kH, kH}));
    EXPECT_EQ(c2.arity(), 0);
    EXPECT_EQ(c2.scalar_value(), Rational(1));
    const TensorSum c3 = tail_contract(TensorSum::pure({kH, kH, kH}));
    EXPECT_EQ(collapse(c3), PiecewisePolynomial::on_interval(kOneMinusT, 0, 1));
    EXPECT_TRUE(tail_contract(TensorSum(3)).empty());
    EXPECT_THROW(tail_contract(TensorSum::pure({kH})), DomainError);
}

TEST(Meixner, RExpandDegreeOne) {
    const PolynomialExpansion e = r_expand(TensorSum::pure({kRamp}), Rational(3), Rational(2));
    EXPECT_EQ(e.constant(), Rational(0));
    EXPECT_EQ(e.term(1), TensorSum::pure({kRamp}));
    EXPECT_EQ(e.terms().size(), 1u);
}

TEST(Meixner, RExpandDegreeTwo) {
    const Rational lambda(5, 2);
    const PolynomialExpansion e = r_expand(TensorSum::pure({kH, kRamp}), lambda, Rational(7));
    EXPECT_EQ(e.term(2), TensorSum::pure({kH, kRamp}));
    EXPECT_EQ(collapse(e.term(1)), -lambda * (kH * kRamp));
    EXPECT_EQ(e.constant(), -(kH * kRamp).integral());
}

TEST(Meixner, RExpandDegreeThree) {
    // Unrolling once: R_{1,3} = 1 (x) R_{0,2} - lambda R_{1,2} D - R_{1,1} I - eta R_{1,1} D2.
    // With lambda = 0, eta = 1 and h = chi_[0,1]: -(int h^2) h - (1-t) h - h = -(3 - t) h.
    const PolynomialExpansion e = r_expand(TensorSum::pure({kH, kH, kH}), Rational(0), Rational(1));
    EXPECT_EQ(e.term(3), TensorSum::pure({kH, kH, kH}));
    EXPECT_TRUE(e.term(2).empty());
    EXPECT_EQ(e.constant(), Rational(0));
    EXPECT_EQ(collapse(e.term(1)), PiecewisePolynomial::on_interval(Polynomial{-3, 1}, 0, 1));
}

TEST(Meixner, ExpansionToFock) {
    const JacobiData nu = semicircle();
    PolynomialExpansion one;
    one.add(TensorSum::constant(Rational(1)));
    EXPECT_TRUE(fock_is_zero(expansion_to_fock(nu, one) - vacuum()));
    const FockVector h = expansion_to_fock(nu, PolynomialExpansion::monomial(TensorSum::pure({kH})));
    EXPECT_TRUE(fock_is_zero(h - FockVector(restrict_to_simplex(TensorSum::pure({kH})))));
}

TEST(Meixner, ListRecursionMatches) {
    const std::vector<std::pair<Rational, Rational>> params{{0, 1}, {2, 1}, {1, 0}, {Rational(-1, 2), 3}};
    const std::vector<PiecewisePolynomial> hs{kH, kRamp, kLate, kH};
    for (const auto& [lambda, eta] : params) {
        const JacobiData nu = JacobiData::constant(lambda, eta, 6);
        for (std::size_t n = 1; n <= hs.size(); ++n) {
            const std::span<const PiecewisePolynomial> word(hs.data(), n);
            const PolynomialExpansion a = cor35_step(word, lambda, eta);
            const PolynomialExpansion b = r_expand(TensorSum::pure({word.begin(), word.end()}), lambda, eta);
            EXPECT_TRUE(fock_is_zero(expansion_to_fock(nu, a - b))) << "n = " << n;
            // Both equal the pure degree-n projection.
            const FockVector image = expansion_to_fock(nu, a);
            const FockVector projection(projection_formula(word));
            EXPECT_TRUE(fock_norm2(nu, image - projection).is_zero()) << "n = " << n;
        }
    }
    EXPECT_THROW(cor35_step({}, 0, 1), DomainError);
}

TEST(Meixner, VerifyPositive) {
    const std::vector<PiecewisePolynomial> family{kH};
    const MeixnerReport r = meixner_verify(semicircle(), family, 4);
    EXPECT_TRUE(r.meixner);
    ASSERT_EQ(r.degrees.size(), 4u);
    for (const auto& d : r.degrees) {
        EXPECT_TRUE(d.pass) << d.degree;
        EXPECT_TRUE(d.residual_norm.is_zero());
    }
    EXPECT_TRUE(r.consistent());
}

TEST(Meixner, VerifyNegative) {
    const JacobiData nu({0, 1, 0, 0, 0}, {1, 1, 1, 1});
    const std::vector<PiecewisePolynomial> family{kH};
    const MeixnerReport r = meixner_verify(nu, family, 4);
    EXPECT_FALSE(r.meixner);
    ASSERT_TRUE(r.first_failure().has_value());
    EXPECT_LE(*r.first_failure(), 3);
    const DegreeReport& d = r.degrees[static_cast<std::size_t>(*r.first_failure() - 1)];
    EXPECT_GT(d.residual_norm, Rational(0));
    EXPECT_EQ(d.witness, (std::vector<int>{0, 0, 0}));
    EXPECT_TRUE(r.consistent());
}

TEST(Meixner, VerifyPointMass) {
    const JacobiData nu = JacobiData::constant(Rational(2), Rational(0), 5);
    const std::vector<PiecewisePolynomial> family{kH, kRamp};
    const MeixnerReport r = meixner_verify(nu, family, 4);
    EXPECT_TRUE(r.meixner);
    EXPECT_EQ(r.eta, Rational(0));
    EXPECT_FALSE(r.first_failure().has_value());
}

TEST(Meixner, OffSimplexMonomial) {
    const JacobiData nu = semicircle();
    const std::vector<PiecewisePolynomial> hs{chi(0, 1), chi(1, 2), chi(2, 3)};
    EXPECT_TRUE(strat_is_zero(restrict_to_simplex(TensorSum::pure(hs))));
    const FockVector v = expansion_to_fock(nu, PolynomialExpansion::monomial(TensorSum::pure(hs)));
    EXPECT_TRUE(strat_is_zero(v.component(3)));
}
