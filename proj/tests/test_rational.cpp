#include <gtest/gtest.h>

#include "mfock/error.hpp"
#include "mfock/rational.hpp"

using mfock::Rational;

TEST(Rational, LowestTerms) {
    const Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, ParseAccepted) {
    EXPECT_EQ(Rational::parse("5/2"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejected) {
    for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "--1", "1/-2", " 1", "1 "}) {
        EXPECT_THROW(Rational::parse(bad), mfock::ParseError) << bad;
    }
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
    EXPECT_THROW(Rational(1) / Rational(0), mfock::DomainError);
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, Decimal) {
    EXPECT_EQ(Rational(5, 2).to_decimal(10), "2.5");
    EXPECT_EQ(Rational(1, 3).to_decimal(4), "0.3333");
    EXPECT_EQ(Rational(2, 3).to_decimal(4), "0.6667");
    EXPECT_EQ(Rational(-2, 3).to_decimal(2), "-0.67");
    EXPECT_EQ(Rational(0).to_decimal(5), "0");
    EXPECT_EQ(Rational(7).to_decimal(3), "7");
    EXPECT_EQ(Rational(1, 2).to_decimal(0), "1");
    EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0");
}
