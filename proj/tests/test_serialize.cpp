#include <gtest/gtest.h>

#include "mfock/check/generators.hpp"
#include "mfock/error.hpp"
#include "mfock/serialize.hpp"

using namespace mfock;

TEST(Serialize, RationalStrings) {
    EXPECT_EQ(encode(Rational(5, 2)).get<std::string>(), "5/2");
    EXPECT_EQ(encode(Rational(-3)).get<std::string>(), "-3");
    EXPECT_EQ(decode_rational(Json("7/14")), Rational(1, 2));
    EXPECT_EQ(decode_rational(Json(4)), Rational(4));
    EXPECT_THROW(decode_rational(Json(1.5)), ParseError);
    EXPECT_THROW(decode_rational(Json("1/0")), ParseError);
}

TEST(Serialize, PiecewiseLayout) {
    const PiecewisePolynomial f({0, Rational(1, 2), 2}, {Polynomial{1, -2}, Polynomial{3}});
    EXPECT_EQ(encode(f).dump(), R"({"breakpoints":["0","1/2","2"],"pieces":[["1","-2"],["3"]]})");
}

TEST(Serialize, PiecewiseRoundTrip) {
    check::Generator gen(7);
    for (int k = 0; k < 50; ++k) {
        const PiecewisePolynomial f = gen.piecewise(5, 3);
        const std::string text = encode(f).dump();
        const PiecewisePolynomial g = decode_piecewise(parse_json(text));
        EXPECT_EQ(g, f);
        EXPECT_EQ(encode(g).dump(), text);
    }
}

TEST(Serialize, PiecewiseRejected) {
    EXPECT_THROW(decode_piecewise(parse_json(R"({"breakpoints":["0"]})")), ParseError);
    EXPECT_THROW(decode_piecewise(parse_json(R"({"breakpoints":["1","0"],"pieces":[["1"]]})")), DomainError);
    EXPECT_THROW(decode_piecewise(parse_json(R"({"breakpoints":"0","pieces":[]})")), ParseError);
    EXPECT_THROW(parse_json("{not json"), ParseError);
}

TEST(Serialize, Jacobi) {
    const JacobiData nu({1, 2, 3}, {Rational(1, 2), 4});
    const JacobiData back = decode_jacobi(parse_json(encode(nu).dump()));
    EXPECT_EQ(back, nu);
    const JacobiData shorthand = decode_jacobi(parse_json(R"({"lambda":"1/2","eta":"3","depth":4})"));
    EXPECT_EQ(shorthand, JacobiData::constant(Rational(1, 2), Rational(3), 4));
    EXPECT_THROW(decode_jacobi(parse_json(R"({"b":["0"],"a":[],"depth":2})")), ParseError);
    EXPECT_THROW(decode_jacobi(parse_json(R"({"b":["0","0"],"a":["-1"],"depth":2})")), DomainError);
    EXPECT_THROW(decode_jacobi(parse_json(R"({"lambda":"0","depth":2})")), ParseError);
    EXPECT_THROW(decode_jacobi(parse_json(R"({"lambda":"0","eta":"1","depth":0})")), ParseError);
}

TEST(Serialize, StratifiedAndFock) {
    check::Generator gen(11);
    for (int k = 0; k < 10; ++k) {
        const FockVector v = gen.fock(3);
        const std::string text = encode(v).dump();
        const FockVector back = decode_fock(parse_json(text));
        EXPECT_EQ(encode(back).dump(), text);
        EXPECT_TRUE(fock_is_zero(back - v));
    }
    EXPECT_THROW(decode_stratified(parse_json(R"([{"composition":[1],"terms":[]}])"), 3), DomainError);
}

TEST(Serialize, MeixnerReport) {
    MeixnerReport r;
    r.meixner = false;
    r.lambda = Rational(0);
    r.eta = Rational(1);
    r.degrees.push_back({1, true, Rational(0), {}});
    r.degrees.push_back({2, false, Rational(3, 4), {0, 1}});
    EXPECT_EQ(encode(r).dump(),
              R"({"meixner":false,"lambda":"0","eta":"1","degrees":[{"degree":1,"status":"pass","residual_norm":"0"},)"
              R"({"degree":2,"status":"fail","residual_norm":"3/4","witness":[0,1]}]})");
}

TEST(Serialize, FunctionTable) {
    const auto table = decode_function_table(
        parse_json(R"({"h":{"breakpoints":["0","1"],"pieces":[["1"]]},"a":{"breakpoints":[],"pieces":[]}})"));
    ASSERT_EQ(table.size(), 2u);
    EXPECT_EQ(table.begin()->first, "a");
    EXPECT_TRUE(table.at("a").is_zero());
    EXPECT_THROW(decode_function_table(parse_json(R"({"x,y":{"breakpoints":[],"pieces":[]}})")), ParseError);
    EXPECT_THROW(decode_function_table(parse_json("[]")), ParseError);
}
