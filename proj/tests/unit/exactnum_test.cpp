#include <gtest/gtest.h>

#include "dilog/exactnum/quadratic.hpp"
#include "dilog/exactnum/rational.hpp"
#include "support.hpp"

namespace dilog {
namespace {

TEST(Rational, ParsesFractionsAndExactDecimals) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
    EXPECT_EQ(Rational::parse("-1.1"), Rational(-11, 10));
    EXPECT_EQ(Rational::parse("1/3").to_string(), "1/3");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "abc", "1//2", "0.1.2", "1e5"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, PowAndSqrt) {
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(*Rational(49, 16).exact_sqrt(), Rational(7, 4));
    EXPECT_FALSE(Rational(2).exact_sqrt());
    EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Quadratic, ArithmeticInSqrt2) {
    const QuadraticElement u(3, 2, 2);  // 3 + 2 sqrt(2)
    const QuadraticElement w = u * u.conj();
    EXPECT_EQ(w, Rational(1));
    EXPECT_EQ(u.reciprocal(), QuadraticElement(3, -2, 2));
    EXPECT_EQ(u.pow(2), QuadraticElement(17, 12, 2));
    EXPECT_EQ(u.norm(), Rational(1));
}

TEST(Quadratic, ExactSign) {
    EXPECT_EQ(QuadraticElement(3, -2, 2).sign(), 1);   // 3 - 2.828...
    EXPECT_EQ(QuadraticElement(-3, 2, 2).sign(), -1);
    EXPECT_EQ(QuadraticElement(2, -1, 4).sign(), 0);   // perfect square radicand
    EXPECT_TRUE(QuadraticElement(1, 1, 4) == QuadraticElement(3, 0, 4));
}

TEST(Quadratic, MixedFieldsThrow) {
    EXPECT_THROW(QuadraticElement::root(2) + QuadraticElement::root(3), std::domain_error);
    EXPECT_THROW(QuadraticElement(0, 1, -2), std::domain_error);
    EXPECT_THROW(QuadraticElement::embed(0, 5).reciprocal(), std::domain_error);
}

TEST(Quadratic, ExactSqrtInField) {
    const auto r = exact_sqrt(QuadraticElement(3, 2, 2));  // (1 + sqrt 2)^2
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, QuadraticElement(1, 1, 2));
    EXPECT_EQ(*exact_sqrt(QuadraticElement::embed(5, 5)), QuadraticElement::root(5));
    EXPECT_FALSE(exact_sqrt(QuadraticElement::root(2)));
}

TEST(Quadratic, RealEnclosureMatchesOracle) {
    EXPECT_TRUE(quad_to_real(QuadraticElement::root(2), 256).overlaps(test::oracle(oracle::kSqrt2)));
    // Cancelling form: 3 - 2 sqrt(2).
    const Ball small = quad_to_real(QuadraticElement(3, -2, 2), 256);
    EXPECT_TRUE(small.overlaps(test::oracle(oracle::kThreeMinus2Sqrt2)));
    EXPECT_TRUE(test::tight(small, 60));
}

TEST(Quadratic, ToString) {
    EXPECT_EQ(QuadraticElement(1, -3, 2).to_string(), "1 - 3*sqrt(2)");
    EXPECT_EQ(QuadraticElement::root(5).to_string(), "sqrt(5)");
    EXPECT_EQ(QuadraticElement(Rational(1, 2), 0, 5).to_string(), "1/2");
}

}  // namespace
}  // namespace dilog
