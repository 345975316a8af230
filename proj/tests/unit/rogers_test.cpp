#include <gtest/gtest.h>

#include "dilog/rogers/dilog.hpp"
#include "support.hpp"

namespace dilog {
namespace {

using test::oracle;

TEST(Li2, OracleValues) {
    const PrecisionBudget b = test::digits(50);
    EXPECT_TRUE(li2(Rational(1, 2), b).overlaps(oracle(oracle::kLi2Half)));
    EXPECT_TRUE(li2(Rational(3, 4), b).overlaps(oracle(oracle::kLi2ThreeQuarters)));
    EXPECT_TRUE(li2(Rational(1), b).overlaps(oracle(oracle::kPiSq6)));
    EXPECT_TRUE(li2(Rational(0), b).contains_zero());
}

TEST(RogersL, OracleValuesAtRationals) {
    const PrecisionBudget b = test::digits(50);
    const std::vector<std::pair<Rational, const char*>> cases{
        {Rational(1, 2), oracle::kPiSq12},       {Rational(1, 3), oracle::kLOneThird},
        {Rational(1, 10), oracle::kLOneTenth},   {Rational(9, 10), oracle::kLNineTenths},
        {Rational(1, 1000), oracle::kLOneThousandth}, {Rational(1), oracle::kPiSq6},
    };
    for (const auto& [x, expected] : cases) {
        const Ball v = rogers_l(x, b);
        EXPECT_TRUE(v.overlaps(oracle(expected))) << x.to_string();
        EXPECT_TRUE(test::tight(v, 50)) << x.to_string();
    }
}

TEST(RogersL, GoldenRatioClosedForms) {
    const PrecisionBudget b = test::digits(50);
    const QuadraticElement inv_phi(Rational(-1, 2), Rational(1, 2), 5);
    EXPECT_TRUE(rogers_l(inv_phi, b).overlaps(oracle(oracle::kPiSq10)));
    EXPECT_TRUE(rogers_l(inv_phi * inv_phi, b).overlaps(oracle(oracle::kPiSq15)));
    EXPECT_TRUE(rogers_l(inv_phi.pow(4), b).overlaps(oracle(oracle::kLPhiMinus4)));
}

TEST(RogersL, BallArgument) {
    const PrecisionBudget b = test::digits(40);
    const Ball x = exp(Ball::exact(-2, 300));
    const Ball v = rogers_l(x, b);
    EXPECT_TRUE(v.overlaps(oracle(oracle::kLExpMinus2)));
    EXPECT_TRUE(test::tight(v, 40));
}

TEST(RogersL, DomainErrors) {
    const PrecisionBudget b = test::digits(20);
    EXPECT_THROW(rogers_l(Rational(-1, 2), b), std::domain_error);
    EXPECT_THROW(rogers_l(Rational(3, 2), b), std::domain_error);
    EXPECT_THROW(li2(Rational(2), b), std::domain_error);
    EXPECT_THROW(rogers_l(QuadraticElement(1, 1, 2), b), std::domain_error);
    EXPECT_THROW(rogers_l(Ball::exact(5, 64), b), std::domain_error);
    EXPECT_THROW(abel_residual(Rational(0), Rational(1, 2), b), std::domain_error);
}

TEST(RogersL, FunctionalEquations) {
    const PrecisionBudget b = test::digits(50);
    EXPECT_TRUE(reflection_residual(Rational(2, 7), b).contains_zero());
    EXPECT_TRUE(abel_residual(Rational(3, 10), Rational(7, 10), b).contains_zero());
    EXPECT_TRUE(abel_residual(Ball::exact(Rational(1, 5), 200), Ball::exact(Rational(4, 9), 200), b).contains_zero());
    // A wrong identity is not enclosed.
    EXPECT_FALSE((rogers_l(Rational(1, 3), b) - rogers_l(Rational(1, 4), b)).contains_zero());
}

TEST(RogersL, InvalidBudgetIsRejected) {
    PrecisionBudget b = test::digits(40);
    b.working_bits = 40;
    EXPECT_THROW(rogers_l(Rational(1, 2), b), std::invalid_argument);
}

}  // namespace
}  // namespace dilog
