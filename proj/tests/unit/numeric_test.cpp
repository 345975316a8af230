#include <gtest/gtest.h>

#include "dilog/numeric/ball.hpp"
#include "dilog/numeric/precision.hpp"
#include "support.hpp"

namespace dilog {
namespace {

TEST(Ball, ExactRationalIsEnclosed) {
    const Ball third = Ball::exact(Rational(1, 3), 128);
    EXPECT_TRUE(third.contains(Rational(1, 3)));
    EXPECT_FALSE(third.contains(Rational(1, 3) + Rational(1, 2).pow(100)));
    EXPECT_TRUE(Ball::exact(Rational(3, 8), 64).radius().is_zero());
}

TEST(Ball, ArithmeticContainsExactImage) {
    const Ball x = Ball::exact(Rational(1, 7), 200);
    const Ball y = Ball::exact(Rational(-5, 11), 200);
    EXPECT_TRUE((x + y).contains(Rational(1, 7) + Rational(-5, 11)));
    EXPECT_TRUE((x * y).contains(Rational(-5, 77)));
    EXPECT_TRUE((x / y).contains(Rational(-11, 35)));
    EXPECT_TRUE(sqr(y).contains(Rational(25, 121)));
}

TEST(Ball, DivisionByZeroEnclosureThrows) {
    EXPECT_THROW(Ball::exact(1, 64) / Ball(64), std::domain_error);
}

TEST(Ball, ElementaryFunctions) {
    const Ball pi = Ball::pi(256);
    EXPECT_TRUE((sqr(pi) / Rational(12)).overlaps(test::oracle(oracle::kPiSq12)));
    EXPECT_TRUE(sqrt(Ball::exact(2, 256)).overlaps(test::oracle(oracle::kSqrt2)));
    EXPECT_TRUE(log(exp(Ball::exact(Rational(1, 3), 256))).contains(Rational(1, 3)));
    EXPECT_TRUE((sqr(cosh(Ball::exact(1, 256))) - sqr(sinh(Ball::exact(1, 256)))).contains(Rational(1)));
    EXPECT_THROW(log(Ball::exact(-1, 64)), std::domain_error);
}

TEST(Ball, HullAndOverlap) {
    const Ball a = Ball::exact(Rational(1, 4), 64);
    const Ball b = Ball::exact(Rational(3, 4), 64);
    const Ball h = hull(a, b);
    EXPECT_TRUE(h.contains(a));
    EXPECT_TRUE(h.contains(b));
    EXPECT_TRUE(h.contains(Rational(1, 2)));
    EXPECT_FALSE(a.overlaps(b));
}

TEST(BigFloat, StringRoundTripIsExact) {
    const Ball pi = Ball::pi(199);
    const BigFloat back = BigFloat::parse(pi.midpoint().to_string(), 199);
    EXPECT_TRUE(back == pi.midpoint());
    EXPECT_EQ(BigFloat::pow2(-3).to_string(), "1.25e-1");
}

TEST(PrecisionBudget, InvariantAndTolerance) {
    const PrecisionBudget b = PrecisionBudget::for_digits(40);
    EXPECT_GE(b.working_bits, PrecisionBudget::min_bits(40));
    EXPECT_NO_THROW(b.validate());
    PrecisionBudget bad = b;
    bad.working_bits = 64;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_EQ(b.escalated().working_bits, 2 * b.working_bits);
    EXPECT_LE(b.tolerance(), BigFloat::parse("1e-40", 128));
}

}  // namespace
}  // namespace dilog
