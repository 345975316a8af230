#pragma once

#include "dilog/exactnum/quadratic.hpp"
#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/ball.hpp"
#include "dilog/numeric/precision.hpp"

namespace dilog {

/// Li2(x) = sum_{n>=1} x^n / n^2 on [0, 1].
///
/// Exact inputs are summed directly for x <= 1/2 with the geometric
/// remainder x^(N+1) / ((N+1)^2 (1-x)) folded into the radius; larger x is
/// reduced through Euler's reflection Li2(x) + Li2(1-x) = pi^2/6 - log(x)log(1-x).
/// Enclosure inputs are handled through monotonicity at their endpoints.
///
/// The result radius is at most 10^-target_digits; the working precision is
/// doubled up to kMaxEscalations times to get there, after which
/// PrecisionFailure is thrown. Arguments outside [0, 1] raise std::domain_error.
Ball li2(const Rational& x, const PrecisionBudget& budget);
Ball li2(const Ball& x, const PrecisionBudget& budget);

/// Rogers dilogarithm L(x) = Li2(x) + log(x)log(1-x)/2 on (0, 1), with
/// L(0) = 0 and L(1) = pi^2/6. Same radius contract as li2().
Ball rogers_l(const Rational& x, const PrecisionBudget& budget);
Ball rogers_l(const Ball& x, const PrecisionBudget& budget);
/// Exact quadratic arguments are range-checked exactly before evaluation.
Ball rogers_l(const QuadraticElement& x, const PrecisionBudget& budget);

/// L(x) + L(1-x) - pi^2/6.
Ball reflection_residual(const Rational& x, const PrecisionBudget& budget);

/// L(x) + L(y) - L(xy) - L(x(1-y)/(1-xy)) - L(y(1-x)/(1-xy)) for 0 < x, y < 1.
Ball abel_residual(const Rational& x, const Rational& y, const PrecisionBudget& budget);
Ball abel_residual(const Ball& x, const Ball& y, const PrecisionBudget& budget);

/// pi^2 / divisor.
Ball pi_squared_over(long divisor, Bits bits);

}  // namespace dilog
