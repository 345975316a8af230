#include "dilog/rogers/dilog.hpp"

#include <stdexcept>
#include <string>

namespace dilog {

namespace {

const Rational kHalf(1, 2);

void require_unit_interval(const Rational& x, const char* what) {
    if (x.sign() < 0 || x > Rational(1)) {
        throw std::domain_error(std::string(what) + ": argument " + x.to_string() + " outside [0, 1]");
    }
}

// sum_{n>=1} x^n / n^2 for exact 0 < x <= 1/2. The truncation remainder is
// bounded by x^(N+1) / ((N+1)^2 (1 - x)) and added to the radius.
Ball li2_series(const Rational& x, Bits bits) {
    const Ball xb = Ball::exact(x, bits);
    const BigFloat x_up = BigFloat::from_rational(x, kRadiusBits, MPFR_RNDU);
    const BigFloat one_minus_x_down = BigFloat::from_rational(Rational(1) - x, kRadiusBits, MPFR_RNDD);
    const BigFloat eps = BigFloat::pow2(-static_cast<long>(bits) - 2);

    Ball sum(bits);
    Ball power = xb;
    BigFloat power_up = x_up;
    for (unsigned long n = 1;; ++n) {
        sum += power / Ball::exact(Rational(Integer(Integer(n) * n)), bits);
        const BigFloat next_up = mul_up(power_up, x_up);
        const Integer m = Integer(n + 1) * (n + 1);
        const BigFloat denom = mul_up(BigFloat::from_rational(Rational(m), kRadiusBits, MPFR_RNDD),
                                      one_minus_x_down);
        BigFloat remainder(kRadiusBits);
        mpfr_div(remainder.get(), next_up.get(), denom.get(), MPFR_RNDU);
        if (remainder <= eps) return sum.widened(remainder);
        power *= xb;
        power_up = next_up;
    }
}

Ball li2_at(const Rational& x, Bits bits) {
    if (x.is_zero()) return Ball(bits);
    if (x == Rational(1)) return pi_squared_over(6, bits);
    if (x <= kHalf) return li2_series(x, bits);
    const Rational y = Rational(1) - x;
    return pi_squared_over(6, bits) - log(Ball::exact(x, bits)) * log(Ball::exact(y, bits)) - li2_series(y, bits);
}

Ball rogers_at(const Rational& x, Bits bits) {
    if (x.is_zero()) return Ball(bits);
    if (x == Rational(1)) return pi_squared_over(6, bits);
    if (x <= kHalf) {
        const Ball xb = Ball::exact(x, bits);
        // log(1-x) through log1p keeps full accuracy for tiny x.
        return li2_series(x, bits) + log(xb) * log1p(-xb) * kHalf;
    }
    // L(x) = pi^2/6 - log(x)log(1-x)/2 - Li2(1-x) after Euler's reflection.
    const Rational y = Rational(1) - x;
    const Ball yb = Ball::exact(y, bits);
    return pi_squared_over(6, bits) - log1p(-yb) * log(yb) * kHalf - li2_series(y, bits);
}

template <class Eval>
Ball with_escalation(const PrecisionBudget& budget, Eval&& eval) {
    budget.validate();
    const BigFloat tol = budget.tolerance();
    Bits bits = budget.working_bits;
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, bits *= 2) {
        Ball r = eval(bits);
        if (r.radius() <= tol) return r;
    }
    throw PrecisionFailure("radius 1e-" + std::to_string(budget.target_digits) + " not reached after " +
                           std::to_string(kMaxEscalations) + " precision doublings");
}

// Monotone increasing f on [0,1]: the image of [lo, hi] is [f(lo), f(hi)].
template <class PointEval>
Ball monotone_image(const Ball& x, const PrecisionBudget& budget, PointEval&& point) {
    if (x.upper().sign() < 0 || mpfr_cmp_ui(x.lower().get(), 1) > 0) {
        throw std::domain_error("argument enclosure " + x.to_string(10) + " lies outside [0, 1]");
    }
    Rational lo = x.lower().to_rational();
    Rational hi = x.upper().to_rational();
    if (lo.sign() < 0) lo = Rational(0);
    if (hi > Rational(1)) hi = Rational(1);
    const Ball at_lo = point(lo, budget);
    if (lo == hi) return at_lo;
    return hull(at_lo, point(hi, budget));
}

}  // namespace

Ball pi_squared_over(long divisor, Bits bits) { return sqr(Ball::pi(bits)) / Rational(divisor); }

Ball li2(const Rational& x, const PrecisionBudget& budget) {
    require_unit_interval(x, "li2");
    return with_escalation(budget, [&](Bits bits) { return li2_at(x, bits); });
}

Ball li2(const Ball& x, const PrecisionBudget& budget) {
    return monotone_image(x, budget, [](const Rational& q, const PrecisionBudget& b) { return li2(q, b); });
}

Ball rogers_l(const Rational& x, const PrecisionBudget& budget) {
    require_unit_interval(x, "rogers_l");
    return with_escalation(budget, [&](Bits bits) { return rogers_at(x, bits); });
}

Ball rogers_l(const Ball& x, const PrecisionBudget& budget) {
    return monotone_image(x, budget,
                          [](const Rational& q, const PrecisionBudget& b) { return rogers_l(q, b); });
}

Ball rogers_l(const QuadraticElement& x, const PrecisionBudget& budget) {
    if (x.sign() < 0 || (Rational(1) - x).sign() < 0) {
        throw std::domain_error("rogers_l: argument " + x.to_string() + " outside [0, 1]");
    }
    if (auto q = x.as_rational()) return rogers_l(*q, budget);
    return rogers_l(x.to_real(budget.working_bits + 16), budget);
}

Ball reflection_residual(const Rational& x, const PrecisionBudget& budget) {
    require_unit_interval(x, "reflection_residual");
    return rogers_l(x, budget) + rogers_l(Rational(1) - x, budget) - pi_squared_over(6, budget.working_bits);
}

Ball abel_residual(const Rational& x, const Rational& y, const PrecisionBudget& budget) {
    const Rational one(1);
    if (x.sign() <= 0 || x >= one || y.sign() <= 0 || y >= one) {
        throw std::domain_error("abel_residual: arguments must lie in the open interval (0, 1)");
    }
    const Rational xy = x * y;
    const Rational u = x * (one - y) / (one - xy);
    const Rational v = y * (one - x) / (one - xy);
    return rogers_l(x, budget) + rogers_l(y, budget) - rogers_l(xy, budget) - rogers_l(u, budget) -
           rogers_l(v, budget);
}

Ball abel_residual(const Ball& x, const Ball& y, const PrecisionBudget& budget) {
    const auto inside = [](const Ball& b) { return b.is_positive() && mpfr_cmp_ui(b.upper().get(), 1) < 0; };
    if (!inside(x) || !inside(y)) {
        throw std::domain_error("abel_residual: enclosures must lie inside (0, 1)");
    }
    const Rational one(1);
    const Ball xy = x * y;
    const Ball u = x * (one - y) / (one - xy);
    const Ball v = y * (one - x) / (one - xy);
    return rogers_l(x, budget) + rogers_l(y, budget) - rogers_l(xy, budget) - rogers_l(u, budget) -
           rogers_l(v, budget);
}

}  // namespace dilog
