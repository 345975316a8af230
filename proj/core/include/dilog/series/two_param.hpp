#pragma once

#include <cstdint>
#include <utility>

#include "dilog/exactnum/rational.hpp"

namespace dilog {

/// A pair (a, b) with 0 < a, b < 1 and a != b, checked exactly on
/// construction (std::invalid_argument otherwise).
class TwoParamInstance {
public:
    TwoParamInstance(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    /// (1 - max(a,b)) / (1 - min(a,b)); every summand ratio t_(n+1)/t_n is below it.
    Rational decay_ratio() const;
    /// |a - b| / (1 - min(a,b)), the limit of the larger of x_n, y_n.
    Rational limit() const;

private:
    Rational a_;
    Rational b_;
};

/// D_n(a,b) = (a(1-b)^(n+1) - b(1-a)^(n+1)) / (a - b).
Rational d_seq(const TwoParamInstance& inst, std::uint64_t n);

/// x_n = a(1-b)^n / D_n, y_n = b(1-a)^n / D_n.
std::pair<Rational, Rational> xy_seq(const TwoParamInstance& inst, std::uint64_t n);

/// One step of x' = x(1-y)/(1-xy), y' = y(1-x)/(1-xy).
std::pair<Rational, Rational> xy_step(const Rational& x, const Rational& y);

/// ab(a-b)^2 (1-a)^n (1-b)^n / (a(1-b)^(n+1) - b(1-a)^(n+1))^2.
Rational theorem_main_term(const TwoParamInstance& inst, std::uint64_t n);

/// D_n^2 - D_(n-1) D_(n+1) == ab(1-a)^n(1-b)^n, n >= 1.
bool cassini_check(const TwoParamInstance& inst, std::uint64_t n);
/// D_n - (1-b)D_(n-1) == b(1-a)^n and D_n - (1-a)D_(n-1) == a(1-b)^n, n >= 1.
bool shift_check(const TwoParamInstance& inst, std::uint64_t n);
/// xy_seq(n+1) == xy_step(xy_seq(n)).
bool recurrence_check(const TwoParamInstance& inst, std::uint64_t n);
/// theorem_main_term(n) == x_n y_n, and 0 < x_n, y_n, term < 1.
bool summand_check(const TwoParamInstance& inst, std::uint64_t n);
/// With r the decay ratio: |x_n - limit| < r^(n/2) and |y_n| < r^(n/2) for b < a,
/// mirrored for a < b.
bool limit_check(const TwoParamInstance& inst, std::uint64_t n);

}  // namespace dilog
