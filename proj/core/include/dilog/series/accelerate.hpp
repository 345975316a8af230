#pragma once

#include <cstdint>
#include <optional>

#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/ball.hpp"

namespace dilog {

struct AnalyticTail {
    Ball value;
    /// Certified bound on the truncated part of the expansion.
    BigFloat remainder;
    /// Number of expansion coefficients used.
    std::uint64_t order = 0;
};

/// Closed-form evaluation of sum_{n>=N} L(t_n) for the two-parameter series,
/// t_n = ab(a-b)^2 (1-a)^n (1-b)^n / (a(1-b)^(n+1) - b(1-a)^(n+1))^2.
///
/// With a > b (the summand is symmetric), t_n = k u_n / (1-u_n)^2 where
/// u_n = s r^n, r = (1-a)/(1-b), s = b(1-a)/(a(1-b)), k = (a-b)^2/((1-a)(1-b)).
/// L(t) expands as sum_m c_m u^m - log(u)/2 sum_m beta_m u^m with
///   beta_m = (l1^m + l2^m - 2)/m,   l1,2 roots of x^2 - (2+k)x + 1,
/// so the tail reduces to geometric sums in r^m. The expansion is cut at the
/// first order whose certified remainder is <= tol.
///
/// Returns nullopt when l1 u_N >= 1 (the expansion does not converge there)
/// or when more than max_order coefficients would be needed.
std::optional<AnalyticTail> two_param_analytic_tail(const Rational& a, const Rational& b,
                                                    std::uint64_t first_omitted, const BigFloat& tol, Bits bits,
                                                    std::uint64_t max_order = 5000);

}  // namespace dilog
