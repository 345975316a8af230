#pragma once

#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/bigfloat.hpp"

namespace dilog {

/// Upper bound for sum_j L(t_j) over omitted terms with t_0 <= first_omitted
/// and t_(j+1) <= ratio_cap * t_j:
///
///   B = t0 * [ (pi^2/6 + ln(1/t0)) / (1-r) + r ln(1/r) / (1-r)^2 ],
///
/// from L(x) <= x (pi^2/6 + ln(1/x)) on (0, 1/2] summed over t0 r^j.
/// Evaluated with upward rounding. first_omitted must lie in [0, 1/2] and
/// ratio_cap in [0, 1); std::invalid_argument otherwise.
BigFloat tail_bound(const BigFloat& first_omitted, const BigFloat& ratio_cap);
BigFloat tail_bound(const Rational& first_omitted, const Rational& ratio_cap);

}  // namespace dilog
