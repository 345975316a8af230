#pragma once

#include <string>

#include "dilog/numeric/ball.hpp"
#include "dilog/numeric/precision.hpp"
#include "oracle_values.hpp"

namespace dilog::test {

// Oracle strings carry 60 significant digits; the last one is uncertain.
inline Ball oracle(const char* text) {
    const BigFloat mid = BigFloat::parse(text, 256);
    BigFloat scale(kRadiusBits);
    mpfr_abs(scale.get(), mid.get(), MPFR_RNDU);
    const BigFloat rel = BigFloat::parse("1e-58", kRadiusBits);
    return Ball(mid, add_up(mul_up(scale, rel), BigFloat::parse("1e-70", kRadiusBits)));
}

inline PrecisionBudget digits(int d) { return PrecisionBudget::for_digits(d); }

inline bool tight(const Ball& b, int d) { return b.radius() <= PrecisionBudget::for_digits(d).tolerance(); }

}  // namespace dilog::test
