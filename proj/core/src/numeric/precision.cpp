#include "dilog/numeric/precision.hpp"

#include <cmath>
#include <stdexcept>

namespace dilog {

Bits PrecisionBudget::min_bits(int digits) {
    // log2(10) = 3.3219...; ceil via integer arithmetic to avoid float drift.
    const long scaled = static_cast<long>(digits) * 33220;
    return static_cast<Bits>((scaled + 9999) / 10000 + 32);
}

PrecisionBudget PrecisionBudget::for_digits(int digits, int guard_terms) {
    PrecisionBudget b;
    b.target_digits = digits;
    b.working_bits = min_bits(digits);
    b.guard_terms = guard_terms;
    b.validate();
    return b;
}

PrecisionBudget PrecisionBudget::escalated() const {
    PrecisionBudget b = *this;
    b.working_bits *= 2;
    return b;
}

BigFloat PrecisionBudget::tolerance() const {
    BigFloat t(kRadiusBits);
    mpfr_ui_pow_ui(t.get(), 10, static_cast<unsigned long>(target_digits), MPFR_RNDU);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDD);
    return t;
}

void PrecisionBudget::validate() const {
    if (target_digits <= 0) throw std::invalid_argument("precision budget: target_digits must be positive");
    if (guard_terms < 0) throw std::invalid_argument("precision budget: guard_terms must be nonnegative");
    if (working_bits < min_bits(target_digits)) {
        throw std::invalid_argument("precision budget: working_bits below ceil(digits*log2(10)) + 32");
    }
}

}  // namespace dilog
