#include "dilog/series/tail.hpp"

#include <stdexcept>

namespace dilog {

namespace {

// -log(x) rounded up, for 0 < x <= 1.
BigFloat neg_log_up(const BigFloat& x) {
    BigFloat r(kRadiusBits);
    mpfr_log(r.get(), x.get(), MPFR_RNDD);
    mpfr_neg(r.get(), r.get(), MPFR_RNDU);
    return r;
}

}  // namespace

BigFloat tail_bound(const BigFloat& first_omitted, const BigFloat& ratio_cap) {
    if (!first_omitted.is_finite() || first_omitted.sign() < 0 || mpfr_cmp_d(first_omitted.get(), 0.5) > 0) {
        throw std::invalid_argument("tail_bound: first omitted term must lie in [0, 1/2]");
    }
    if (!ratio_cap.is_finite() || ratio_cap.sign() < 0 || mpfr_cmp_ui(ratio_cap.get(), 1) >= 0) {
        throw std::invalid_argument("tail_bound: ratio cap must lie in [0, 1)");
    }
    if (first_omitted.is_zero()) return BigFloat(kRadiusBits);

    BigFloat zeta2(kRadiusBits);
    mpfr_const_pi(zeta2.get(), MPFR_RNDU);
    mpfr_sqr(zeta2.get(), zeta2.get(), MPFR_RNDU);
    mpfr_div_ui(zeta2.get(), zeta2.get(), 6, MPFR_RNDU);

    BigFloat one_minus_r(kRadiusBits);
    mpfr_ui_sub(one_minus_r.get(), 1, ratio_cap.get(), MPFR_RNDD);

    BigFloat head = div_up(add_up(zeta2, neg_log_up(first_omitted)), one_minus_r);
    if (!ratio_cap.is_zero()) {
        BigFloat denom(kRadiusBits);
        mpfr_sqr(denom.get(), one_minus_r.get(), MPFR_RNDD);
        head = add_up(head, div_up(mul_up(ratio_cap, neg_log_up(ratio_cap)), denom));
    }
    return mul_up(first_omitted, head);
}

BigFloat tail_bound(const Rational& first_omitted, const Rational& ratio_cap) {
    return tail_bound(BigFloat::from_rational(first_omitted, kRadiusBits, MPFR_RNDU),
                      BigFloat::from_rational(ratio_cap, kRadiusBits, MPFR_RNDU));
}

}  // namespace dilog
