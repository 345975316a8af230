#include "dilog/numeric/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilog {

namespace {

// Upper bound for the rounding error of a result rounded to nearest.
BigFloat ulp_of(const BigFloat& x) {
    if (x.is_zero() || !x.is_finite()) return BigFloat(kRadiusBits);
    return BigFloat::pow2(static_cast<long>(mpfr_get_exp(x.get())) - static_cast<long>(x.precision()));
}

BigFloat abs_up(const BigFloat& x) {
    BigFloat r(kRadiusBits);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
}

BigFloat abs_down(const BigFloat& x) {
    BigFloat r(kRadiusBits);
    mpfr_abs(r.get(), x.get(), MPFR_RNDD);
    return r;
}

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Ball apply_increasing(const Ball& x, MpfrUnary f) {
    const Bits bits = x.precision();
    const BigFloat lo = x.lower();
    const BigFloat hi = x.upper();
    BigFloat flo(bits), fhi(bits);
    f(flo.get(), lo.get(), MPFR_RNDD);
    f(fhi.get(), hi.get(), MPFR_RNDU);
    return Ball::from_endpoints(flo, fhi, bits);
}

}  // namespace

Ball::Ball(Bits bits) : mid_(bits), rad_(kRadiusBits) {}

Ball::Ball(BigFloat midpoint, BigFloat radius) : mid_(std::move(midpoint)), rad_(kRadiusBits) {
    if (radius.sign() < 0) throw std::domain_error("Ball: negative radius");
    mpfr_set(rad_.get(), radius.get(), MPFR_RNDU);
}

Ball Ball::exact(const Rational& q, Bits bits) {
    Ball b(bits);
    if (mpfr_set_q(b.mid_.get(), q.raw().get_mpq_t(), MPFR_RNDN) != 0) b.rad_ = ulp_of(b.mid_);
    return b;
}

Ball Ball::from_endpoints(const BigFloat& lo, const BigFloat& hi, Bits bits) {
    if (!lo.is_finite() || !hi.is_finite()) throw std::domain_error("Ball: non-finite endpoint");
    if (hi < lo) throw std::domain_error("Ball: inverted endpoints");
    Ball b(bits);
    mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
    BigFloat up(kRadiusBits), down(kRadiusBits);
    mpfr_sub(up.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_sub(down.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
    b.rad_ = max(up, down);
    if (b.rad_.sign() < 0) b.rad_ = BigFloat(kRadiusBits);
    return b;
}

Ball Ball::pi(Bits bits) {
    BigFloat lo(bits), hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return from_endpoints(lo, hi, bits);
}

BigFloat Ball::lower() const {
    BigFloat r(precision());
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

BigFloat Ball::upper() const {
    BigFloat r(precision());
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

BigFloat Ball::magnitude() const { return add_up(abs_up(mid_), rad_); }

bool Ball::contains(const Rational& q) const {
    return mpfr_cmp_q(lower().get(), q.raw().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(upper().get(), q.raw().get_mpq_t()) >= 0;
}

bool Ball::contains(const Ball& other) const {
    return lower() <= other.lower() && other.upper() <= upper();
}

bool Ball::overlaps(const Ball& other) const {
    return lower() <= other.upper() && other.lower() <= upper();
}

bool Ball::is_positive() const { return lower().sign() > 0; }
bool Ball::is_negative() const { return upper().sign() < 0; }

Ball Ball::widened(const BigFloat& error) const {
    if (error.sign() < 0) throw std::domain_error("Ball: negative widening");
    Ball b(*this);
    b.rad_ = add_up(rad_, error);
    return b;
}

Ball Ball::with_precision(Bits bits) const {
    Ball b(bits);
    b.rad_ = rad_;
    if (mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN) != 0) b.rad_ = add_up(b.rad_, ulp_of(b.mid_));
    return b;
}

std::string Ball::to_string(std::size_t digits) const {
    return mid_.to_string(digits) + " +/- " + rad_.to_string(3);
}

Ball Ball::operator-() const {
    Ball b(*this);
    mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
    return b;
}

Ball& Ball::operator+=(const Ball& rhs) {
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int inexact = mpfr_add(mid.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
    BigFloat rad = add_up(rad_, rhs.rad_);
    if (inexact != 0) rad = add_up(rad, ulp_of(mid));
    mid_ = std::move(mid);
    rad_ = std::move(rad);
    return *this;
}

Ball& Ball::operator-=(const Ball& rhs) { return *this += -rhs; }

Ball& Ball::operator*=(const Ball& rhs) {
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int inexact = mpfr_mul(mid.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
    BigFloat rad = add_up(add_up(mul_up(abs_up(mid_), rhs.rad_), mul_up(abs_up(rhs.mid_), rad_)),
                          mul_up(rad_, rhs.rad_));
    if (inexact != 0) rad = add_up(rad, ulp_of(mid));
    mid_ = std::move(mid);
    rad_ = std::move(rad);
    return *this;
}

Ball& Ball::operator/=(const Ball& rhs) {
    BigFloat denom_low(kRadiusBits);
    mpfr_sub(denom_low.get(), abs_down(rhs.mid_).get(), rhs.rad_.get(), MPFR_RNDD);
    if (denom_low.sign() <= 0) throw std::domain_error("Ball: division by an enclosure of zero");
    BigFloat mid(std::max(precision(), rhs.precision()));
    const int inexact = mpfr_div(mid.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
    BigFloat quotient_up(kRadiusBits);
    mpfr_div(quotient_up.get(), abs_up(mid_).get(), abs_down(rhs.mid_).get(), MPFR_RNDU);
    BigFloat rad = div_up(add_up(rad_, mul_up(quotient_up, rhs.rad_)), denom_low);
    if (inexact != 0) rad = add_up(rad, ulp_of(mid));
    mid_ = std::move(mid);
    rad_ = std::move(rad);
    return *this;
}

Ball sqr(const Ball& x) { return x * x; }

Ball pow(const Ball& x, unsigned long n) {
    Ball result = Ball::exact(1, x.precision());
    Ball base = x;
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1;
        if (n > 0) base = sqr(base);
    }
    return result;
}

Ball sqrt(const Ball& x) {
    if (x.lower().sign() < 0) throw std::domain_error("sqrt: enclosure reaches below zero");
    return apply_increasing(x, mpfr_sqrt);
}

Ball log(const Ball& x) {
    if (x.lower().sign() <= 0) throw std::domain_error("log: enclosure is not strictly positive");
    return apply_increasing(x, mpfr_log);
}

Ball log1p(const Ball& x) {
    if (mpfr_cmp_si(x.lower().get(), -1) <= 0) throw std::domain_error("log1p: enclosure reaches -1");
    return apply_increasing(x, mpfr_log1p);
}

Ball exp(const Ball& x) { return apply_increasing(x, mpfr_exp); }

Ball sinh(const Ball& x) { return apply_increasing(x, mpfr_sinh); }

Ball cosh(const Ball& x) {
    if (x.lower().sign() >= 0) return apply_increasing(x, mpfr_cosh);
    if (x.upper().sign() <= 0) return cosh(-x);
    const Bits bits = x.precision();
    BigFloat hi(bits);
    mpfr_cosh(hi.get(), x.magnitude().get(), MPFR_RNDU);
    return Ball::from_endpoints(BigFloat::from_si(1, bits), hi, bits);
}

Ball abs(const Ball& x) {
    if (x.lower().sign() >= 0) return x;
    if (x.upper().sign() <= 0) return -x;
    return Ball::from_endpoints(BigFloat(x.precision()), x.magnitude(), x.precision());
}

Ball hull(const Ball& a, const Ball& b) {
    const BigFloat alo = a.lower(), blo = b.lower();
    const BigFloat ahi = a.upper(), bhi = b.upper();
    return Ball::from_endpoints(alo < blo ? alo : blo, ahi < bhi ? bhi : ahi,
                                std::max(a.precision(), b.precision()));
}

}  // namespace dilog
