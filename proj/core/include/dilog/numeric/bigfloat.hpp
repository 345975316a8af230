#pragma once

#include <string>
#include <string_view>

#include <mpfr.h>

#include "dilog/exactnum/rational.hpp"

namespace dilog {

using Bits = mpfr_prec_t;

/// Precision of every radius and tail bound; these are upper bounds, so a
/// short mantissa rounded upward is enough.
inline constexpr Bits kRadiusBits = 64;

/// Owning value wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(Bits bits = kRadiusBits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, Bits bits, mpfr_rnd_t rnd);
    static BigFloat from_si(long value, Bits bits = kRadiusBits);
    /// Parses a decimal/scientific string, rounding to nearest at `bits`.
    static BigFloat parse(std::string_view text, Bits bits);
    /// 2^exponent, exact.
    static BigFloat pow2(long exponent, Bits bits = kRadiusBits);

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    Bits precision() const { return mpfr_get_prec(value_); }

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Exact conversion; every finite binary float is a dyadic rational.
    Rational to_rational() const;

    /// Scientific notation "d.ddd…e±x". digits == 0 prints enough digits to
    /// read the value back exactly at the same precision.
    std::string to_string(std::size_t digits = 0) const;

    friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_equal_p(a.value_, b.value_) != 0;
    }

private:
    mpfr_t value_;
};

/// Directed-rounding helpers at the precision of the first argument's result.
BigFloat add_up(const BigFloat& a, const BigFloat& b, Bits bits = kRadiusBits);
BigFloat mul_up(const BigFloat& a, const BigFloat& b, Bits bits = kRadiusBits);
BigFloat div_up(const BigFloat& a, const BigFloat& b, Bits bits = kRadiusBits);
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace dilog
