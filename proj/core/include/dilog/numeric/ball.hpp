#pragma once

#include <string>

#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/bigfloat.hpp"

namespace dilog {

/// Midpoint-radius enclosure of a real number: the true value lies in
/// [midpoint - radius, midpoint + radius]. Every operation returns a
/// superset of the exact image, so enclosures compose soundly.
///
/// The midpoint carries the working precision; the radius is always held
/// at kRadiusBits and rounded upward.
class Ball {
public:
    explicit Ball(Bits bits = 128);
    Ball(BigFloat midpoint, BigFloat radius);

    /// Tight enclosure of an exact rational.
    static Ball exact(const Rational& q, Bits bits);
    static Ball exact(long value, Bits bits) { return exact(Rational(value), bits); }
    /// Enclosure of [lo, hi].
    static Ball from_endpoints(const BigFloat& lo, const BigFloat& hi, Bits bits);
    static Ball pi(Bits bits);

    const BigFloat& midpoint() const { return mid_; }
    const BigFloat& radius() const { return rad_; }
    Bits precision() const { return mid_.precision(); }

    /// Certified lower/upper endpoints.
    BigFloat lower() const;
    BigFloat upper() const;
    /// Upper bound for |x|.
    BigFloat magnitude() const;

    bool contains(const Rational& q) const;
    bool contains(const Ball& other) const;
    bool contains_zero() const { return contains(Rational(0)); }
    bool overlaps(const Ball& other) const;
    /// Certainly > 0 / < 0.
    bool is_positive() const;
    bool is_negative() const;

    /// Widens the radius by a nonnegative error term.
    Ball widened(const BigFloat& error) const;
    /// Same enclosure with the midpoint re-rounded to `bits`.
    Ball with_precision(Bits bits) const;

    std::string to_string(std::size_t digits = 30) const;

    Ball operator-() const;
    Ball& operator+=(const Ball& rhs);
    Ball& operator-=(const Ball& rhs);
    Ball& operator*=(const Ball& rhs);
    Ball& operator/=(const Ball& rhs);

    friend Ball operator+(Ball a, const Ball& b) { return a += b; }
    friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
    friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
    friend Ball operator/(Ball a, const Ball& b) { return a /= b; }

    friend Ball operator+(const Ball& a, const Rational& q) { return a + exact(q, a.precision()); }
    friend Ball operator-(const Ball& a, const Rational& q) { return a - exact(q, a.precision()); }
    friend Ball operator*(const Ball& a, const Rational& q) { return a * exact(q, a.precision()); }
    friend Ball operator/(const Ball& a, const Rational& q) { return a / exact(q, a.precision()); }
    friend Ball operator+(const Rational& q, const Ball& a) { return exact(q, a.precision()) + a; }
    friend Ball operator-(const Rational& q, const Ball& a) { return exact(q, a.precision()) - a; }
    friend Ball operator*(const Rational& q, const Ball& a) { return exact(q, a.precision()) * a; }
    friend Ball operator/(const Rational& q, const Ball& a) { return exact(q, a.precision()) / a; }

private:
    BigFloat mid_;
    BigFloat rad_;
};

Ball sqr(const Ball& x);
Ball pow(const Ball& x, unsigned long n);
Ball sqrt(const Ball& x);
Ball log(const Ball& x);
/// log(1 + x), accurate for small |x|.
Ball log1p(const Ball& x);
Ball exp(const Ball& x);
Ball sinh(const Ball& x);
Ball cosh(const Ball& x);
Ball abs(const Ball& x);

/// Smallest ball containing both.
Ball hull(const Ball& a, const Ball& b);

/// Ball-valued ErrorBoundedValue naming used across the public interface.
using ErrorBoundedValue = Ball;

}  // namespace dilog
