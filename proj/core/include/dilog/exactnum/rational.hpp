#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dilog {

using Integer = mpz_class;

/// Exact fraction of arbitrary-precision integers, always stored in lowest
/// terms with a positive denominator. Division by zero raises
/// std::domain_error instead of trapping inside GMP.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);
    explicit Rational(const mpq_class& value);

    /// Accepts "p", "p/q" and plain decimals such as "-0.125"; decimals are
    /// read exactly, never through a binary float.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(std::int64_t exponent) const;
    /// Exact square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& x, const Rational& y);
Rational max(const Rational& x, const Rational& y);

/// gcd of |x| and |y| for integers.
Integer gcd(const Integer& x, const Integer& y);

}  // namespace dilog
