#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "dilog/exactnum/rational.hpp"
#include "dilog/numeric/ball.hpp"

namespace dilog {

/// Exact element rat_part + rad_part * sqrt(radicand) of Q(sqrt(radicand)).
///
/// The radicand is a nonnegative Rational. Perfect-square radicands are
/// allowed and are not demoted; equality and ordering compare values, so
/// 1 + 1*sqrt(4) == 3 + 0*sqrt(4).
///
/// Binary operations require equal radicands and throw std::domain_error
/// otherwise. Sign and ordering are decided exactly by comparing squares.
class QuadraticElement {
public:
    QuadraticElement() = default;
    QuadraticElement(Rational rat_part, Rational rad_part, Rational radicand);

    /// The rational `value` embedded in Q(sqrt(radicand)).
    static QuadraticElement embed(const Rational& value, const Rational& radicand);
    /// sqrt(radicand) itself.
    static QuadraticElement root(const Rational& radicand);

    const Rational& rat_part() const { return rat_; }
    const Rational& rad_part() const { return rad_; }
    const Rational& radicand() const { return radicand_; }

    /// True when the stored irrational coefficient is zero.
    bool has_rational_form() const { return rad_.is_zero() || radicand_.is_zero(); }
    /// The value as a Rational, when it is one (including perfect squares).
    std::optional<Rational> as_rational() const;

    QuadraticElement conj() const;
    /// rat^2 - radicand * rad^2.
    Rational norm() const;
    /// Exact sign of the real value.
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    QuadraticElement pow(std::uint64_t n) const;
    QuadraticElement reciprocal() const;

    /// Certified enclosure; radius <= 2^(4 - bits) * max(1, |x|).
    Ball to_real(Bits bits) const;

    std::string to_string() const;

    QuadraticElement& operator+=(const QuadraticElement& rhs);
    QuadraticElement& operator-=(const QuadraticElement& rhs);
    QuadraticElement& operator*=(const QuadraticElement& rhs);
    QuadraticElement& operator/=(const QuadraticElement& rhs);

    friend QuadraticElement operator+(QuadraticElement a, const QuadraticElement& b) { return a += b; }
    friend QuadraticElement operator-(QuadraticElement a, const QuadraticElement& b) { return a -= b; }
    friend QuadraticElement operator*(QuadraticElement a, const QuadraticElement& b) { return a *= b; }
    friend QuadraticElement operator/(QuadraticElement a, const QuadraticElement& b) { return a /= b; }
    QuadraticElement operator-() const;

    friend QuadraticElement operator+(const QuadraticElement& a, const Rational& q);
    friend QuadraticElement operator-(const QuadraticElement& a, const Rational& q);
    friend QuadraticElement operator*(const QuadraticElement& a, const Rational& q);
    friend QuadraticElement operator/(const QuadraticElement& a, const Rational& q);
    friend QuadraticElement operator+(const Rational& q, const QuadraticElement& a) { return a + q; }
    friend QuadraticElement operator-(const Rational& q, const QuadraticElement& a) { return -a + q; }
    friend QuadraticElement operator*(const Rational& q, const QuadraticElement& a) { return a * q; }
    friend QuadraticElement operator/(const Rational& q, const QuadraticElement& a) { return a.reciprocal() * q; }

    /// Value equality. Elements of different fields compare equal only when
    /// both have rational form; otherwise std::domain_error.
    friend bool operator==(const QuadraticElement& a, const QuadraticElement& b);
    friend bool operator<(const QuadraticElement& a, const QuadraticElement& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadraticElement& a, const QuadraticElement& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QuadraticElement& a, const QuadraticElement& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QuadraticElement& a, const QuadraticElement& b) { return (a - b).sign() >= 0; }

    friend bool operator==(const QuadraticElement& a, const Rational& q);

private:
    void require_same_field(const QuadraticElement& other) const;

    Rational rat_;
    Rational rad_;
    Rational radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticElement& x);

/// Square root inside the same field, when one exists.
std::optional<QuadraticElement> exact_sqrt(const QuadraticElement& x);

QuadraticElement quad_mul(const QuadraticElement& x, const QuadraticElement& y);
QuadraticElement quad_pow(const QuadraticElement& x, std::uint64_t n);
Ball quad_to_real(const QuadraticElement& x, Bits bits);

}  // namespace dilog
