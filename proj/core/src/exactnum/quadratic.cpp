#include "dilog/exactnum/quadratic.hpp"

#include <stdexcept>

namespace dilog {

QuadraticElement::QuadraticElement(Rational rat_part, Rational rad_part, Rational radicand)
    : rat_(std::move(rat_part)), rad_(std::move(rad_part)), radicand_(std::move(radicand)) {
    if (radicand_.sign() < 0) throw std::domain_error("QuadraticElement: negative radicand");
}

QuadraticElement QuadraticElement::embed(const Rational& value, const Rational& radicand) {
    return QuadraticElement(value, Rational(0), radicand);
}

QuadraticElement QuadraticElement::root(const Rational& radicand) {
    return QuadraticElement(Rational(0), Rational(1), radicand);
}

std::optional<Rational> QuadraticElement::as_rational() const {
    if (has_rational_form()) return rat_;
    if (auto r = radicand_.exact_sqrt()) return rat_ + rad_ * *r;
    return std::nullopt;
}

QuadraticElement QuadraticElement::conj() const { return QuadraticElement(rat_, -rad_, radicand_); }

Rational QuadraticElement::norm() const { return rat_ * rat_ - radicand_ * rad_ * rad_; }

int QuadraticElement::sign() const {
    const int sa = rat_.sign();
    if (has_rational_form()) return sa;
    const int sb = rad_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational lhs = rat_ * rat_;
    const Rational rhs = rad_ * rad_ * radicand_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

QuadraticElement QuadraticElement::pow(std::uint64_t n) const {
    QuadraticElement result = embed(Rational(1), radicand_);
    QuadraticElement base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

QuadraticElement QuadraticElement::reciprocal() const {
    const Rational n = norm();
    if (!n.is_zero()) return QuadraticElement(rat_ / n, -rad_ / n, radicand_);
    // A zero norm with a nonzero value only happens over a perfect square.
    const auto value = as_rational();
    if (!value || value->is_zero()) throw std::domain_error("QuadraticElement: reciprocal of zero");
    return embed(value->reciprocal(), radicand_);
}

Ball QuadraticElement::to_real(Bits bits) const {
    const Bits w = bits + 10;
    if (auto q = as_rational()) return Ball::exact(*q, w);
    const Ball root_d = sqrt(Ball::exact(radicand_, w));
    const Ball a = Ball::exact(rat_, w);
    const Ball b_root = Ball::exact(rad_, w) * root_d;
    if (rat_.sign() == 0 || rat_.sign() == rad_.sign()) return a + b_root;
    // Opposite signs cancel; divide the exact norm by the conjugate instead.
    return Ball::exact(norm(), w) / (a - b_root);
}

std::string QuadraticElement::to_string() const {
    if (has_rational_form()) return rat_.to_string();
    std::string s;
    if (!rat_.is_zero()) s = rat_.to_string() + (rad_.sign() < 0 ? " - " : " + ");
    else if (rad_.sign() < 0) s = "-";
    const Rational b = rad_.abs();
    if (b != Rational(1)) s += b.to_string() + "*";
    return s + "sqrt(" + radicand_.to_string() + ")";
}

void QuadraticElement::require_same_field(const QuadraticElement& other) const {
    if (radicand_ != other.radicand_) {
        throw std::domain_error("QuadraticElement: radicand mismatch (" + radicand_.to_string() + " vs " +
                                other.radicand_.to_string() + ")");
    }
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& rhs) {
    require_same_field(rhs);
    rat_ += rhs.rat_;
    rad_ += rhs.rad_;
    return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& rhs) {
    require_same_field(rhs);
    rat_ -= rhs.rat_;
    rad_ -= rhs.rad_;
    return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& rhs) {
    require_same_field(rhs);
    Rational rat = rat_ * rhs.rat_ + radicand_ * rad_ * rhs.rad_;
    Rational rad = rat_ * rhs.rad_ + rad_ * rhs.rat_;
    rat_ = std::move(rat);
    rad_ = std::move(rad);
    return *this;
}

QuadraticElement& QuadraticElement::operator/=(const QuadraticElement& rhs) {
    require_same_field(rhs);
    return *this *= rhs.reciprocal();
}

QuadraticElement QuadraticElement::operator-() const { return QuadraticElement(-rat_, -rad_, radicand_); }

QuadraticElement operator+(const QuadraticElement& a, const Rational& q) {
    return QuadraticElement(a.rat_ + q, a.rad_, a.radicand_);
}

QuadraticElement operator-(const QuadraticElement& a, const Rational& q) {
    return QuadraticElement(a.rat_ - q, a.rad_, a.radicand_);
}

QuadraticElement operator*(const QuadraticElement& a, const Rational& q) {
    return QuadraticElement(a.rat_ * q, a.rad_ * q, a.radicand_);
}

QuadraticElement operator/(const QuadraticElement& a, const Rational& q) {
    if (q.is_zero()) throw std::domain_error("QuadraticElement: division by zero");
    return QuadraticElement(a.rat_ / q, a.rad_ / q, a.radicand_);
}

bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    if (a.radicand_ == b.radicand_) return (a - b).is_zero();
    const auto qa = a.as_rational();
    const auto qb = b.as_rational();
    if (qa && qb) return *qa == *qb;
    if (qa || qb) return false;
    // a + b1*sqrt(D1) == c + d*sqrt(D2) with both roots irrational.
    return a.rat_ == b.rat_ && a.rad_.sign() == b.rad_.sign() &&
           a.rad_ * a.rad_ * a.radicand_ == b.rad_ * b.rad_ * b.radicand_;
}

bool operator==(const QuadraticElement& a, const Rational& q) {
    const auto v = a.as_rational();
    return v && *v == q;
}

std::ostream& operator<<(std::ostream& os, const QuadraticElement& x) { return os << x.to_string(); }

std::optional<QuadraticElement> exact_sqrt(const QuadraticElement& x) {
    const Rational& d = x.radicand();
    if (x.sign() < 0) return std::nullopt;
    if (auto v = x.as_rational()) {
        if (auto r = v->exact_sqrt()) return QuadraticElement::embed(*r, d);
        if (!d.is_zero()) {
            if (auto c = (*v / d).exact_sqrt()) return QuadraticElement(Rational(0), *c, d);
        }
        return std::nullopt;
    }
    // (p + q sqrt(d))^2 = a + b sqrt(d)  =>  p^2 = (a +/- sqrt(norm)) / 2, q = b / (2p).
    const auto s = x.norm().exact_sqrt();
    if (!s) return std::nullopt;
    for (const Rational& candidate : {(x.rat_part() + *s) / Rational(2), (x.rat_part() - *s) / Rational(2)}) {
        const auto p = candidate.exact_sqrt();
        if (!p || p->is_zero()) continue;
        QuadraticElement root(*p, x.rad_part() / (Rational(2) * *p), d);
        if (root.sign() < 0) root = -root;
        if (root * root == x) return root;
    }
    return std::nullopt;
}

QuadraticElement quad_mul(const QuadraticElement& x, const QuadraticElement& y) { return x * y; }

QuadraticElement quad_pow(const QuadraticElement& x, std::uint64_t n) { return x.pow(n); }

Ball quad_to_real(const QuadraticElement& x, Bits bits) { return x.to_real(bits); }

}  // namespace dilog
