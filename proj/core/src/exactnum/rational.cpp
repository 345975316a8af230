#include "dilog/exactnum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dilog {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw std::invalid_argument("not an integer literal");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    try {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            return Rational(parse_integer(text.substr(0, slash)),
                            parse_integer(text.substr(slash + 1)));
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
            if (whole.empty() && frac.empty()) return fail();
            if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac))) return fail();
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            Integer num = (whole.empty() ? Integer(0) : Integer(std::string(whole), 10)) * scale +
                          (frac.empty() ? Integer(0) : Integer(std::string(frac), 10));
            if (negative) num = -num;
            return Rational(num, scale);
        }
        return Rational(parse_integer(text));
    } catch (const std::logic_error&) {
        return fail();
    }
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    Integer num, den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    Rational r;
    r.value_ = mpq_class(num, den);  // already coprime
    return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(value_.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(value_.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

Integer gcd(const Integer& x, const Integer& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

}  // namespace dilog
