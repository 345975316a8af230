#include "dilog/numeric/bigfloat.hpp"

#include <memory>
#include <stdexcept>

namespace dilog {

BigFloat::BigFloat(Bits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& q, Bits bits, mpfr_rnd_t rnd) {
    BigFloat r(bits);
    mpfr_set_q(r.value_, q.raw().get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_si(long value, Bits bits) {
    BigFloat r(bits);
    mpfr_set_si(r.value_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::parse(std::string_view text, Bits bits) {
    BigFloat r(bits);
    const std::string s(text);
    char* end = nullptr;
    mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw std::invalid_argument("cannot parse number '" + s + "'");
    }
    return r;
}

BigFloat BigFloat::pow2(long exponent, Bits bits) {
    BigFloat r(bits);
    mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
    return r;
}

Rational BigFloat::to_rational() const {
    if (!is_finite()) throw std::domain_error("BigFloat: non-finite value has no rational form");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return Rational(q);
}

std::string BigFloat::to_string(std::size_t digits) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    mpfr_exp_t exp = 0;
    std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp, 10, digits, value_, MPFR_RNDN),
                                              mpfr_free_str);
    std::string mantissa(raw.get());
    std::string out;
    if (mantissa.front() == '-') {
        out.push_back('-');
        mantissa.erase(0, 1);
    }
    // Trim trailing zeros, keeping at least one digit.
    while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
    out.push_back(mantissa.front());
    if (mantissa.size() > 1) {
        out.push_back('.');
        out.append(mantissa, 1, std::string::npos);
    }
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return out;
}

BigFloat add_up(const BigFloat& a, const BigFloat& b, Bits bits) {
    BigFloat r(bits);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

BigFloat mul_up(const BigFloat& a, const BigFloat& b, Bits bits) {
    BigFloat r(bits);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

BigFloat div_up(const BigFloat& a, const BigFloat& b, Bits bits) {
    BigFloat r(bits);
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace dilog
