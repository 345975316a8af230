#include "dilog/series/two_param.hpp"

#include <stdexcept>

namespace dilog {

namespace {

const Rational kOne(1);

Rational power(const Rational& x, std::uint64_t n) { return x.pow(static_cast<std::int64_t>(n)); }

bool in_open_unit(const Rational& x) { return x.sign() > 0 && x < kOne; }

}  // namespace

TwoParamInstance::TwoParamInstance(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (!in_open_unit(a_) || !in_open_unit(b_)) {
        throw std::invalid_argument("two-parameter instance requires 0 < a, b < 1");
    }
    if (a_ == b_) throw std::invalid_argument("two-parameter instance requires a != b");
}

Rational TwoParamInstance::decay_ratio() const { return (kOne - max(a_, b_)) / (kOne - min(a_, b_)); }

Rational TwoParamInstance::limit() const { return (a_ - b_).abs() / (kOne - min(a_, b_)); }

Rational d_seq(const TwoParamInstance& inst, std::uint64_t n) {
    const Rational& a = inst.a();
    const Rational& b = inst.b();
    return (a * power(kOne - b, n + 1) - b * power(kOne - a, n + 1)) / (a - b);
}

std::pair<Rational, Rational> xy_seq(const TwoParamInstance& inst, std::uint64_t n) {
    const Rational d = d_seq(inst, n);
    return {inst.a() * power(kOne - inst.b(), n) / d, inst.b() * power(kOne - inst.a(), n) / d};
}

std::pair<Rational, Rational> xy_step(const Rational& x, const Rational& y) {
    const Rational denom = kOne - x * y;
    return {x * (kOne - y) / denom, y * (kOne - x) / denom};
}

Rational theorem_main_term(const TwoParamInstance& inst, std::uint64_t n) {
    const Rational& a = inst.a();
    const Rational& b = inst.b();
    const Rational pa = power(kOne - a, n);
    const Rational pb = power(kOne - b, n);
    const Rational diff = a * pb * (kOne - b) - b * pa * (kOne - a);
    return a * b * (a - b) * (a - b) * pa * pb / (diff * diff);
}

bool cassini_check(const TwoParamInstance& inst, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cassini_check: n >= 1");
    const Rational& a = inst.a();
    const Rational& b = inst.b();
    const Rational dn = d_seq(inst, n);
    return dn * dn - d_seq(inst, n - 1) * d_seq(inst, n + 1) ==
           a * b * power(kOne - a, n) * power(kOne - b, n);
}

bool shift_check(const TwoParamInstance& inst, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("shift_check: n >= 1");
    const Rational& a = inst.a();
    const Rational& b = inst.b();
    const Rational dn = d_seq(inst, n);
    const Rational dp = d_seq(inst, n - 1);
    return dn - (kOne - b) * dp == b * power(kOne - a, n) && dn - (kOne - a) * dp == a * power(kOne - b, n);
}

bool recurrence_check(const TwoParamInstance& inst, std::uint64_t n) {
    const auto [x, y] = xy_seq(inst, n);
    return xy_step(x, y) == xy_seq(inst, n + 1);
}

bool summand_check(const TwoParamInstance& inst, std::uint64_t n) {
    const auto [x, y] = xy_seq(inst, n);
    const Rational t = theorem_main_term(inst, n);
    return t == x * y && in_open_unit(x) && in_open_unit(y) && in_open_unit(t);
}

bool limit_check(const TwoParamInstance& inst, std::uint64_t n) {
    auto [x, y] = xy_seq(inst, n);
    if (inst.a() < inst.b()) std::swap(x, y);
    const Rational bound = power(inst.decay_ratio(), n / 2);
    return (x - inst.limit()).abs() < bound && y.abs() < bound;
}

}  // namespace dilog
