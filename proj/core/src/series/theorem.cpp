#include "dilog/series/theorem.hpp"

#include <stdexcept>

#include "dilog/rogers/dilog.hpp"
#include "dilog/series/accelerate.hpp"
#include "dilog/series/driver.hpp"

namespace dilog {

namespace {

SeriesTerm exact_term(const Rational& t, const PrecisionBudget& budget) {
    return {rogers_l(t, budget), BigFloat::from_rational(t, kRadiusBits, MPFR_RNDU)};
}

SubSeries two_param_series(const TwoParamInstance& inst, std::uint64_t offset, const PrecisionBudget& inner) {
    SubSeries part;
    part.label = "sum";
    part.start = offset;
    part.term = [inst, offset, inner](std::uint64_t n) {
        return exact_term(theorem_main_term(inst, n - offset), inner);
    };
    part.ratio = BigFloat::from_rational(inst.decay_ratio(), kRadiusBits, MPFR_RNDU);
    part.analytic_tail = [inst, offset, bits = inner.working_bits](std::uint64_t first, const BigFloat& tol) {
        return two_param_analytic_tail(inst.a(), inst.b(), first - offset, tol, bits);
    };
    return part;
}

}  // namespace

IdentityReport theorem_main_verify(const TwoParamInstance& inst, const VerifyOptions& options) {
    return verify_series("theorem-main", {{"a", inst.a().to_string()}, {"b", inst.b().to_string()}}, options,
                         [&](const PrecisionBudget& inner) {
                             SeriesIdentity id;
                             id.parts.push_back(two_param_series(inst, 0, inner));
                             id.rhs = rogers_l(inst.a(), inner) + rogers_l(inst.b(), inner) -
                                      rogers_l(inst.limit(), inner);
                             return id;
                         });
}

Rational corollary_term(const Rational& t, std::uint64_t n) {
    const Rational a = (Rational(1) + t) / Rational(2);
    const Rational b = (Rational(1) - t) / Rational(2);
    const auto e = static_cast<std::int64_t>(n);
    const Rational diff = a.pow(e + 1) - b.pow(e + 1);
    return t * t * b.pow(e) * a.pow(e) / (diff * diff);
}

Rational corollary_simplified_term(const Rational& t, std::uint64_t n) {
    const auto e = static_cast<std::int64_t>(n);
    const Rational diff = (Rational(1) + t).pow(e + 1) - (Rational(1) - t).pow(e + 1);
    return Rational(4) * t * t * (Rational(1) - t * t).pow(e) / (diff * diff);
}

IdentityReport corollary_verify(const Rational& t, const VerifyOptions& options) {
    if (t.sign() <= 0 || t >= Rational(1)) throw std::invalid_argument("corollary requires 0 < t < 1");
    const TwoParamInstance inst((Rational(1) + t) / Rational(2), (Rational(1) - t) / Rational(2));
    return verify_series("corollary", {{"t", t.to_string()}}, options, [&](const PrecisionBudget& inner) {
        SeriesIdentity id;
        id.parts.push_back(two_param_series(inst, 1, inner));
        id.rhs = rogers_l((Rational(1) - t) / (Rational(1) + t), inner);
        bool agree = true;
        for (std::uint64_t n = 1; n <= kCorollaryCheckedTerms && agree; ++n) {
            const Rational c = corollary_term(t, n);
            agree = c == theorem_main_term(inst, n - 1) && c == corollary_simplified_term(t, n);
        }
        id.notes["term_agreement"] = agree ? "true" : "false";
        id.checks_ok = agree;
        return id;
    });
}

}  // namespace dilog
