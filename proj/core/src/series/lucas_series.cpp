#include "dilog/series/lucas_series.hpp"

#include <stdexcept>

#include "dilog/rogers/dilog.hpp"
#include "dilog/series/driver.hpp"

namespace dilog {

namespace {

std::uint64_t checked_index(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("Lucas index overflow");
    return a * b;
}

QuadraticElement u_at(const LucasParams& params, std::uint64_t n) { return lucas_uv(params, n).u; }
QuadraticElement v_at(const LucasParams& params, std::uint64_t n) { return lucas_uv(params, n).v; }

void require_open_unit(const QuadraticElement& t, const std::string& what) {
    if (t.sign() <= 0 || (Rational(1) - t).sign() <= 0) {
        throw std::domain_error(what + " argument " + t.to_string() + " outside (0, 1)");
    }
}

SeriesTerm quadratic_term(const QuadraticElement& t, const PrecisionBudget& budget, const std::string& what) {
    require_open_unit(t, what);
    if (auto q = t.as_rational()) {
        return {rogers_l(*q, budget), BigFloat::from_rational(*q, kRadiusBits, MPFR_RNDU)};
    }
    return {rogers_l(t, budget), t.to_real(budget.working_bits).upper()};
}

BigFloat ratio_upper(const QuadraticElement& r) { return r.to_real(128).upper(); }

void require_k(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be a positive integer");
}

std::map<std::string, std::string> describe(const LucasParams& params, std::uint64_t k) {
    return {{"P", params.P().to_string()}, {"Q", params.Q().to_string()}, {"k", std::to_string(k)}};
}

}  // namespace

QuadraticElement lucas_pos_term(const LucasParams& params, std::uint64_t k, std::uint64_t n) {
    const QuadraticElement uk = u_at(params, k);
    const QuadraticElement den = u_at(params, checked_index(k, n + 1));
    return uk * uk * params.Q().pow(checked_index(k, n)) / (den * den);
}

QuadraticElement lucas_neg_first_term(const LucasParams& params, std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("negative-branch index starts at 1");
    const QuadraticElement vk = v_at(params, k);
    const QuadraticElement den = u_at(params, checked_index(2 * k, n));
    return -(vk * vk * params.Q().pow(checked_index(k, 2 * n - 1))) / (params.D() * den * den);
}

QuadraticElement lucas_neg_second_term(const LucasParams& params, std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("negative-branch index starts at 1");
    const QuadraticElement vk = v_at(params, k);
    const QuadraticElement den = v_at(params, checked_index(k, 2 * n + 1));
    return vk * vk * params.Q().pow(checked_index(2 * k, n)) / (den * den);
}

QuadraticElement lucas_pos_rhs_argument(const LucasParams& params, std::uint64_t k) {
    return params.Q().pow(k) / params.alpha().pow(2 * k);
}

QuadraticElement lucas_neg_rhs_argument(const LucasParams& params, std::uint64_t k) {
    return -lucas_pos_rhs_argument(params, k);
}

IdentityReport lucas_pos_verify(const LucasParams& params, std::uint64_t k, const VerifyOptions& options) {
    require_k(k);
    if (params.Q().sign() <= 0) throw std::invalid_argument("positive branch requires Q > 0");
    const QuadraticElement rhs_arg = lucas_pos_rhs_argument(params, k);
    const QuadraticElement ratio = (params.Q() / (params.alpha() * params.alpha())).pow(k);
    return verify_series("lucas-pos", describe(params, k), options, [&](const PrecisionBudget& inner) {
        SeriesIdentity id;
        SubSeries part;
        part.label = "sum";
        part.start = 1;
        part.term = [params, k, inner](std::uint64_t n) {
            return quadratic_term(lucas_pos_term(params, k, n), inner, "lucas-pos summand");
        };
        part.ratio = ratio_upper(ratio);
        id.parts.push_back(std::move(part));
        id.rhs = rogers_l(rhs_arg, inner);
        return id;
    });
}

IdentityReport lucas_pos_verify_numeric(const std::function<NumericLucasParams(Bits)>& make_params,
                                        std::uint64_t k, const VerifyOptions& options,
                                        std::map<std::string, std::string> parameters) {
    require_k(k);
    parameters["k"] = std::to_string(k);
    return verify_series("lucas-pos", std::move(parameters), options, [&](const PrecisionBudget& inner) {
        const Bits bits = inner.working_bits + 32;
        const NumericLucasParams params = make_params(bits);
        if (!params.Q().is_positive()) throw std::invalid_argument("positive branch requires Q > 0");
        const Ball ratio = pow(params.Q() / sqr(params.alpha()), k);
        const Ball uk = lucas_uv(params, k).u;
        SeriesIdentity id;
        SubSeries part;
        part.label = "sum";
        part.start = 1;
        part.term = [params, k, inner, uk](std::uint64_t n) {
            const Ball den = lucas_uv(params, checked_index(k, n + 1)).u;
            const Ball t = sqr(uk) * pow(params.Q(), checked_index(k, n)) / sqr(den);
            return SeriesTerm{rogers_l(t, inner), t.upper()};
        };
        part.ratio = ratio.upper();
        id.parts.push_back(std::move(part));
        id.rhs = rogers_l(ratio, inner);
        return id;
    });
}

IdentityReport lucas_neg_verify(const LucasParams& params, std::uint64_t k, const VerifyOptions& options) {
    require_k(k);
    if (params.Q().sign() >= 0) throw std::invalid_argument("negative branch requires Q < 0");
    if (k % 2 == 0) throw std::invalid_argument("negative branch requires odd k");
    const QuadraticElement rhs_arg = lucas_neg_rhs_argument(params, k);
    const QuadraticElement ratio = (params.Q() * params.Q() / params.alpha().pow(4)).pow(k);
    return verify_series("lucas-neg", describe(params, k), options, [&](const PrecisionBudget& inner) {
        SeriesIdentity id;
        SubSeries first;
        first.label = "first";
        first.start = 1;
        first.term = [params, k, inner](std::uint64_t n) {
            return quadratic_term(lucas_neg_first_term(params, k, n), inner, "lucas-neg first summand");
        };
        first.ratio = ratio_upper(ratio);
        SubSeries second = first;
        second.label = "second";
        second.term = [params, k, inner](std::uint64_t n) {
            return quadratic_term(lucas_neg_second_term(params, k, n), inner, "lucas-neg second summand");
        };
        id.parts = {std::move(first), std::move(second)};
        id.rhs = rogers_l(rhs_arg, inner);
        return id;
    });
}

bool neg_from_pos_split_check(const LucasParams& params, std::uint64_t k, std::uint64_t count) {
    require_k(k);
    if (params.Q().sign() >= 0 || k % 2 == 0) throw std::invalid_argument("split check requires Q < 0 and odd k");
    const LucasParams primed = transform_params(params);
    for (std::uint64_t n = 1; n <= count; ++n) {
        const QuadraticElement pos = lucas_pos_term(primed, k, n);
        const QuadraticElement neg =
            n % 2 == 1 ? lucas_neg_first_term(params, k, (n + 1) / 2) : lucas_neg_second_term(params, k, n / 2);
        if (!(pos == neg)) return false;
    }
    return true;
}

bool even_k_companion_check(const LucasParams& params, std::uint64_t k, std::uint64_t count) {
    require_k(k);
    if (params.Q().sign() >= 0 || k % 2 == 1) throw std::invalid_argument("companion check requires Q < 0 and even k");
    const LucasParams primed = transform_params(params);
    for (std::uint64_t n = 1; n <= count; ++n) {
        if (!(lucas_pos_term(primed, k, n) == lucas_pos_term(params, k, n))) return false;
    }
    return true;
}

}  // namespace dilog
