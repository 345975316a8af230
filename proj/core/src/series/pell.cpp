#include "dilog/series/pell.hpp"

#include <stdexcept>

#include "dilog/lucas/lucas.hpp"
#include "dilog/rogers/dilog.hpp"
#include "dilog/series/driver.hpp"
#include "dilog/series/lucas_series.hpp"

namespace dilog {

namespace {

bool divides(const Rational& num, const Rational& den) { return (num / den).is_integer(); }

SeriesTerm rational_term(const Rational& t, const PrecisionBudget& budget) {
    if (t.sign() <= 0 || t >= Rational(1)) throw std::domain_error("Bridgeman summand outside (0, 1)");
    return {rogers_l(t, budget), BigFloat::from_rational(t, kRadiusBits, MPFR_RNDU)};
}

}  // namespace

PellSolution::PellSolution(Rational a, Rational b, Integer n) : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
    if (a_.sign() <= 0 || b_.sign() <= 0) throw std::invalid_argument("Pell solution requires a, b > 0");
    if (n_ <= 0) throw std::invalid_argument("Pell radicand must be a positive integer");
    if (mpz_perfect_square_p(n_.get_mpz_t()) != 0) {
        throw std::invalid_argument("Pell radicand " + n_.get_str() + " is a perfect square");
    }
    const Rational norm = a_ * a_ - Rational(n_) * b_ * b_;
    if (norm == Rational(1)) {
        sign_ = 1;
    } else if (norm == Rational(-1)) {
        sign_ = -1;
    } else {
        throw std::invalid_argument("a^2 - n b^2 = " + norm.to_string() + ", expected +1 or -1");
    }
}

QuadraticElement PellSolution::unit() const { return QuadraticElement(a_, b_, Rational(n_)); }

std::pair<Rational, Rational> PellSolution::power(std::uint64_t k) const {
    const QuadraticElement uk = quad_pow(unit(), k);
    return {uk.rat_part(), uk.rad_part()};
}

PellLucasMap pell_to_lucas(const PellSolution& sol) {
    return {LucasParams::rational(Rational(2) * sol.a(), Rational(sol.sign())), Rational(1, 2), sol.b()};
}

bool pell_power_check(const PellSolution& sol, std::uint64_t k) {
    const PellLucasMap map = pell_to_lucas(sol);
    const auto [u, v] = [&] {
        const auto pair = lucas_uv_rational(map.params, k);
        return std::pair{pair.u, pair.v};
    }();
    const auto [ak, bk] = sol.power(k);
    const Rational D = Rational(4) * Rational(sol.n()) * sol.b() * sol.b();
    if (map.params.D_rational() != D) return false;
    const QuadraticElement lucas_form((v) / Rational(2), u / Rational(2), D);
    return quad_pow(sol.unit(), k) == lucas_form && ak == map.a_scale * v && bk == map.b_scale * u;
}

bool pell_divisibility_check(const PellSolution& sol, std::uint64_t k_max) {
    if (!sol.is_integral()) throw std::invalid_argument("divisibility applies to integral Pell solutions");
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        if (sol.sign() > 0) {
            if (!divides(sol.power(k).second, sol.b())) return false;
        } else {
            if (!divides(sol.power(2 * k).second, sol.a())) return false;
            if (!divides(sol.power(2 * k + 1).first, sol.a())) return false;
        }
    }
    return true;
}

IdentityReport bridgeman_verify(const PellSolution& sol, const VerifyOptions& options) {
    const PellLucasMap map = pell_to_lucas(sol);
    const LucasParams& params = map.params;
    const Rational D = params.D_rational();
    const Rational n(sol.n());
    const Rational v1 = lucas_uv_rational(params, 1).v;

    // Summands as functions of the summation index k.
    const auto pos_term = [params](std::uint64_t k) {
        const Rational u = lucas_uv_rational(params, k).u;
        return Rational(1) / (u * u);
    };
    const auto neg_first = [params, D, v1](std::uint64_t k) {
        const Rational u = lucas_uv_rational(params, 2 * k).u;
        return v1 * v1 / (D * u * u);
    };
    const auto neg_second = [params, v1](std::uint64_t k) {
        const Rational v = lucas_uv_rational(params, 2 * k + 1).v;
        return v1 * v1 / (v * v);
    };

    bool agree = true;
    for (std::uint64_t k = 1; k <= kBridgemanCheckedTerms && agree; ++k) {
        if (sol.sign() > 0) {
            const Rational t = pos_term(k + 1);
            const Rational bk = sol.power(k + 1).second;
            agree = t == sol.b() * sol.b() / (bk * bk) && lucas_pos_term(params, 1, k) == t;
        } else {
            const Rational first = neg_first(k);
            const Rational second = neg_second(k);
            const Rational b2k = sol.power(2 * k).second;
            const Rational a2k1 = sol.power(2 * k + 1).first;
            const Rational a2 = sol.a() * sol.a();
            agree = first == a2 / (n * b2k * b2k) && second == a2 / (a2k1 * a2k1) &&
                    lucas_neg_first_term(params, 1, k) == first && lucas_neg_second_term(params, 1, k) == second;
        }
        agree = agree && pell_power_check(sol, k);
    }

    // 1/u^2 = conj(u)^2 because u conj(u) = +-1.
    const QuadraticElement rhs_arg = quad_pow(sol.unit().conj(), 2);
    const QuadraticElement lucas_rhs =
        sol.sign() > 0 ? lucas_pos_rhs_argument(params, 1) : lucas_neg_rhs_argument(params, 1);
    const bool rhs_agree = rhs_arg == lucas_rhs && rhs_arg * quad_pow(sol.unit(), 2) == Rational(1);

    std::map<std::string, std::string> parameters{{"pell_a", sol.a().to_string()},
                                                  {"pell_b", sol.b().to_string()},
                                                  {"pell_n", sol.n().get_str()},
                                                  {"sign", sol.sign() > 0 ? "positive" : "negative"}};
    std::string divisibility = "not-applicable";
    if (sol.is_integral()) divisibility = pell_divisibility_check(sol, kBridgemanCheckedTerms) ? "true" : "false";

    const QuadraticElement ratio_arg = sol.sign() > 0 ? rhs_arg : rhs_arg * rhs_arg;
    return verify_series("bridgeman", std::move(parameters), options, [&](const PrecisionBudget& inner) {
        SeriesIdentity id;
        SubSeries first;
        first.ratio = ratio_arg.to_real(128).upper();
        if (sol.sign() > 0) {
            first.label = "sum";
            first.start = 2;
            first.term = [pos_term, inner](std::uint64_t k) { return rational_term(pos_term(k), inner); };
            id.parts.push_back(std::move(first));
        } else {
            first.label = "first";
            first.start = 1;
            first.term = [neg_first, inner](std::uint64_t k) { return rational_term(neg_first(k), inner); };
            SubSeries second = first;
            second.label = "second";
            second.term = [neg_second, inner](std::uint64_t k) { return rational_term(neg_second(k), inner); };
            id.parts = {std::move(first), std::move(second)};
        }
        id.rhs = rogers_l(rhs_arg, inner);
        id.notes["term_agreement"] = agree && rhs_agree ? "true" : "false";
        id.notes["divisibility"] = divisibility;
        id.checks_ok = agree && rhs_agree && divisibility != "false";
        return id;
    });
}

}  // namespace dilog
