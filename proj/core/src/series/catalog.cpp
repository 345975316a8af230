#include "dilog/series/catalog.hpp"

#include <stdexcept>

#include "dilog/lucas/lucas.hpp"
#include "dilog/rogers/dilog.hpp"
#include "dilog/series/driver.hpp"
#include "dilog/series/lucas_series.hpp"

namespace dilog {

namespace {

constexpr std::uint64_t kCompanionTerms = 30;

// (1 + sqrt(5))/2 over radicand 5.
QuadraticElement golden() { return QuadraticElement(Rational(1, 2), Rational(1, 2), Rational(5)); }

LucasParams sqrt5_params() { return LucasParams(QuadraticElement::root(5), QuadraticElement::embed(1, 5)); }

std::uint64_t odd_k(const CatalogArgs& args, const std::string& name) {
    const std::uint64_t k = args.k.value_or(1);
    if (k == 0 || k % 2 == 0) throw std::invalid_argument(name + " requires an odd positive k");
    return k;
}

std::uint64_t even_k(const CatalogArgs& args, const std::string& name) {
    const std::uint64_t k = args.k.value_or(2);
    if (k == 0 || k % 2 == 1) throw std::invalid_argument(name + " requires an even positive k");
    return k;
}

std::uint64_t any_k(const CatalogArgs& args) {
    const std::uint64_t k = args.k.value_or(1);
    if (k == 0) throw std::invalid_argument("k must be a positive integer");
    return k;
}

Rational above_one(const CatalogArgs& args, const std::string& name) {
    const Rational x = args.x.value_or(Rational(2));
    if (x <= Rational(1)) throw std::invalid_argument(name + " requires x > 1");
    return x;
}

IdentityReport finish(IdentityReport report, const std::string& name, const std::string& closed_form, bool agree,
                      std::map<std::string, std::string> extra = {}) {
    report.identity_id = name;
    report.parameters["closed_form"] = closed_form;
    report.parameters["closed_form_agreement"] = agree ? "true" : "false";
    for (auto& [k, v] : extra) report.parameters[k] = v;
    if (!agree) report.verdict = Verdict::fail;
    return report;
}

const char* flag(bool ok) { return ok ? "true" : "false"; }

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"richmond-szekeres", "sinh-theta", "chebyshev-x", "repunit-x",
                                                "fib-even",          "fib-lucas-neg", "pell",     "q-minus-3",
                                                "sqrt5-k-odd",       "sqrt5-k-even"};
    return names;
}

std::vector<std::string> catalog_parameters(const std::string& name) {
    if (name == "richmond-szekeres") return {"N"};
    if (name == "sinh-theta") return {"theta"};
    if (name == "chebyshev-x" || name == "repunit-x") return {"x", "k"};
    for (const auto& n : catalog_names()) {
        if (n == name) return {"k"};
    }
    throw UnknownIdentity("unknown catalog identity '" + name + "'");
}

BigFloat richmond_szekeres_tail(std::uint64_t N) {
    if (N < 2) throw std::invalid_argument("richmond-szekeres requires N >= 2");
    BigFloat zeta2(kRadiusBits);
    mpfr_const_pi(zeta2.get(), MPFR_RNDU);
    mpfr_sqr(zeta2.get(), zeta2.get(), MPFR_RNDU);
    mpfr_div_ui(zeta2.get(), zeta2.get(), 6, MPFR_RNDU);
    BigFloat log_n(kRadiusBits);
    mpfr_set_ui(log_n.get(), static_cast<unsigned long>(N), MPFR_RNDU);
    mpfr_log(log_n.get(), log_n.get(), MPFR_RNDU);
    mpfr_mul_2ui(log_n.get(), log_n.get(), 1, MPFR_RNDU);
    BigFloat num = add_up(add_up(zeta2, log_n), BigFloat::from_si(2));
    mpfr_div_ui(num.get(), num.get(), static_cast<unsigned long>(N), MPFR_RNDU);
    return num;
}

IdentityReport richmond_szekeres_verify(std::uint64_t N, const VerifyOptions& options) {
    if (N < 2) throw std::invalid_argument("richmond-szekeres requires N >= 2");
    IdentityReport report;
    report.identity_id = "richmond-szekeres";
    report.parameters = {{"N", std::to_string(N)}};
    report.digits = options.digits;
    const PrecisionBudget inner = inner_budget(options.digits, 0);
    const Bits bits = inner.working_bits;
    try {
        Ball sum(bits);
        for (std::uint64_t n = 2; n <= N; ++n) {
            const Ball term = rogers_l(Rational(Integer(1), Integer(Integer(n) * n)), inner);
            sum += term;
            if (options.trace) report.trace.push_back(TraceRow{n, term, sum, richmond_szekeres_tail(n)});
        }
        report.lhs = sum;
    } catch (const PrecisionFailure& e) {
        report.parameters["failure"] = std::string("precision: ") + e.what();
        report.verdict = Verdict::fail;
        return report;
    }
    report.terms_used = N - 1;
    report.rhs = pi_squared_over(6, bits);
    report.tail_bound = richmond_szekeres_tail(N);
    report.residual = report.lhs - report.rhs;
    report.parameters["bracket_width"] = report.tail_bound.to_string(6);
    report.parameters["tail_method"] = "integral";
    // The omitted terms are positive, so pi^2/6 must sit in [lhs, lhs + tail].
    const bool bracketed = report.lhs.lower() <= report.rhs.upper() &&
                           report.rhs.lower() <= add_up(report.lhs.upper(), report.tail_bound);
    report.parameters["bracketed"] = flag(bracketed);
    report.verdict = bracketed && within_tolerance(report.residual, report.tail_bound, options.digits)
                         ? Verdict::pass
                         : Verdict::fail;
    return report;
}

IdentityReport catalog_verify(const std::string& name, const CatalogArgs& args, const VerifyOptions& options) {
    catalog_parameters(name);
    if (name == "richmond-szekeres") return richmond_szekeres_verify(args.N.value_or(100000), options);

    if (name == "sinh-theta") {
        const Rational theta = args.theta.value_or(Rational(1));
        if (theta.sign() <= 0) throw std::invalid_argument("sinh-theta requires theta > 0");
        IdentityReport report = lucas_pos_verify_numeric(
            [theta](Bits bits) {
                return NumericLucasParams(cosh(Ball::exact(theta, bits)) * Rational(2), Ball::exact(1, bits));
            },
            1, options, {{"theta", theta.to_string()}});
        const PrecisionBudget inner = inner_budget(options.digits, 0);
        const Ball closed = rogers_l(exp(Ball::exact(theta * Rational(-2), inner.working_bits + 32)), inner);
        const Ball gap = report.rhs - closed;
        return finish(std::move(report), name, "L(exp(-2 theta))", within_tolerance(gap, BigFloat(), options.digits));
    }

    if (name == "chebyshev-x") {
        const Rational x = above_one(args, name);
        const std::uint64_t k = any_k(args);
        const LucasParams params = LucasParams::rational(Rational(2) * x, Rational(1));
        const QuadraticElement root = QuadraticElement(x, Rational(1, 2), params.D_rational());  // x + sqrt(x^2-1)
        const bool agree = lucas_pos_rhs_argument(params, k) == root.pow(2 * k).reciprocal();
        IdentityReport report = lucas_pos_verify(params, k, options);
        report.parameters["x"] = x.to_string();
        return finish(std::move(report), name, "L((x + sqrt(x^2-1))^(-2k))", agree);
    }

    if (name == "repunit-x") {
        const Rational x = above_one(args, name);
        const std::uint64_t k = any_k(args);
        const LucasParams params = LucasParams::rational(x + Rational(1), x);
        const bool agree = lucas_pos_rhs_argument(params, k) == x.pow(-static_cast<std::int64_t>(k));
        IdentityReport report = lucas_pos_verify(params, k, options);
        report.parameters["x"] = x.to_string();
        return finish(std::move(report), name, "L(x^(-k))", agree);
    }

    if (name == "fib-even") {
        const std::uint64_t k = any_k(args);
        const LucasParams params = LucasParams::rational(3, 1);
        const bool agree = lucas_pos_rhs_argument(params, k) == golden().pow(4 * k).reciprocal();
        return finish(lucas_pos_verify(params, k, options), name, "L(phi^(-4k))", agree);
    }

    if (name == "fib-lucas-neg" || name == "pell" || name == "q-minus-3") {
        const std::uint64_t k = odd_k(args, name);
        LucasParams params = LucasParams::rational(1, -1);
        QuadraticElement closed = golden().pow(2 * k).reciprocal();
        std::string form = "L(phi^(-2k))";
        if (name == "pell") {
            params = LucasParams::rational(2, -1);
            closed = QuadraticElement(Rational(1), Rational(1, 2), Rational(8)).pow(2 * k).reciprocal();
            form = "L((1 + sqrt(2))^(-2k))";
        } else if (name == "q-minus-3") {
            params = LucasParams::rational(1, -3);
            closed = (Rational(6) / QuadraticElement(Rational(7), Rational(1), Rational(13))).pow(k);
            form = "L((6/(7 + sqrt(13)))^k)";
        }
        const bool agree = lucas_neg_rhs_argument(params, k) == closed;
        return finish(lucas_neg_verify(params, k, options), name, form, agree,
                      {{"split_agreement", flag(neg_from_pos_split_check(params, k, kCompanionTerms))}});
    }

    if (name == "sqrt5-k-odd") {
        const std::uint64_t k = odd_k(args, name);
        const LucasParams params = sqrt5_params();
        const bool agree = lucas_pos_rhs_argument(params, k) == golden().pow(2 * k).reciprocal();
        const bool split = neg_from_pos_split_check(LucasParams::rational(1, -1), k, kCompanionTerms);
        IdentityReport report = finish(lucas_pos_verify(params, k, options), name, "L(phi^(-2k))", agree,
                                       {{"split_agreement", flag(split)}});
        if (!split) report.verdict = Verdict::fail;
        return report;
    }

    // sqrt5-k-even: the same series as fib-even at k/2.
    const std::uint64_t k = even_k(args, name);
    const LucasParams params = sqrt5_params();
    const LucasParams fib_even = LucasParams::rational(3, 1);
    bool companion = even_k_companion_check(LucasParams::rational(1, -1), k, kCompanionTerms);
    for (std::uint64_t n = 1; n <= kCompanionTerms && companion; ++n) {
        companion = lucas_pos_term(params, k, n) == lucas_pos_term(fib_even, k / 2, n);
    }
    const bool agree = lucas_pos_rhs_argument(params, k) == golden().pow(2 * k).reciprocal();
    IdentityReport report = finish(lucas_pos_verify(params, k, options), name, "L(phi^(-2k))", agree,
                                   {{"companion_agreement", flag(companion)}});
    if (!companion) report.verdict = Verdict::fail;
    return report;
}

}  // namespace dilog
