#include "dilog/harness/properties.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dilog/harness/registry.hpp"
#include "dilog/harness/report_io.hpp"
#include "dilog/lucas/lucas.hpp"
#include "dilog/rogers/dilog.hpp"
#include "dilog/series/pell.hpp"
#include "dilog/series/tail.hpp"

namespace dilog {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }
    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = describe();
    }
    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

template <class... Args>
std::string describe(const Args&... parts) {
    std::ostringstream os;
    ((os << parts), ...);
    return os.str();
}

const Rational& random_radicand(Rng& rng) {
    static const std::vector<Rational> radicands{2, 3, 5, 6, 7, 10, 13, 17, Rational(5, 4), Rational(2, 3), 4};
    return radicands[below(rng, radicands.size())];
}

PrecisionBudget budget_for(int digits) { return PrecisionBudget::for_digits(digits); }

bool below_with_radii(const Ball& x, const Ball& y) {
    return x.midpoint() < add_up(y.midpoint(), add_up(x.radius(), y.radius()), y.precision());
}

// exactnum

PropertyResult field_axioms(Rng& rng, const PropertyOptions&) {
    Recorder rec("quadratic-field-axioms");
    for (int i = 0; i < 1000; ++i) {
        const Rational& d = random_radicand(rng);
        const QuadraticElement x = random_quadratic(rng, d);
        const QuadraticElement y = random_quadratic(rng, d);
        const QuadraticElement z = random_quadratic(rng, d);
        const bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x + y == y + x &&
                        x * y == y * x && x * (y + z) == x * y + x * z;
        rec.check(ok, [&] { return describe("x=", x, " y=", y, " z=", z); });
    }
    return rec.take();
}

PropertyResult norm_multiplicative(Rng& rng, const PropertyOptions&) {
    Recorder rec("quadratic-norm");
    for (int i = 0; i < 1000; ++i) {
        const Rational& d = random_radicand(rng);
        const QuadraticElement x = random_quadratic(rng, d);
        const QuadraticElement y = random_quadratic(rng, d);
        rec.check((x * y).norm() == x.norm() * y.norm(), [&] { return describe("x=", x, " y=", y); });
    }
    return rec.take();
}

PropertyResult power_law(Rng& rng, const PropertyOptions&) {
    Recorder rec("quadratic-pow");
    for (int i = 0; i < 4; ++i) {
        const QuadraticElement x = random_quadratic(rng, random_radicand(rng));
        std::vector<QuadraticElement> powers;
        for (std::uint64_t k = 0; k <= 128; ++k) powers.push_back(quad_pow(x, k));
        for (std::uint64_t m = 0; m <= 64; ++m) {
            for (std::uint64_t n = 0; n <= 64; ++n) {
                rec.check(powers[m + n] == quad_mul(powers[m], powers[n]),
                          [&] { return describe("x=", x, " m=", m, " n=", n); });
            }
        }
    }
    return rec.take();
}

PropertyResult ordering(Rng& rng, const PropertyOptions&) {
    Recorder rec("quadratic-ordering");
    for (int i = 0; i < 1000; ++i) {
        const Rational& d = random_radicand(rng);
        QuadraticElement x = random_quadratic(rng, d);
        QuadraticElement y = random_quadratic(rng, d);
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        rec.check(below_with_radii(quad_to_real(x, 96), quad_to_real(y, 96)),
                  [&] { return describe("x=", x, " y=", y); });
    }
    return rec.take();
}

// lucas

PropertyResult fast_doubling(Rng&, const PropertyOptions&) {
    Recorder rec("lucas-fast-doubling");
    for (const LucasParams& p : catalog_lucas_params()) {
        QuadraticElement u_prev = p.embed(0);
        QuadraticElement u = p.embed(1);
        QuadraticElement v_prev = p.embed(2);
        QuadraticElement v = p.P();
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            const LucasPair<QuadraticElement> fast = lucas_uv(p, n);
            rec.check(fast.u == u && fast.v == v, [&] { return describe(p.to_string(), " n=", n); });
            QuadraticElement u_next = p.P() * u - p.Q() * u_prev;
            QuadraticElement v_next = p.P() * v - p.Q() * v_prev;
            u_prev = std::exchange(u, std::move(u_next));
            v_prev = std::exchange(v, std::move(v_next));
        }
    }
    return rec.take();
}

PropertyResult binet(Rng&, const PropertyOptions&) {
    Recorder rec("lucas-binet");
    for (const LucasParams& p : catalog_lucas_params()) {
        if (!p.is_rational()) continue;
        const NumericLucasParams numeric = NumericLucasParams::from_exact(p, 256);
        const Ball alpha = numeric.alpha();
        for (std::uint64_t n = 0; n <= 200; ++n) {
            const bool exact = binet_check(p, n);
            const bool numeric_ok = quad_to_real(alpha_power_exact(p, n), 256).overlaps(pow(alpha, n));
            rec.check(exact && numeric_ok, [&] { return describe(p.to_string(), " n=", n); });
        }
    }
    return rec.take();
}

PropertyResult norm_identity(Rng&, const PropertyOptions&) {
    Recorder rec("lucas-norm");
    for (const LucasParams& p : catalog_lucas_params()) {
        for (std::uint64_t n = 0; n <= 500; ++n) {
            rec.check(norm_identity_check(p, n), [&] { return describe(p.to_string(), " n=", n); });
        }
    }
    return rec.take();
}

PropertyResult divisibility(Rng&, const PropertyOptions&) {
    Recorder rec("lucas-divisibility");
    for (const LucasParams& p : integer_lucas_params()) {
        for (std::uint64_t m = 1; m <= 60; ++m) {
            for (std::uint64_t n = 1; n <= 60; ++n) {
                bool ok = divisibility_check(p, m, n);
                if (m <= 50 && n <= 50) ok = ok && strong_divisibility_check(p, m, n);
                rec.check(ok, [&] { return describe(p.to_string(), " m=", m, " n=", n); });
            }
        }
    }
    return rec.take();
}

PropertyResult transform(Rng&, const PropertyOptions&) {
    Recorder rec("lucas-transform");
    for (const auto& [P, Q] : std::vector<std::pair<long, long>>{{1, -1}, {2, -1}, {1, -3}}) {
        const LucasParams p = LucasParams::rational(P, Q);
        for (std::uint64_t n = 0; n <= 100; ++n) {
            rec.check(transform_case_check(p, n), [&] { return describe(p.to_string(), " n=", n); });
        }
    }
    return rec.take();
}

// rogers

PropertyResult monotone(Rng& rng, const PropertyOptions& opts) {
    Recorder rec("rogers-monotone");
    const PrecisionBudget b = budget_for(opts.digits);
    for (int i = 0; i < 100; ++i) {
        Rational x = below(rng, 8) == 0 ? Rational(0) : random_unit_rational(rng, 200);
        Rational y = below(rng, 8) == 0 ? Rational(1) : random_unit_rational(rng, 200);
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        rec.check(below_with_radii(rogers_l(x, b), rogers_l(y, b)), [&] { return describe("x=", x, " y=", y); });
    }
    return rec.take();
}

PropertyResult nested(Rng& rng, const PropertyOptions& opts) {
    Recorder rec("rogers-nested");
    for (int i = 0; i < 50; ++i) {
        const Rational x = random_unit_rational(rng, 1000);
        const Ball coarse = rogers_l(x, budget_for(opts.digits));
        const Ball fine = rogers_l(x, budget_for(2 * opts.digits));
        rec.check(coarse.contains(fine.midpoint().to_rational()), [&] { return describe("x=", x); });
    }
    return rec.take();
}

PropertyResult reflection(Rng& rng, const PropertyOptions& opts) {
    Recorder rec("rogers-reflection");
    const PrecisionBudget b = budget_for(opts.digits);
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_unit_rational(rng, 1000);
        rec.check(reflection_residual(x, b).contains_zero(), [&] { return describe("x=", x); });
    }
    return rec.take();
}

PropertyResult abel(Rng& rng, const PropertyOptions& opts) {
    Recorder rec("rogers-abel");
    const PrecisionBudget b = budget_for(opts.digits);
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_unit_rational(rng, 1000);
        const Rational y = random_unit_rational(rng, 1000);
        rec.check(abel_residual(x, y, b).contains_zero(), [&] { return describe("x=", x, " y=", y); });
    }
    return rec.take();
}

PropertyResult closed_forms(Rng&, const PropertyOptions& opts) {
    Recorder rec("rogers-closed-forms");
    const PrecisionBudget b = budget_for(opts.digits);
    const Bits bits = b.working_bits + 32;
    const QuadraticElement inv_phi(Rational(-1, 2), Rational(1, 2), 5);
    const std::vector<std::pair<QuadraticElement, Ball>> cases{
        {QuadraticElement::embed(0, 5), Ball(bits)},
        {QuadraticElement::embed(Rational(1, 2), 5), pi_squared_over(12, bits)},
        {inv_phi, pi_squared_over(10, bits)},
        {inv_phi * inv_phi, pi_squared_over(15, bits)},
        {QuadraticElement::embed(1, 5), pi_squared_over(6, bits)},
    };
    for (const auto& [x, expected] : cases) {
        rec.check(rogers_l(x, b).overlaps(expected), [&] { return describe("x=", x); });
    }
    return rec.take();
}

// series

PropertyResult xy_recurrence(Rng& rng, const PropertyOptions&) {
    Recorder rec("xy-recurrence");
    for (int i = 0; i < 50; ++i) {
        const TwoParamInstance inst = random_two_param(rng, 50);
        for (std::uint64_t n = 0; n <= 100; ++n) {
            const bool ok = recurrence_check(inst, n) && summand_check(inst, n) &&
                            (n == 0 || shift_check(inst, n));
            rec.check(ok, [&] { return describe("a=", inst.a(), " b=", inst.b(), " n=", n); });
        }
    }
    return rec.take();
}

PropertyResult cassini(Rng& rng, const PropertyOptions&) {
    Recorder rec("cassini");
    for (int i = 0; i < 20; ++i) {
        const TwoParamInstance inst = random_two_param(rng, 50);
        for (std::uint64_t n = 1; n <= 300; ++n) {
            rec.check(cassini_check(inst, n), [&] { return describe("a=", inst.a(), " b=", inst.b(), " n=", n); });
        }
    }
    return rec.take();
}

PropertyResult limits(Rng& rng, const PropertyOptions&) {
    Recorder rec("two-param-limit");
    for (int i = 0; i < 50; ++i) {
        const TwoParamInstance inst = random_two_param(rng, 50);
        rec.check(limit_check(inst, 200), [&] { return describe("a=", inst.a(), " b=", inst.b()); });
    }
    return rec.take();
}

PropertyResult telescoping(Rng& rng, const PropertyOptions& opts) {
    Recorder rec("telescoping");
    const PrecisionBudget b = budget_for(opts.digits);
    for (int i = 0; i < 20; ++i) {
        const TwoParamInstance inst = random_two_param(rng, 30);
        const std::uint64_t N = 1 + below(rng, 20);
        Ball sum(b.working_bits);
        for (std::uint64_t n = 0; n < N; ++n) sum += rogers_l(theorem_main_term(inst, n), b);
        const auto [xN, yN] = xy_seq(inst, N);
        const Ball rhs = rogers_l(inst.a(), b) + rogers_l(inst.b(), b) - rogers_l(xN, b) - rogers_l(yN, b);
        rec.check((sum - rhs).contains_zero(),
                  [&] { return describe("a=", inst.a(), " b=", inst.b(), " N=", N); });
    }
    return rec.take();
}

PropertyResult pell_divisibility(Rng&, const PropertyOptions&) {
    Recorder rec("pell-divisibility");
    const std::vector<std::array<long, 3>> solutions{{3, 2, 2}, {1, 1, 2}, {2, 1, 5}, {5, 2, 6},
                                                     {8, 3, 7}, {7, 4, 3}, {3, 1, 10}, {18, 5, 13}};
    for (const auto& [a, b, n] : solutions) {
        const PellSolution sol(a, b, Integer(n));
        bool powers = true;
        for (std::uint64_t k = 1; k <= 50; ++k) powers = powers && pell_power_check(sol, k);
        rec.check(powers && pell_divisibility_check(sol, 50),
                  [&] { return describe("(a, b, n) = (", a, ", ", b, ", ", n, ")"); });
    }
    return rec.take();
}

PropertyResult tail_soundness(Rng& rng, const PropertyOptions&) {
    Recorder rec("tail-soundness");
    for (int i = 0; i < 20; ++i) {
        const GeometricConfig c = random_geometric_config(rng);
        const auto [brute, bound] = tail_soundness_sample(c, 10000);
        rec.check(brute <= bound, [&] {
            return describe("t0=", c.t0, " r=", c.r, " brute=", brute.to_string(10), " bound=", bound.to_string(10));
        });
    }
    return rec.take();
}

// harness

std::vector<RunConfig> report_configs(Rng& rng) {
    const TwoParamInstance inst = random_two_param(rng, 20);
    std::vector<RunConfig> configs(4);
    configs[0].identity_id = "theorem-main";
    configs[0].parameters = {{"a", inst.a().to_string()}, {"b", inst.b().to_string()}};
    configs[1].identity_id = "lucas-neg";
    configs[2].identity_id = "bridgeman";
    configs[3].identity_id = "abel";
    for (RunConfig& c : configs) c.digits = 20;
    return configs;
}

PropertyResult report_determinism(Rng& rng, const PropertyOptions&) {
    Recorder rec("report-determinism");
    for (const RunConfig& c : report_configs(rng)) {
        rec.check(report_to_json(run_identity(c)) == report_to_json(run_identity(c)),
                  [&] { return describe(c.identity_id); });
    }
    return rec.take();
}

PropertyResult report_round_trip(Rng& rng, const PropertyOptions&) {
    Recorder rec("report-round-trip");
    for (const RunConfig& c : report_configs(rng)) {
        const IdentityReport r = run_identity(c);
        const IdentityReport back = report_from_json(report_to_json(r));
        const auto same_ball = [](const Ball& x, const Ball& y) {
            return x.midpoint() == y.midpoint() && x.radius() == y.radius() && x.precision() == y.precision();
        };
        const bool ok = back.identity_id == r.identity_id && back.parameters == r.parameters &&
                        back.digits == r.digits && back.terms_used == r.terms_used && same_ball(back.lhs, r.lhs) &&
                        same_ball(back.rhs, r.rhs) && same_ball(back.residual, r.residual) &&
                        back.tail_bound == r.tail_bound && back.verdict == r.verdict;
        rec.check(ok, [&] { return describe(c.identity_id); });
    }
    return rec.take();
}

using Suite = PropertyResult (*)(Rng&, const PropertyOptions&);

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> all{
        {"quadratic-field-axioms", field_axioms},
        {"quadratic-norm", norm_multiplicative},
        {"quadratic-pow", power_law},
        {"quadratic-ordering", ordering},
        {"lucas-fast-doubling", fast_doubling},
        {"lucas-binet", binet},
        {"lucas-norm", norm_identity},
        {"lucas-divisibility", divisibility},
        {"lucas-transform", transform},
        {"rogers-monotone", monotone},
        {"rogers-nested", nested},
        {"rogers-reflection", reflection},
        {"rogers-abel", abel},
        {"rogers-closed-forms", closed_forms},
        {"xy-recurrence", xy_recurrence},
        {"cassini", cassini},
        {"two-param-limit", limits},
        {"telescoping", telescoping},
        {"pell-divisibility", pell_divisibility},
        {"tail-soundness", tail_soundness},
        {"report-determinism", report_determinism},
        {"report-round-trip", report_round_trip},
    };
    return all;
}

}  // namespace

Rational random_unit_rational(Rng& rng, std::uint64_t max_den) {
    const std::uint64_t den = 2 + below(rng, max_den - 1);
    const std::uint64_t num = 1 + below(rng, den - 1);
    return Rational(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
}

Rational random_rational(Rng& rng, std::int64_t max_num, std::uint64_t max_den) {
    const long num = static_cast<long>(below(rng, 2 * static_cast<std::uint64_t>(max_num) + 1)) - max_num;
    const long den = static_cast<long>(1 + below(rng, max_den));
    return Rational(Integer(num), Integer(den));
}

QuadraticElement random_quadratic(Rng& rng, const Rational& radicand) {
    Rational a = random_rational(rng, 20, 9);
    Rational b = random_rational(rng, 20, 9);
    return QuadraticElement(std::move(a), std::move(b), radicand);
}

TwoParamInstance random_two_param(Rng& rng, std::uint64_t max_den) {
    for (;;) {
        Rational a = random_unit_rational(rng, max_den);
        Rational b = random_unit_rational(rng, max_den);
        if (a != b) return TwoParamInstance(std::move(a), std::move(b));
    }
}

GeometricConfig random_geometric_config(Rng& rng) {
    const std::uint64_t den = 2 + below(rng, 99);
    const std::uint64_t num = 1 + below(rng, den / 2);
    return {Rational(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den))),
            random_unit_rational(rng, 50)};
}

std::vector<LucasParams> catalog_lucas_params() {
    std::vector<LucasParams> out;
    for (const auto& [P, Q] : std::vector<std::pair<long, long>>{
             {1, -1}, {3, 1}, {6, 1}, {3, 2}, {2, -1}, {1, -3}, {4, 1}, {11, 10}, {7, 1}}) {
        out.push_back(LucasParams::rational(P, Q));
    }
    out.emplace_back(QuadraticElement::root(5), QuadraticElement::embed(1, 5));
    return out;
}

std::vector<LucasParams> integer_lucas_params() {
    std::vector<LucasParams> out;
    for (const LucasParams& p : catalog_lucas_params()) {
        if (p.is_rational() && p.P_rational().is_integer() && p.Q_rational().is_integer()) out.push_back(p);
    }
    return out;
}

const std::vector<std::string>& property_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

PropertyResult run_property_suite(const std::string& name, const PropertyOptions& options) {
    for (const auto& [suite_name, fn] : suites()) {
        if (suite_name != name) continue;
        Rng rng(options.seed ^ fnv1a(name));
        return fn(rng, options);
    }
    throw std::invalid_argument("unknown property suite '" + name + "'");
}

std::pair<BigFloat, BigFloat> tail_soundness_sample(const GeometricConfig& config, std::uint64_t terms) {
    const PrecisionBudget b = PrecisionBudget::for_digits(20);
    const BigFloat r_up = BigFloat::from_rational(config.r, kRadiusBits, MPFR_RNDU);
    BigFloat t = BigFloat::from_rational(config.t0, kRadiusBits, MPFR_RNDU);
    BigFloat brute(kRadiusBits);
    for (std::uint64_t j = 0; j < terms; ++j) {
        brute = add_up(brute, rogers_l(t.to_rational(), b).upper());
        t = mul_up(t, r_up);
    }
    return {brute, tail_bound(config.t0, config.r)};
}

}  // namespace dilog
