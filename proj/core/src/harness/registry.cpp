#include "dilog/harness/registry.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "dilog/lucas/params.hpp"
#include "dilog/rogers/dilog.hpp"
#include "dilog/series/catalog.hpp"
#include "dilog/series/driver.hpp"
#include "dilog/series/lucas_series.hpp"
#include "dilog/series/pell.hpp"
#include "dilog/series/theorem.hpp"

namespace dilog {

namespace {

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> entries{
        {"theorem-main", {"a", "b"}, {{"a", "1/2"}, {"b", "1/3"}}, "two-parameter series"},
        {"corollary", {"t"}, {{"t", "1/3"}}, "two-parameter series at a = (1+t)/2, b = (1-t)/2"},
        {"lucas-pos", {"P", "Q", "k"}, {{"P", "3"}, {"Q", "1"}, {"k", "1"}}, "Lucas series, Q > 0"},
        {"lucas-neg", {"P", "Q", "k"}, {{"P", "1"}, {"Q", "-1"}, {"k", "1"}}, "Lucas series, Q < 0, odd k"},
        {"bridgeman", {"pell-a", "pell-b", "pell-n"}, {{"pell-a", "3"}, {"pell-b", "2"}, {"pell-n", "2"}},
         "Pell-unit series"},
        {"reflection", {"x"}, {{"x", "1/3"}}, "L(x) + L(1-x) = pi^2/6"},
        {"abel", {"x", "y"}, {{"x", "3/10"}, {"y", "7/10"}}, "five-term relation"},
    };
    const std::map<std::string, std::pair<std::map<std::string, std::string>, std::string>> catalog{
        {"richmond-szekeres", {{{"N", "100000"}}, "sum_{n>=2} L(1/n^2) = pi^2/6 by partial sum and tail"}},
        {"sinh-theta", {{{"theta", "1"}}, "P = 2cosh(theta), Q = 1 on the numeric path"}},
        {"chebyshev-x", {{{"x", "2"}, {"k", "1"}}, "P = 2x, Q = 1"}},
        {"repunit-x", {{{"x", "2"}, {"k", "1"}}, "P = x+1, Q = x"}},
        {"fib-even", {{{"k", "1"}}, "P = 3, Q = 1; right side L(phi^-4k)"}},
        {"fib-lucas-neg", {{{"k", "1"}}, "P = 1, Q = -1; right side L(phi^-2k)"}},
        {"pell", {{{"k", "1"}}, "P = 2, Q = -1; right side L((1+sqrt2)^-2k)"}},
        {"q-minus-3", {{{"k", "1"}}, "P = 1, Q = -3"}},
        {"sqrt5-k-odd", {{{"k", "1"}}, "P = sqrt5, Q = 1, odd k"}},
        {"sqrt5-k-even", {{{"k", "2"}}, "P = sqrt5, Q = 1, even k"}},
    };
    for (const std::string& name : catalog_names()) {
        const auto& [defaults, summary] = catalog.at(name);
        entries.push_back({name, catalog_parameters(name), defaults, summary});
    }
    return entries;
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("--" + key + " expects a nonnegative integer, got '" + text + "'");
    }
    return value;
}

// "sqrt(r)" or a rational.
QuadraticElement parse_field_value(const std::string& key, const std::string& text, Rational* radicand) {
    if (text.rfind("sqrt(", 0) == 0 && text.size() > 6 && text.back() == ')') {
        const Rational r = parse_rational_value(key, text.substr(5, text.size() - 6));
        if (r.sign() < 0) throw ConfigError("--" + key + ": negative radicand");
        *radicand = r;
        return QuadraticElement::root(r);
    }
    return QuadraticElement::embed(parse_rational_value(key, text), Rational(0));
}

LucasParams parse_lucas(const std::map<std::string, std::string>& p) {
    Rational radicand(0);
    const QuadraticElement P = parse_field_value("P", p.at("P"), &radicand);
    const Rational Q = parse_rational_value("Q", p.at("Q"));
    if (radicand.is_zero()) return LucasParams::rational(*P.as_rational(), Q);
    return LucasParams(P, QuadraticElement::embed(Q, radicand));
}

class Params {
public:
    Params(const RegistryEntry& entry, const std::map<std::string, std::string>& given) : values_(entry.defaults) {
        for (const auto& [key, value] : given) {
            if (std::find(entry.keys.begin(), entry.keys.end(), key) == entry.keys.end()) {
                throw ConfigError("identity '" + entry.name + "' does not take --" + key);
            }
            values_[key] = value;
        }
    }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& raw(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw ConfigError("missing --" + key);
        return it->second;
    }
    Rational rational(const std::string& key) const { return parse_rational_value(key, raw(key)); }
    std::uint64_t count(const std::string& key) const { return parse_count(key, raw(key)); }
    const std::map<std::string, std::string>& all() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

IdentityReport residual_report(std::string id, std::map<std::string, std::string> parameters, int digits,
                               const std::function<std::pair<Ball, Ball>(const PrecisionBudget&)>& sides) {
    IdentityReport report;
    report.identity_id = std::move(id);
    report.parameters = std::move(parameters);
    report.digits = digits;
    try {
        auto [lhs, rhs] = sides(inner_budget(digits, 0));
        report.lhs = std::move(lhs);
        report.rhs = std::move(rhs);
    } catch (const PrecisionFailure& e) {
        report.parameters["failure"] = std::string("precision: ") + e.what();
        report.verdict = Verdict::fail;
        return report;
    }
    report.residual = report.lhs - report.rhs;
    report.verdict = within_tolerance(report.residual, report.tail_bound, digits) ? Verdict::pass : Verdict::fail;
    return report;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build_registry();
    return entries;
}

const RegistryEntry& find_entry(const std::string& name) {
    for (const RegistryEntry& e : registry()) {
        if (e.name == name) return e;
    }
    throw ConfigError("unknown identity '" + name + "'");
}

const std::vector<std::string>& all_parameter_keys() {
    static const std::vector<std::string> keys = [] {
        std::set<std::string> seen;
        std::vector<std::string> out;
        for (const RegistryEntry& e : registry()) {
            for (const std::string& k : e.keys) {
                if (seen.insert(k).second) out.push_back(k);
            }
        }
        return out;
    }();
    return keys;
}

Rational parse_rational_value(const std::string& key, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw ConfigError("--" + key + " expects p, p/q or an exact decimal, got '" + text + "'");
    }
}

IdentityReport reflection_report(const Rational& x, int digits) {
    if (x.sign() < 0 || x > Rational(1)) throw ConfigError("reflection requires 0 <= x <= 1");
    return residual_report("reflection", {{"x", x.to_string()}}, digits, [&](const PrecisionBudget& b) {
        return std::pair{rogers_l(x, b) + rogers_l(Rational(1) - x, b), pi_squared_over(6, b.working_bits)};
    });
}

IdentityReport abel_report(const Rational& x, const Rational& y, int digits) {
    const Rational one(1);
    if (x.sign() <= 0 || x >= one || y.sign() <= 0 || y >= one) throw ConfigError("abel requires 0 < x, y < 1");
    return residual_report("abel", {{"x", x.to_string()}, {"y", y.to_string()}}, digits, [&](const PrecisionBudget& b) {
        const Rational xy = x * y;
        return std::pair{rogers_l(x, b) + rogers_l(y, b),
                         rogers_l(xy, b) + rogers_l(x * (one - y) / (one - xy), b) +
                             rogers_l(y * (one - x) / (one - xy), b)};
    });
}

IdentityReport run_identity(const RunConfig& config) {
    config.validate();
    const RegistryEntry& entry = find_entry(config.identity_id);
    const Params p(entry, config.parameters);
    VerifyOptions options;
    options.digits = config.digits;
    options.max_terms = config.max_terms;
    options.trace = !config.trace_path.empty();

    const std::string& id = entry.name;
    if (id == "theorem-main") return theorem_main_verify(TwoParamInstance(p.rational("a"), p.rational("b")), options);
    if (id == "corollary") return corollary_verify(p.rational("t"), options);
    if (id == "lucas-pos") return lucas_pos_verify(parse_lucas(p.all()), p.count("k"), options);
    if (id == "lucas-neg") return lucas_neg_verify(parse_lucas(p.all()), p.count("k"), options);
    if (id == "bridgeman") {
        const Rational n = p.rational("pell-n");
        if (!n.is_integer()) throw ConfigError("--pell-n must be an integer");
        return bridgeman_verify(PellSolution(p.rational("pell-a"), p.rational("pell-b"), n.numerator()), options);
    }
    if (id == "reflection") return reflection_report(p.rational("x"), config.digits);
    if (id == "abel") return abel_report(p.rational("x"), p.rational("y"), config.digits);

    CatalogArgs args;
    if (p.has("k")) args.k = p.count("k");
    if (p.has("x")) args.x = p.rational("x");
    if (p.has("theta")) args.theta = p.rational("theta");
    if (p.has("N")) args.N = p.count("N");
    return catalog_verify(id, args, options);
}

}  // namespace dilog
