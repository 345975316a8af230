#include "dilog/harness/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dilog/harness/config.hpp"
#include "dilog/harness/properties.hpp"
#include "dilog/harness/registry.hpp"
#include "dilog/harness/report_io.hpp"
#include "dilog/rogers/dilog.hpp"

namespace dilog {

namespace {

struct Output {
    std::ostream& out;
    std::string path;

    void emit(const std::string& content) const {
        if (path.empty()) {
            out << content;
        } else {
            write_file(path, content);
        }
    }
};

int verify_command(RunConfig config, std::ostream& out) {
    const IdentityReport report = run_identity(config);
    Output{out, config.output_path}.emit(emit_report(report, config.format));
    if (!config.trace_path.empty()) {
        std::ostringstream csv;
        write_trace_csv(report, csv);
        write_file(config.trace_path, csv.str());
    }
    return report.verdict == Verdict::pass ? kExitPass : kExitFail;
}

int suite_command(int digits, const std::string& format, const std::string& path, std::ostream& out) {
    if (format != "json" && format != "text") throw ConfigError("format must be json or text");
    std::vector<std::future<IdentityReport>> pending;
    for (const RegistryEntry& entry : registry()) {
        RunConfig config;
        config.identity_id = entry.name;
        config.digits = digits;
        pending.push_back(std::async(std::launch::async, [config] { return run_identity(config); }));
    }
    std::vector<IdentityReport> reports;
    for (auto& f : pending) reports.push_back(f.get());

    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.verdict == Verdict::pass; });
    if (format == "text") {
        Output{out, path}.emit(suite_summary(reports));
    } else {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const IdentityReport& r : reports) doc.push_back(nlohmann::ordered_json::parse(report_to_json(r)));
        Output{out, path}.emit(doc.dump(2) + "\n");
    }
    return all_pass ? kExitPass : kExitFail;
}

int properties_command(const PropertyOptions& options, std::vector<std::string> names, std::ostream& out) {
    if (names.empty()) names = property_suite_names();
    for (const std::string& n : names) {
        const auto& known = property_suite_names();
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            throw ConfigError("unknown property suite '" + n + "'");
        }
    }
    bool all_pass = true;
    out << "seed " << options.seed << '\n';
    for (const std::string& n : names) {
        const PropertyResult r = run_property_suite(n, options);
        all_pass = all_pass && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases << " failures=" << r.failures;
        if (!r.first_failure.empty()) out << "  first: " << r.first_failure;
        out << '\n';
    }
    return all_pass ? kExitPass : kExitFail;
}

int special_values_command(int digits, std::ostream& out) {
    const PrecisionBudget budget = PrecisionBudget::for_digits(digits);
    const Bits bits = budget.working_bits + 32;
    const QuadraticElement inv_phi(Rational(-1, 2), Rational(1, 2), 5);
    struct Row {
        std::string label;
        QuadraticElement x;
        std::string closed_form;
        Ball expected;
    };
    const std::vector<Row> rows{
        {"0", QuadraticElement::embed(0, 5), "0", Ball(bits)},
        {"1/2", QuadraticElement::embed(Rational(1, 2), 5), "pi^2/12", pi_squared_over(12, bits)},
        {"1/phi", inv_phi, "pi^2/10", pi_squared_over(10, bits)},
        {"1/phi^2", inv_phi * inv_phi, "pi^2/15", pi_squared_over(15, bits)},
        {"1", QuadraticElement::embed(1, 5), "pi^2/6", pi_squared_over(6, bits)},
    };
    bool all_pass = true;
    for (const Row& row : rows) {
        const Ball value = rogers_l(row.x, budget);
        const bool ok = value.overlaps(row.expected);
        all_pass = all_pass && ok;
        out << "L(" << row.label << ") = " << value.midpoint().to_string(static_cast<std::size_t>(digits)) << "  +/- "
            << value.radius().to_string(3) << "  " << row.closed_form << "  " << (ok ? "pass" : "fail") << '\n';
    }
    return all_pass ? kExitPass : kExitFail;
}

void list_command(std::ostream& out) {
    for (const RegistryEntry& e : registry()) {
        out << e.name;
        for (const std::string& k : e.keys) {
            const auto it = e.defaults.find(k);
            out << " --" << k;
            if (it != e.defaults.end()) out << '=' << it->second;
        }
        out << "  # " << e.summary << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rigorous verification of Rogers dilogarithm series identities", "dilog"};
    app.require_subcommand(1);

    RunConfig config;
    std::optional<int> digits;
    std::string suite_format = "text";
    PropertyOptions prop_options;
    std::vector<std::string> prop_names;

    CLI::App* verify = app.add_subcommand("verify", "Verify one identity and emit its report");
    verify->add_option("--identity", config.identity_id, "Registry name")->required();
    std::map<std::string, std::string> raw_params;
    for (const std::string& key : all_parameter_keys()) {
        verify->add_option_function<std::string>(
            "--" + key, [&raw_params, key](const std::string& v) { raw_params[key] = v; }, "Parameter " + key);
    }
    verify->add_option("--digits", digits, "Target digits");
    verify->add_option("--max-terms", config.max_terms, "Term budget per series");
    verify->add_option("--format", config.format, "json or text");
    verify->add_option("--output", config.output_path, "Report destination (default stdout)");
    verify->add_option("--trace", config.trace_path, "Partial-sums CSV destination");

    CLI::App* suite = app.add_subcommand("suite", "Verify every registry entry at its defaults");
    suite->add_option("--digits", digits, "Target digits");
    suite->add_option("--format", suite_format, "text or json");
    suite->add_option("--output", config.output_path, "Summary destination (default stdout)");

    CLI::App* props = app.add_subcommand("properties", "Run the seeded property suites");
    props->add_option("--seed", prop_options.seed, "Generator seed");
    props->add_option("--suite", prop_names, "Suite names (default all)");
    props->add_option("--digits", digits, "Target digits for numeric suites");

    CLI::App* special = app.add_subcommand("special-values", "Closed-form values of L");
    special->add_option("--digits", digits, "Target digits");

    CLI::App* list = app.add_subcommand("list", "List registry entries and their defaults");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "dilog: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const int d = digits ? *digits : default_digits();
        if (*verify) {
            config.digits = d;
            config.parameters = raw_params;
            return verify_command(config, out);
        }
        if (d < kMinDigits) throw ConfigError("digits must be at least " + std::to_string(kMinDigits));
        if (*suite) return suite_command(d, suite_format, config.output_path, out);
        if (*props) {
            prop_options.digits = d;
            return properties_command(prop_options, prop_names, out);
        }
        if (*special) return special_values_command(d, out);
        if (*list) {
            list_command(out);
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        err << "dilog: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "dilog: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "dilog: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace dilog
