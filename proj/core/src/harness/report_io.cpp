#include "dilog/harness/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dilog {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ball_json(const Ball& b) {
    return ordered_json{{"midpoint", b.midpoint().to_string()},
                        {"radius", b.radius().to_string()},
                        {"precision_bits", static_cast<long>(b.precision())}};
}

Ball ball_from(const ordered_json& j) {
    const Bits bits = j.at("precision_bits").get<long>();
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision_bits out of range");
    return Ball(BigFloat::parse(j.at("midpoint").get<std::string>(), bits),
                BigFloat::parse(j.at("radius").get<std::string>(), kRadiusBits));
}

Verdict verdict_from(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

std::string report_to_json(const IdentityReport& report) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    ordered_json doc;
    doc["identity_id"] = report.identity_id;
    doc["parameters"] = std::move(params);
    doc["digits"] = report.digits;
    doc["terms_used"] = report.terms_used;
    doc["lhs"] = ball_json(report.lhs);
    doc["rhs"] = ball_json(report.rhs);
    doc["tail_bound"] = report.tail_bound.to_string();
    doc["residual"] = ball_json(report.residual);
    doc["verdict"] = to_string(report.verdict);
    return doc.dump(2) + "\n";
}

IdentityReport report_from_json(const std::string& text) {
    try {
        const ordered_json doc = ordered_json::parse(text);
        IdentityReport r;
        r.identity_id = doc.at("identity_id").get<std::string>();
        for (const auto& [k, v] : doc.at("parameters").items()) r.parameters[k] = v.get<std::string>();
        r.digits = doc.at("digits").get<int>();
        r.terms_used = doc.at("terms_used").get<std::uint64_t>();
        r.lhs = ball_from(doc.at("lhs"));
        r.rhs = ball_from(doc.at("rhs"));
        r.tail_bound = BigFloat::parse(doc.at("tail_bound").get<std::string>(), kRadiusBits);
        r.residual = ball_from(doc.at("residual"));
        r.verdict = verdict_from(doc.at("verdict").get<std::string>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const IdentityReport& report) {
    const std::size_t shown = static_cast<std::size_t>(report.digits) + 5;
    std::ostringstream os;
    os << std::left;
    os << std::setw(16) << "identity" << report.identity_id << '\n';
    for (const auto& [k, v] : report.parameters) os << std::setw(16) << ("  " + k) << v << '\n';
    os << std::setw(16) << "digits" << report.digits << '\n';
    os << std::setw(16) << "terms" << report.terms_used << '\n';
    os << std::setw(16) << "lhs" << report.lhs.to_string(shown) << '\n';
    os << std::setw(16) << "rhs" << report.rhs.to_string(shown) << '\n';
    os << std::setw(16) << "tail" << report.tail_bound.to_string(6) << '\n';
    os << std::setw(16) << "residual" << report.residual.to_string(6) << '\n';
    os << std::setw(16) << "verdict" << to_string(report.verdict) << '\n';
    return os.str();
}

std::string emit_report(const IdentityReport& report, const std::string& format) {
    if (format == "json") return report_to_json(report);
    if (format == "text") return report_to_text(report);
    throw std::invalid_argument("unknown report format '" + format + "'");
}

void write_trace_csv(const IdentityReport& report, std::ostream& out) {
    const std::size_t shown = static_cast<std::size_t>(report.digits) + 5;
    out << "n,term,lhs_partial,tail_bound\n";
    for (const TraceRow& row : report.trace) {
        out << row.n << ',' << row.term.midpoint().to_string(shown) << ',' << row.lhs_partial.midpoint().to_string(shown)
            << ',' << row.tail_bound.to_string(8) << '\n';
    }
}

std::string suite_summary(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    os << std::left;
    for (const IdentityReport& r : reports) {
        os << std::setw(20) << r.identity_id << std::setw(6) << to_string(r.verdict) << std::right << std::setw(8)
           << r.terms_used << "  residual " << r.residual.midpoint().to_string(3) << std::left;
        if (auto it = r.parameters.find("failure"); it != r.parameters.end()) os << "  (" << it->second << ')';
        os << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace dilog
