#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dilog/series/report.hpp"

namespace dilog {

/// Deterministic JSON document. Enclosures are objects
/// {"midpoint", "radius", "precision_bits"} with decimal strings that read
/// back to the same binary values; tail_bound is a decimal string at
/// kRadiusBits. The trace is not part of the document.
std::string report_to_json(const IdentityReport& report);

/// Inverse of report_to_json. std::invalid_argument on malformed input.
IdentityReport report_from_json(const std::string& text);

/// Aligned human-readable rendering.
std::string report_to_text(const IdentityReport& report);

/// "json" or "text".
std::string emit_report(const IdentityReport& report, const std::string& format);

/// Header `n,term,lhs_partial,tail_bound`, one row per trace entry.
void write_trace_csv(const IdentityReport& report, std::ostream& out);

/// One line per report: identity, verdict, terms, residual midpoint.
std::string suite_summary(const std::vector<IdentityReport>& reports);

/// Writes `content` to `path`; std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace dilog
