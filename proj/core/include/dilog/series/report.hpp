#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dilog/numeric/ball.hpp"
#include "dilog/numeric/precision.hpp"

namespace dilog {

enum class Verdict { pass, fail };

std::string to_string(Verdict verdict);

/// One row of the partial-sum trace: the summed contribution at index n,
/// the running left-hand side and the tail bound certified at that point.
struct TraceRow {
    std::uint64_t n = 0;
    Ball term;
    Ball lhs_partial;
    BigFloat tail_bound;
};

struct IdentityReport {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    int digits = 40;
    std::uint64_t terms_used = 0;
    Ball lhs;
    Ball rhs;
    BigFloat tail_bound;
    Ball residual;
    Verdict verdict = Verdict::fail;
    /// Filled only when tracing is requested; not part of the JSON schema.
    std::vector<TraceRow> trace;
};

/// |residual.mid| <= residual.rad + tail + 10^-digits, with the right side
/// rounded upward.
bool within_tolerance(const Ball& residual, const BigFloat& tail, int digits);

struct VerifyOptions {
    int digits = 40;
    std::uint64_t max_terms = 10000;
    bool trace = false;
};

}  // namespace dilog
