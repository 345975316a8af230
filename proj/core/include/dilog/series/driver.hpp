#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilog/numeric/ball.hpp"
#include "dilog/numeric/precision.hpp"
#include "dilog/series/accelerate.hpp"
#include "dilog/series/report.hpp"

namespace dilog {

/// Explicit terms summed per sub-series before an analytic tail, when one
/// is available, takes over.
inline constexpr std::uint64_t kExplicitTermCap = 500;

/// The series could not be truncated within the term limit.
class TruncationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// L(t_n) and a certified upper bound for t_n.
struct SeriesTerm {
    Ball value;
    BigFloat upper;
};

struct SubSeries {
    std::string label;
    std::uint64_t start = 1;
    std::function<SeriesTerm(std::uint64_t n)> term;
    /// t_(n+1) <= ratio * t_n for every n >= start.
    BigFloat ratio;
    /// sum_{n >= first} L(t_n) with remainder <= tol, when available.
    std::function<std::optional<AnalyticTail>(std::uint64_t first, const BigFloat& tol)> analytic_tail;
};

struct SeriesSum {
    Ball value;
    BigFloat tail;
    std::uint64_t terms = 0;
    std::string tail_method = "geometric";
    std::vector<TraceRow> trace;
};

/// Sums the sub-series in lockstep until each certified tail is at most
/// tail_allowance / parts.size(). Throws TruncationFailure past max_terms.
SeriesSum sum_series(const std::vector<SubSeries>& parts, const BigFloat& tail_allowance, std::uint64_t max_terms,
                     bool trace, Bits bits);

/// What one attempt at a given inner budget produces.
struct SeriesIdentity {
    std::vector<SubSeries> parts;
    Ball rhs;
    std::map<std::string, std::string> notes;
    /// False when an exact cross-check recorded in notes failed.
    bool checks_ok = true;
};

/// Runs build() at digits + 10 with escalating precision until both sides
/// carry radius <= 10^-digits / 2, then fills an IdentityReport. Precision
/// and truncation failures yield a fail verdict with a "failure" parameter.
IdentityReport verify_series(const std::string& identity_id, std::map<std::string, std::string> parameters,
                             const VerifyOptions& options,
                             const std::function<SeriesIdentity(const PrecisionBudget& inner)>& build);

/// The inner budget used for attempt number `attempt` (0-based).
PrecisionBudget inner_budget(int digits, int attempt);

}  // namespace dilog
