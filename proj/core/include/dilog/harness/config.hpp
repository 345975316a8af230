#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace dilog {

/// Invalid flags, parameters or environment; maps to exit status 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string identity_id;
    /// Raw parameter strings keyed by flag name without dashes ("P", "pell-a", ...).
    std::map<std::string, std::string> parameters;
    int digits = 40;
    std::uint64_t max_terms = 10000;
    std::uint64_t seed = 0;
    /// Empty means standard output.
    std::string output_path;
    std::string format = "json";
    /// Partial-sums CSV destination; empty disables tracing.
    std::string trace_path;

    /// digits >= 10, max_terms >= 1, format in {json, text}.
    void validate() const;
};

inline constexpr int kMinDigits = 10;
inline constexpr int kDefaultDigits = 40;

/// DILOG_DIGITS when set, kDefaultDigits otherwise. ConfigError when the
/// variable is not an integer >= kMinDigits.
int default_digits();

}  // namespace dilog
