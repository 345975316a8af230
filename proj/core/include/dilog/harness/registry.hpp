#pragma once

#include <map>
#include <string>
#include <vector>

#include "dilog/exactnum/rational.hpp"
#include "dilog/harness/config.hpp"
#include "dilog/series/report.hpp"

namespace dilog {

struct RegistryEntry {
    std::string name;
    /// Parameter keys the entry accepts.
    std::vector<std::string> keys;
    /// Values used when a key is not given; `suite` runs with these alone.
    std::map<std::string, std::string> defaults;
    std::string summary;
};

/// Fixed order; `suite` reports in this order.
const std::vector<RegistryEntry>& registry();

/// ConfigError for unknown names.
const RegistryEntry& find_entry(const std::string& name);

/// Every parameter key any entry accepts.
const std::vector<std::string>& all_parameter_keys();

/// Runs one identity. Unknown identities, keys the identity does not take
/// and malformed values raise ConfigError.
IdentityReport run_identity(const RunConfig& config);

/// L(x) + L(1-x) against pi^2/6.
IdentityReport reflection_report(const Rational& x, int digits);
/// L(x) + L(y) against L(xy) + L(x(1-y)/(1-xy)) + L(y(1-x)/(1-xy)).
IdentityReport abel_report(const Rational& x, const Rational& y, int digits);

/// "p", "p/q" or an exact decimal; ConfigError otherwise.
Rational parse_rational_value(const std::string& key, const std::string& text);

}  // namespace dilog
