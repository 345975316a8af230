#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilog/exactnum/rational.hpp"
#include "dilog/series/report.hpp"

namespace dilog {

/// Name not present in the catalog.
class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Optional overrides; each entry supplies its own defaults.
struct CatalogArgs {
    std::optional<std::uint64_t> k;
    std::optional<Rational> x;
    std::optional<Rational> theta;
    std::optional<std::uint64_t> N;
};

/// Registry order: richmond-szekeres, sinh-theta, chebyshev-x, repunit-x,
/// fib-even, fib-lucas-neg, pell, q-minus-3, sqrt5-k-odd, sqrt5-k-even.
const std::vector<std::string>& catalog_names();

/// Which CatalogArgs fields an entry accepts ("k", "x", "theta", "N").
std::vector<std::string> catalog_parameters(const std::string& name);

/// Verifies the named instance and compares its right-hand side exactly (or
/// within enclosure for sinh-theta) with the closed form quoted for it,
/// recorded as the "closed_form" and "closed_form_agreement" parameters.
IdentityReport catalog_verify(const std::string& name, const CatalogArgs& args, const VerifyOptions& options);

/// sum_{n=2}^{N} L(1/n^2) plus the bound (pi^2/6 + 2 ln N + 2)/N on the rest,
/// against pi^2/6.
IdentityReport richmond_szekeres_verify(std::uint64_t N, const VerifyOptions& options);

/// (pi^2/6 + 2 ln N + 2) / N rounded up; bounds sum_{n>N} L(1/n^2).
BigFloat richmond_szekeres_tail(std::uint64_t N);

}  // namespace dilog
