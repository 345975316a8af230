#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dilog/exactnum/quadratic.hpp"
#include "dilog/exactnum/rational.hpp"
#include "dilog/lucas/params.hpp"
#include "dilog/series/two_param.hpp"

namespace dilog {

using Rng = std::mt19937_64;

/// Uniform over {num/den : 0 < num < den <= max_den}, max_den >= 2.
Rational random_unit_rational(Rng& rng, std::uint64_t max_den);
/// num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, std::int64_t max_num, std::uint64_t max_den);
/// Random element of Q(sqrt(radicand)).
QuadraticElement random_quadratic(Rng& rng, const Rational& radicand);
/// Random a != b in (0, 1) with denominators <= max_den.
TwoParamInstance random_two_param(Rng& rng, std::uint64_t max_den);

/// A first omitted term t0 in (0, 1/2] and a ratio r in (0, 1).
struct GeometricConfig {
    Rational t0;
    Rational r;
};
GeometricConfig random_geometric_config(Rng& rng);

/// Lucas parameters used across the registry and catalog.
std::vector<LucasParams> catalog_lucas_params();
/// Integer, coprime (P, Q) pairs among them.
std::vector<LucasParams> integer_lucas_params();

struct PropertyOptions {
    std::uint64_t seed = 0;
    int digits = 50;
};

struct PropertyResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// Description of the first failing case.
    std::string first_failure;
    bool passed() const { return failures == 0 && cases > 0; }
};

/// Suite names in run order.
const std::vector<std::string>& property_suite_names();

/// std::invalid_argument for unknown names. Each suite seeds its own
/// generator from (seed, name), so results do not depend on which other
/// suites run.
PropertyResult run_property_suite(const std::string& name, const PropertyOptions& options);

/// Brute-force sum_{j < terms} L(t0 r^j) compared with tail_bound(t0, r);
/// returns (brute-force upper endpoint, bound).
std::pair<BigFloat, BigFloat> tail_soundness_sample(const GeometricConfig& config, std::uint64_t terms);

}  // namespace dilog
