#pragma once

#include <cstdint>

#include "dilog/exactnum/quadratic.hpp"
#include "dilog/lucas/params.hpp"
#include "dilog/series/report.hpp"

namespace dilog {

/// u = a + b sqrt(n) with a, b > 0 rational, n a positive non-square
/// integer and a^2 - n b^2 = sign in {+1, -1}. std::invalid_argument otherwise.
class PellSolution {
public:
    PellSolution(Rational a, Rational b, Integer n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& n() const { return n_; }
    int sign() const { return sign_; }
    bool is_integral() const { return a_.is_integer() && b_.is_integer(); }

    /// a + b sqrt(n) over radicand n.
    QuadraticElement unit() const;
    /// (a_k, b_k) with u^k = a_k + b_k sqrt(n).
    std::pair<Rational, Rational> power(std::uint64_t k) const;

private:
    Rational a_;
    Rational b_;
    Integer n_;
    int sign_ = 1;
};

/// Lucas parameters (2a, a^2 - n b^2) and the scale factors linking them to
/// the powers of u: a_k = a_scale V_k and b_k = b_scale U_k.
struct PellLucasMap {
    LucasParams params;
    Rational a_scale;
    Rational b_scale;
};

PellLucasMap pell_to_lucas(const PellSolution& sol);

/// u^k == (V_k + U_k sqrt(D))/2 with D = 4 n b^2, and a_k, b_k match the
/// scaled Lucas values, exactly.
bool pell_power_check(const PellSolution& sol, std::uint64_t k);

/// Integral solutions only: b_k/b in Z for positive u, and b_(2k)/a,
/// a_(2k+1)/a in Z for negative u, for 1 <= k <= k_max.
bool pell_divisibility_check(const PellSolution& sol, std::uint64_t k_max);

/// Positive u: L(1/u^2) = sum_{k>=2} L(1/U_k(2a,1)^2).
/// Negative u: L(1/u^2) = sum_{k>=1} L(V_1^2 / (D U_2k^2)) + sum_{k>=1} L(V_1^2 / V_(2k+1)^2)
/// at (2a, -1). Also checks, over the first kBridgemanCheckedTerms terms, that
/// each summand equals the form built from a_k, b_k and the Lucas summand at k = 1.
IdentityReport bridgeman_verify(const PellSolution& sol, const VerifyOptions& options);

inline constexpr std::uint64_t kBridgemanCheckedTerms = 50;

}  // namespace dilog
