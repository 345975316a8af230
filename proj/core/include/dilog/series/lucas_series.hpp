#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "dilog/lucas/lucas.hpp"
#include "dilog/series/report.hpp"

namespace dilog {

/// U_k^2 Q^(kn) / U_(k(n+1))^2.
QuadraticElement lucas_pos_term(const LucasParams& params, std::uint64_t k, std::uint64_t n);
/// -V_k^2 Q^(k(2n-1)) / (D U_(2kn)^2), n >= 1.
QuadraticElement lucas_neg_first_term(const LucasParams& params, std::uint64_t k, std::uint64_t n);
/// V_k^2 Q^(2kn) / V_(k(2n+1))^2, n >= 1.
QuadraticElement lucas_neg_second_term(const LucasParams& params, std::uint64_t k, std::uint64_t n);

/// Q^k / alpha^(2k), the positive-branch right-hand argument.
QuadraticElement lucas_pos_rhs_argument(const LucasParams& params, std::uint64_t k);
/// -Q^k / alpha^(2k).
QuadraticElement lucas_neg_rhs_argument(const LucasParams& params, std::uint64_t k);

/// sum_{n>=1} L(U_k^2 Q^(kn) / U_(k(n+1))^2) = L(Q^k / alpha^(2k)) for Q > 0.
/// std::invalid_argument when Q <= 0 or k == 0.
IdentityReport lucas_pos_verify(const LucasParams& params, std::uint64_t k, const VerifyOptions& options);

/// Numeric path: parameters are rebuilt at each working precision by
/// make_params, so their input radius shrinks as precision escalates.
IdentityReport lucas_pos_verify_numeric(const std::function<NumericLucasParams(Bits)>& make_params,
                                        std::uint64_t k, const VerifyOptions& options,
                                        std::map<std::string, std::string> parameters);

/// Both sub-series of the negative branch against L(-Q^k / alpha^(2k)),
/// Q < 0 and k odd; std::invalid_argument otherwise.
IdentityReport lucas_neg_verify(const LucasParams& params, std::uint64_t k, const VerifyOptions& options);

/// For Q < 0 and odd k: the positive-branch summand at (P', Q') with index n
/// equals the first negative sub-series at (n+1)/2 for odd n and the second
/// at n/2 for even n, exactly, for every n <= count.
bool neg_from_pos_split_check(const LucasParams& params, std::uint64_t k, std::uint64_t count);

/// For Q < 0 and even k: the positive-branch summand at (P', Q') equals
/// U_k^2 Q^(kn) / U_(k(n+1))^2 at (P, Q) for every n <= count.
bool even_k_companion_check(const LucasParams& params, std::uint64_t k, std::uint64_t count);

}  // namespace dilog
