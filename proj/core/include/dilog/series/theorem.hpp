#pragma once

#include <cstdint>

#include "dilog/exactnum/rational.hpp"
#include "dilog/series/report.hpp"
#include "dilog/series/two_param.hpp"

namespace dilog {

/// sum_{n>=0} L(theorem_main_term(n)) = L(a) + L(b) - L(|a-b| / (1 - min(a,b))).
IdentityReport theorem_main_verify(const TwoParamInstance& inst, const VerifyOptions& options);

/// The theorem at a = (1+t)/2, b = (1-t)/2 re-indexed from n = 1:
/// sum_{n>=1} L(corollary_term(t, n)) = L((1-t)/(1+t)), 0 < t < 1.
IdentityReport corollary_verify(const Rational& t, const VerifyOptions& options);

/// t^2 ((1-t)/2)^n ((1+t)/2)^n / (((1+t)/2)^(n+1) - ((1-t)/2)^(n+1))^2.
Rational corollary_term(const Rational& t, std::uint64_t n);

/// Simplified summand 4t^2 (1-t^2)^n / ((1+t)^(n+1) - (1-t)^(n+1))^2.
Rational corollary_simplified_term(const Rational& t, std::uint64_t n);

/// Number of leading terms compared exactly between the two summand forms.
inline constexpr std::uint64_t kCorollaryCheckedTerms = 64;

}  // namespace dilog
