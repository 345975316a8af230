#pragma once

#include <stdexcept>

#include "dilog/numeric/bigfloat.hpp"

namespace dilog {

/// How precise a result must be and how hard to work for it.
/// Invariant: working_bits >= ceil(target_digits * log2(10)) + 32.
struct PrecisionBudget {
    int target_digits = 40;
    Bits working_bits = 0;
    int guard_terms = 0;

    static PrecisionBudget for_digits(int digits, int guard_terms = 0);

    /// Minimum working precision permitted for `digits`.
    static Bits min_bits(int digits);

    /// Same target with the working precision doubled.
    PrecisionBudget escalated() const;

    /// 10^-target_digits, rounded down so "radius <= tolerance" stays strict.
    BigFloat tolerance() const;

    /// Throws std::invalid_argument when the invariant is violated.
    void validate() const;
};

/// Number of times a computation may double its working precision before
/// reporting failure.
inline constexpr int kMaxEscalations = 3;

/// Raised when the requested radius cannot be reached within the budget.
class PrecisionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dilog
