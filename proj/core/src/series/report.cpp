#include "dilog/series/report.hpp"

namespace dilog {

std::string to_string(Verdict verdict) { return verdict == Verdict::pass ? "pass" : "fail"; }

bool within_tolerance(const Ball& residual, const BigFloat& tail, int digits) {
    BigFloat mid(kRadiusBits);
    mpfr_abs(mid.get(), residual.midpoint().get(), MPFR_RNDU);
    const BigFloat slack = PrecisionBudget::for_digits(digits).tolerance();
    const BigFloat allowed = add_up(add_up(residual.radius(), tail), slack);
    return mid <= allowed;
}

}  // namespace dilog
