#include "dilog/series/accelerate.hpp"

#include <stdexcept>
#include <vector>

namespace dilog {

namespace {

struct TailConstants {
    Ball lambda1;
    Ball u_n;
    Ball log_kappa;
    Ball log_s;
    Ball log_rho;
    Ball rho;
};

// Upper bound for the part of the expansion beyond order m_max.
BigFloat remainder_bound(const TailConstants& c, std::uint64_t n_first, std::uint64_t m_max) {
    const Bits bits = c.lambda1.precision();
    const Ball x = c.lambda1 * c.u_n;
    const unsigned long m1 = m_max + 1;
    const Ball e = pow(x, m1) / (Rational(1) - x);
    const Ball rho_m = pow(c.rho, m1);
    const Ball inv_gap = Rational(1) / (Rational(1) - rho_m);
    const Ball m = Ball::exact(static_cast<long>(m1), bits);
    const Ball g = (Rational(1) / m + Rational(2) / (c.lambda1 - Rational(1)) + abs(c.log_kappa) * Rational(1, 2)) / m +
                   (Rational(1) + log(m)) * Rational(2) / m;
    const Ball log_part = (abs(c.log_s) * inv_gap +
                           abs(c.log_rho) * Rational(Integer(Integer(n_first) + 1)) * sqr(inv_gap)) /
                          (m * Rational(2));
    return (e * (g * inv_gap + log_part)).upper();
}

}  // namespace

std::optional<AnalyticTail> two_param_analytic_tail(const Rational& a_in, const Rational& b_in,
                                                    std::uint64_t first_omitted, const BigFloat& tol, Bits bits,
                                                    std::uint64_t max_order) {
    const Rational one(1);
    if (a_in == b_in) throw std::invalid_argument("two_param_analytic_tail: a == b");
    const Rational a = max(a_in, b_in);
    const Rational b = min(a_in, b_in);
    const Rational p = one - a;
    const Rational q = one - b;
    const Rational rho = p / q;
    const Rational s = b * p / (a * q);
    const Rational kappa = (a - b) * (a - b) / (p * q);
    const Rational u_n = s * rho.pow(static_cast<std::int64_t>(first_omitted));

    const Bits w = bits + 64;
    const Ball kappa_b = Ball::exact(kappa, w);
    TailConstants c{
        (kappa_b + Rational(2) + sqrt(kappa_b * (kappa_b + Rational(4)))) * Rational(1, 2),
        Ball::exact(u_n, w),
        log(kappa_b),
        log(Ball::exact(s, w)),
        log1p(Ball::exact(rho - one, w)),
        Ball::exact(rho, w),
    };
    if (!(c.lambda1 * c.u_n).upper().is_finite() || mpfr_cmp_ui((c.lambda1 * c.u_n).upper().get(), 1) >= 0) {
        return std::nullopt;
    }

    std::uint64_t order = 0;
    BigFloat remainder;
    for (std::uint64_t m = 8;; m += 8) {
        if (m > max_order) return std::nullopt;
        remainder = remainder_bound(c, first_omitted, m);
        if (remainder <= tol) {
            order = m;
            break;
        }
    }

    // l1^m + l1^-m - 2 = 4 sinh^2(m log(l1) / 2), free of cancellation for small k.
    const Ball half_log_l1 = log1p((kappa_b + sqrt(kappa_b * (kappa_b + Rational(4)))) * Rational(1, 2)) * Rational(1, 2);
    std::vector<Ball> beta(order + 1, Ball(w));
    for (std::uint64_t m = 1; m <= order; ++m) {
        const Rational mq(static_cast<long>(m));
        beta[m] = sqr(sinh(half_log_l1 * mq)) * Rational(4) / mq;
    }

    const Ball one_minus_rho = Ball::exact(one - rho, w);
    const Ball n_b = Ball::exact(Rational(Integer(first_omitted)), w);
    Ball total(w);
    Ball beta_prefix(w);  // sum_{i<m} beta_i
    Ball u_pow = c.u_n;
    Ball rho_pow = c.rho;
    Ball geom = Ball::exact(1, w);  // 1 + rho + ... + rho^(m-1)
    for (std::uint64_t m = 1; m <= order; ++m) {
        const Rational inv_m(1, static_cast<long>(m));
        const Ball alpha_m = (beta[m] + beta_prefix * Rational(2)) * inv_m;
        Ball conv(w);
        for (std::uint64_t i = 1; i < m; ++i) conv += beta[m - i] / Rational(static_cast<long>(i));
        const Ball c_m = alpha_m - c.log_kappa * beta[m] * Rational(1, 2) - conv;

        const Ball gap = one_minus_rho * geom;  // 1 - rho^m
        const Ball s_m = u_pow / gap;
        const Ball t_m = c.log_s * s_m + c.log_rho * u_pow * (n_b * gap + rho_pow) / sqr(gap);
        total += c_m * s_m - beta[m] * t_m * Rational(1, 2);

        beta_prefix += beta[m];
        geom += rho_pow;
        rho_pow *= c.rho;
        u_pow *= c.u_n;
    }
    return AnalyticTail{total.with_precision(bits), remainder, order};
}

}  // namespace dilog
