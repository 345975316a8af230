#include "dilog/lucas/lucas.hpp"

#include <numeric>
#include <stdexcept>

namespace dilog {

namespace {

void require_coprime_integers(const LucasParams& params) {
    if (!params.is_rational()) throw std::invalid_argument("integer Lucas parameters required");
    const Rational P = params.P_rational();
    const Rational Q = params.Q_rational();
    if (!P.is_integer() || !Q.is_integer()) throw std::invalid_argument("integer Lucas parameters required");
    if (gcd(P.numerator(), Q.numerator()) != 1) throw std::invalid_argument("P and Q must be coprime");
}

Integer integer_u(const LucasParams& params, std::uint64_t n) {
    return lucas_uv_rational(params, n).u.numerator();
}

}  // namespace

LucasPair<QuadraticElement> lucas_uv(const LucasParams& params, std::uint64_t n) {
    return lucas_uv(params.P(), params.Q(), n);
}

LucasPair<Rational> lucas_uv_rational(const LucasParams& params, std::uint64_t n) {
    return lucas_uv(params.P_rational(), params.Q_rational(), n);
}

LucasPair<Ball> lucas_uv(const NumericLucasParams& params, std::uint64_t n) {
    return lucas_uv(params.P(), params.Q(), n);
}

QuadraticElement alpha_power_exact(const LucasParams& params, std::uint64_t n) {
    const Rational D = params.D_rational();
    const auto [index, u, v] = lucas_uv_rational(params, n);
    return QuadraticElement(v / Rational(2), u / Rational(2), D);
}

LucasParams transform_params(const LucasParams& params) {
    const Rational D = params.D_rational();
    return LucasParams(QuadraticElement::root(D), QuadraticElement::embed(-params.Q_rational(), D));
}

bool transform_case_check(const LucasParams& params, std::uint64_t n) {
    const LucasParams primed = transform_params(params);
    const Rational P = params.P_rational();
    const Rational D = params.D_rational();
    const auto base = lucas_uv_rational(params, n);
    const auto image = lucas_uv(primed, n);
    const QuadraticElement root_d = QuadraticElement::root(D);
    if (n % 2 == 0) {
        return image.u == root_d * (base.u / P) && image.v == QuadraticElement::embed(base.v, D);
    }
    return image.u == QuadraticElement::embed(base.v / P, D) && image.v == root_d * base.u;
}

bool strong_divisibility_check(const LucasParams& params, std::uint64_t m, std::uint64_t n) {
    require_coprime_integers(params);
    if (m == 0 || n == 0) throw std::invalid_argument("strong divisibility indices must be positive");
    const Integer lhs = gcd(integer_u(params, m), integer_u(params, n));
    return lhs == abs(integer_u(params, std::gcd(m, n)));
}

bool divisibility_check(const LucasParams& params, std::uint64_t m, std::uint64_t n) {
    if (!params.is_rational() || !params.P_rational().is_integer() || !params.Q_rational().is_integer()) {
        throw std::invalid_argument("integer Lucas parameters required");
    }
    if (m == 0 || n % m != 0) return true;
    const Integer um = integer_u(params, m);
    if (um == 0) return integer_u(params, n) == 0;
    return mpz_divisible_p(integer_u(params, n).get_mpz_t(), um.get_mpz_t()) != 0;
}

bool norm_identity_check(const LucasParams& params, std::uint64_t n) {
    const auto [index, u, v] = lucas_uv(params, n);
    return v * v - params.D() * u * u == params.Q().pow(n) * Rational(4);
}

bool binet_check(const LucasParams& params, std::uint64_t n) {
    const QuadraticElement a = params.alpha();
    const QuadraticElement b = params.beta();
    const QuadraticElement an = a.pow(n);
    const QuadraticElement bn = b.pow(n);
    const auto [index, u, v] = lucas_uv(params, n);
    if (params.is_rational() && !(alpha_power_exact(params, n) == an)) return false;
    return (an - bn) / (a - b) == u && an + bn == v;
}

}  // namespace dilog
