#pragma once

#include <bit>
#include <cstdint>
#include <optional>

#include "dilog/lucas/params.hpp"

namespace dilog {

template <class T>
struct LucasPair {
    std::uint64_t index = 0;
    T u;
    T v;
};

/// (U_n, V_n) by the linear recurrence; kept as the reference oracle.
template <class T>
LucasPair<T> lucas_uv_naive(const T& P, const T& Q, std::uint64_t n) {
    T u_prev = P * Rational(0);
    T v_prev = u_prev + Rational(2);
    if (n == 0) return {0, u_prev, v_prev};
    T u = u_prev + Rational(1);
    T v = P;
    for (std::uint64_t i = 1; i < n; ++i) {
        T u_next = P * u - Q * u_prev;
        T v_next = P * v - Q * v_prev;
        u_prev = std::move(u);
        v_prev = std::move(v);
        u = std::move(u_next);
        v = std::move(v_next);
    }
    return {n, u, v};
}

/// (U_n, V_n) by fast doubling:
///   U_2m = U_m V_m,  V_2m = V_m^2 - 2Q^m,
///   U_m+1 = (P U_m + V_m)/2,  V_m+1 = (D U_m + P V_m)/2.
template <class T>
LucasPair<T> lucas_uv(const T& P, const T& Q, std::uint64_t n) {
    const Rational half(1, 2);
    const T D = P * P - Q * Rational(4);
    T u = P * Rational(0);
    T v = u + Rational(2);
    T q_pow = u + Rational(1);
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        T u2 = u * v;
        T v2 = v * v - q_pow * Rational(2);
        q_pow = q_pow * q_pow;
        u = std::move(u2);
        v = std::move(v2);
        if ((n >> bit) & 1U) {
            T u1 = (P * u + v) * half;
            T v1 = (D * u + P * v) * half;
            u = std::move(u1);
            v = std::move(v1);
            q_pow = q_pow * Q;
        }
    }
    return {n, u, v};
}

LucasPair<QuadraticElement> lucas_uv(const LucasParams& params, std::uint64_t n);
/// Rational parameters only; LucasUnsupported otherwise.
LucasPair<Rational> lucas_uv_rational(const LucasParams& params, std::uint64_t n);
LucasPair<Ball> lucas_uv(const NumericLucasParams& params, std::uint64_t n);

/// alpha^n = (V_n + U_n sqrt(D))/2 over radicand D. Rational P, Q only.
QuadraticElement alpha_power_exact(const LucasParams& params, std::uint64_t n);

/// (P', Q') = (sqrt(P^2 - 4Q), -Q), with P' = 0 + 1*sqrt(D).
LucasParams transform_params(const LucasParams& params);

/// Checks the case formulas linking (P', Q') to (P, Q) at index n:
///   U_n(P',Q') = sqrt(D) U_n/P (n even),  V_n/P (n odd)
///   V_n(P',Q') = V_n (n even),  sqrt(D) U_n (n odd).
bool transform_case_check(const LucasParams& params, std::uint64_t n);

/// gcd(|U_m|, |U_n|) == |U_gcd(m,n)| for coprime integer P, Q.
/// std::invalid_argument for non-integer or non-coprime parameters.
bool strong_divisibility_check(const LucasParams& params, std::uint64_t m, std::uint64_t n);

/// m | n implies U_m | U_n, for integer P, Q.
bool divisibility_check(const LucasParams& params, std::uint64_t m, std::uint64_t n);

/// V_n^2 - D U_n^2 == 4 Q^n, exactly.
bool norm_identity_check(const LucasParams& params, std::uint64_t n);

/// (alpha^n - beta^n)/(alpha - beta) == U_n and alpha^n + beta^n == V_n, exactly.
bool binet_check(const LucasParams& params, std::uint64_t n);

}  // namespace dilog
