#!/usr/bin/env python3
"""Independent reference values for the C++ tests, computed with mpmath.

    oracles.py            print the generated header
    oracles.py --check F  exit 1 unless F matches the generated header
"""
import sys

from mpmath import mp, mpf, log, pi, polylog, sqrt, exp

mp.dps = 80
DIGITS = 60


def L(x):
    x = mpf(x)
    if x == 0:
        return mpf(0)
    if x == 1:
        return pi**2 / 6
    return polylog(2, x) + log(x) * log(1 - x) / 2


def lucas(P, Q, n):
    u0, u1, v0, v1 = 0, 1, 2, P
    for _ in range(n):
        u0, u1 = u1, P * u1 - Q * u0
        v0, v1 = v1, P * v1 - Q * v0
    return u0, v0


phi = (1 + sqrt(5)) / 2

REALS = [
    ("kPiSq6", pi**2 / 6),
    ("kPiSq10", pi**2 / 10),
    ("kPiSq12", pi**2 / 12),
    ("kPiSq15", pi**2 / 15),
    ("kLi2Half", polylog(2, mpf(1) / 2)),
    ("kLi2ThreeQuarters", polylog(2, mpf(3) / 4)),
    ("kLOneThird", L(mpf(1) / 3)),
    ("kLOneTenth", L(mpf(1) / 10)),
    ("kLNineTenths", L(mpf(9) / 10)),
    ("kLOneThousandth", L(mpf(1) / 1000)),
    ("kLExpMinus2", L(exp(-2))),
    ("kLPhiMinus4", L(phi**-4)),
    ("kLPhiMinus8", L(phi**-8)),
    ("kLPhiMinus12", L(phi**-12)),
    ("kL17Minus12Sqrt2", L(17 - 12 * sqrt(2))),
    ("kLSixOver7PlusSqrt13", L(6 / (7 + sqrt(13)))),
    ("kLTwoMinusSqrt3Sq", L((2 - sqrt(3)) ** 2)),
    ("kSqrt2", sqrt(2)),
    ("kThreeMinus2Sqrt2", 3 - 2 * sqrt(2)),
    # L(1/2) + L(1/3) - L(1/4), the two-parameter closed form at (1/2, 1/3).
    ("kTheoremHalfThird", L(mpf(1) / 2) + L(mpf(1) / 3) - L(mpf(1) / 4)),
    # sum_{j < 10^4} L(2^-j / 4) against tail_bound(1/4, 1/2).
    ("kBruteTailQuarterHalf", sum(L(mpf(2) ** -j / 4) for j in range(10000))),
]

INTEGERS = [
    ("kFib100", lucas(1, -1, 100)[0]),
    ("kLucas100", lucas(1, -1, 100)[1]),
    ("kPell50", lucas(2, -1, 50)[0]),
    ("kU40_3_2", lucas(3, 2, 40)[0]),
    ("kV37_1_m3", lucas(1, -3, 37)[1]),
]


def render():
    out = ["// Generated by tests/oracles/oracles.py; do not edit.", "#pragma once", "",
           "namespace dilog::oracle {", ""]
    for name, value in REALS:
        out.append(f'inline constexpr const char* {name} = "{mp.nstr(value, DIGITS, strip_zeros=False)}";')
    out.append("")
    for name, value in INTEGERS:
        out.append(f'inline constexpr const char* {name} = "{value}";')
    out += ["", "}  // namespace dilog::oracle", ""]
    return "\n".join(out)


def main():
    text = render()
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        with open(sys.argv[2]) as f:
            if f.read() != text:
                print("oracle header is stale", file=sys.stderr)
                return 1
        return 0
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
