#!/usr/bin/env python3
"""Generate Taylor tables for the Riemann-Siegel correction terms C0..C4.

Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).  With x = p - 1/2 this is
Psi = -cos(2 pi x^2 - 5 pi / 8) / cos(2 pi x).  The corrections are the
classical combinations of derivatives of Psi; they are tabulated here as
polynomials in x, valid for x in [-1/2, 1/2].

Usage: gen_rs_coefficients.py > core/include/zetalab/detail/rs_coefficients.hpp
"""
import mpmath as mp

mp.mp.dps = 90
ORDER = 110


def cos_series(a0, a1, a2, n):
    """Series of cos(a0 + a1 x + a2 x^2) up to degree n (a1 or a2 zero)."""
    # cos(a0 + u) = cos(a0) cos(u) - sin(a0) sin(u), u polynomial in x.
    u = [mp.mpf(0)] * (n + 1)
    if n >= 1:
        u[1] = a1
    if n >= 2:
        u[2] = a2
    cs = [mp.mpf(0)] * (n + 1)
    sn = [mp.mpf(0)] * (n + 1)
    power = [mp.mpf(0)] * (n + 1)
    power[0] = mp.mpf(1)
    k = 0
    while True:
        coef = 1 / mp.factorial(k)
        target = cs if k % 2 == 0 else sn
        sign = (-1) ** (k // 2)
        for i in range(n + 1):
            target[i] += sign * coef * power[i]
        nxt = [mp.mpf(0)] * (n + 1)
        for i in range(n + 1):
            if power[i] == 0:
                continue
            for j in range(1, 3):
                if i + j <= n:
                    nxt[i + j] += power[i] * u[j]
        power = nxt
        k += 1
        if all(p == 0 for p in power):
            break
    return [mp.cos(a0) * cs[i] - mp.sin(a0) * sn[i] for i in range(n + 1)]


def divide(num, den, n):
    q = [mp.mpf(0)] * (n + 1)
    for k in range(n + 1):
        s = num[k]
        for j in range(1, k + 1):
            s -= den[j] * q[k - j]
        q[k] = s / den[0]
    return q


def deriv(series, times):
    out = list(series)
    for _ in range(times):
        out = [out[i + 1] * (i + 1) for i in range(len(out) - 1)]
    return out


def combine(terms, n):
    acc = [mp.mpf(0)] * n
    for weight, order in terms:
        d = deriv(psi, order)
        for i in range(n):
            acc[i] += weight * d[i]
    return acc


num = cos_series(-5 * mp.pi / 8, mp.mpf(0), 2 * mp.pi, ORDER)
den = cos_series(mp.mpf(0), 2 * mp.pi, mp.mpf(0), ORDER)
psi = [-c for c in divide(num, den, ORDER)]

pi = mp.pi
keep = ORDER - 14
tables = [
    combine([(1, 0)], keep),
    combine([(-1 / (96 * pi**2), 3)], keep),
    combine([(1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)], keep),
    combine([(-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5),
             (-1 / (5308416 * pi**6), 9)], keep),
    combine([(1 / (128 * pi**2), 0), (19 / (24576 * pi**4), 4),
             (11 / (5898240 * pi**6), 8), (1 / (2038431744 * pi**8), 12)], keep),
]

print("// Generated by tools/gen_rs_coefficients.py. Do not edit.")
print("#pragma once\n")
print("#include <array>\n#include <span>\n")
print("namespace zetalab::detail {\n")
print("// Riemann-Siegel corrections C_k as polynomials in x = p - 1/2,")
print("// lowest degree first.")
for k, tab in enumerate(tables):
    # drop trailing coefficients that cannot matter for |x| <= 1/2
    last = 0
    for i, c in enumerate(tab):
        if abs(c) * mp.mpf(0.5) ** i > mp.mpf(10) ** -19:
            last = i
    vals = tab[: last + 1]
    print(f"inline constexpr std::array<double, {len(vals)}> kRsC{k} = {{")
    for v in vals:
        print(f"    {mp.nstr(v, 20, min_fixed=1, max_fixed=0)},")
    print("};\n")
print("}  // namespace zetalab::detail")
