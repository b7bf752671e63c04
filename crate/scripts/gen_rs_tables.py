#!/usr/bin/env python3
"""Generate the Riemann-Siegel correction tables in crates/core/src/zeta/rs_tables.rs.

Correction term k of the remainder is a polynomial in p = 1 - 2(a - N),
a = sqrt(t / 2pi), N = floor(a):

    P_k(p) = sum_l d[k, l] F^(3k - 2l)(p) / (pi^(2k - l) (2i)^l)

where F(z) = (exp(pi i (z^2/2 + 3/8)) - i sqrt(2) cos(pi z / 2)) / (2 cos(pi z))
and d[k, l] follows the Arias de Reyna recursion with sigma = 1/2. The remainder
of zeta(1/2 + it) is (-1)^(N-1) a^(-1/2) e^(-i phi) sum_k P_k(p) a^(-k), with
phi = t/2 log(t/2pi) - t/2 - pi/8.

Requires mpmath. Run from the repository root:

    python3 scripts/gen_rs_tables.py > crates/core/src/zeta/rs_tables.rs
"""
import mpmath as mp
from mpmath.functions.rszeta import coef

mp.mp.dps = 60
MAX_ORDER = 10
CUTOFF = mp.mpf(10) ** -19

J = 90
c, _ = coef(mp.mp, J, mp.mpf(10) ** -50)
c = {k: mp.mpc(v) for k, v in c.items()}
deg_f = max(c)

d = {(0, 0): mp.mpf(1), (-1, 0): mp.mpf(1)}
g = lambda n, k: d.get((n, k), mp.mpf(0))
for n in range(1, MAX_ORDER + 1):
    for k in range(0, 3 * n // 2 + 1):
        m = 3 * n - 2 * k
        if m != 0:
            d[(n, k)] = -(m + 1) * g(n - 1, k - 2) + g(n - 1, k) / (4 * m)
        else:
            v = mp.mpf(0)
            for r in range(0, k):
                v -= (-1) ** (k - r) * g(n, r) * mp.fac(2 * k - 2 * r) / mp.fac(k - r)
            d[(n, k)] = v


def deriv_coeffs(m):
    # Taylor coefficients (in p) of F^(m)
    out = []
    for j in range(0, deg_f - m + 1):
        out.append(c.get(j + m, 0) * mp.fac(j + m) / mp.fac(j))
    return out


tables = []
for k in range(0, MAX_ORDER + 1):
    poly = {}
    for l in range(0, 3 * k // 2 + 1):
        w = g(k, l) / (mp.pi ** (2 * k - l) * (2j) ** l)
        if w == 0:
            continue
        for j, v in enumerate(deriv_coeffs(3 * k - 2 * l)):
            poly[j] = poly.get(j, 0) + w * v
    coeffs = [mp.mpc(poly.get(j, 0)) for j in range(max(poly) + 1)]
    last = max(j for j, v in enumerate(coeffs) if abs(v) > CUTOFF)
    tables.append(coeffs[: last + 1])


def lit(x):
    s = mp.nstr(x, 17, min_fixed=0, max_fixed=0, strip_zeros=False)
    if "e" not in s and "." not in s:
        s += ".0"
    return s.replace("e", "e")


print("// Generated by scripts/gen_rs_tables.py. Do not edit by hand.")
print("//")
print("// Taylor coefficients in p of the Riemann-Siegel remainder corrections,")
print("// one slice per order, each entry [re, im]. Truncated at |c| < 1e-19.")
print()
print("pub const MAX_ORDER: usize = %d;" % MAX_ORDER)
print()
for k, coeffs in enumerate(tables):
    print("const ORDER_%d: [[f64; 2]; %d] = [" % (k, len(coeffs)))
    for v in coeffs:
        print("    [%s, %s]," % (lit(mp.re(v)), lit(mp.im(v))))
    print("];")
    print()
print("pub(super) static CORRECTIONS: [&[[f64; 2]]; %d] = [" % (MAX_ORDER + 1))
for k in range(MAX_ORDER + 1):
    print("    &ORDER_%d," % k)
print("];")
