"""
Growth constants: closed forms against the Perron root
======================================================

For large m, c_m(s) ~ A * B^m. Uniform-degree digraphs give exact rational
constants; any aperiodic strongly connected digraph gives numeric ones from
the Perron eigenvectors of T(1).
"""
import math
from fractions import Fraction

from abelicomp import (
    asymptotic_constants, build_carlitz, build_mullen, build_window_sum, corollary2_constants,
    count, cycle_gcd, cyclic, is_strongly_connected, perron, theorem3_constants,
)

D = build_mullen(cyclic(5), 2)
exact = theorem3_constants(5, 2)
print("closed form:", exact.A, exact.B)
print("spectral:   ", asymptotic_constants(D).A, asymptotic_constants(D).B)

for m in (5, 10, 20, 30):
    err = Fraction(count(D, m, 1)) / exact.main_term(m) - 1
    print(f"m={m:2d} relative error {float(err):.2e}")

# Z_4, window of 3: not uniform-degree, so only the spectral route applies
W = build_window_sum(cyclic(4), 3)
print("strongly connected:", is_strongly_connected(W), "cycle gcd:", cycle_gcd(W))
P = perron(W)
print("rho =", P.rho, " 3+2sqrt2 =", 3 + 2 * math.sqrt(2))
est = asymptotic_constants(W, 0, P)
print("A =", est.A, "B =", est.B)

# strict 2-Carlitz over Z_6: B = 3, but the ratio settles only after m ~ 11
C = build_carlitz(cyclic(6), 2)
B = corollary2_constants(2, 6, 2).B
for m in range(6, 16):
    print(m, round(count(C, m + 2, 0) / count(C, m, 0), 4), "target", B ** 2)
