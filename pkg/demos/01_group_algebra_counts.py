"""
Counting compositions in the group algebra
==========================================

A composition of s over G is an ordered tuple of nonzero parts adding up to s.
Every count for every target s comes out of one product in Z[G].
"""
from abelicomp import make_group, ga_delta, unrestricted_count
from abelicomp.group_algebra import ga_indicator, fourier_mul

G = make_group([5])

# sum of delta_e over the allowed parts, raised to the number of parts
parts = ga_indicator(G, G.nonzero_elements)
for m in range(1, 6):
    v = parts ** m
    print(f"m={m}", dict(zip(range(5), v.coeffs)))

# the closed form agrees
print("closed form, m=3:", [unrestricted_count(G, 3, s) for s in range(5)])

# coefficients are Python ints, so nothing overflows
big = ga_indicator(G, G.elements) ** 60
print("weak, m=60, s=0:", big[(0,)])

# FFT over the group gives the same product
a = parts ** 4
print("fft agrees:", fourier_mul(a, parts) == a * parts)

# a two-factor group: elements are tuples, first coordinate fastest
H = make_group([2, 3])
print("Z2+Z3, delta_(1,2) * delta_(1,2) =", (ga_delta(H, (1, 2)) * ga_delta(H, (1, 2))).as_dict())
