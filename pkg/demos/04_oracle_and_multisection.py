"""
Two independent checks
======================

The brute-force oracle lists sequences directly; the character average
recovers each count from complex evaluations of the generating function.
"""
from abelicomp import build_carlitz, count_all, make_group, multisection_crosscheck
from abelicomp.oracle import brute_count_upto
from abelicomp.restriction import carlitz_spec

G = make_group([2, 3])
spec = carlitz_spec(1)
D = build_carlitz(G, 1)

brute = brute_count_upto(G, spec, 7)
for m in range(8):
    print(m, count_all(D, m) == brute[m], list(brute[m].coeffs))

c = multisection_crosscheck(D, 18, (1, 1))
print("estimate", c.estimate, "exact", c.exact, "agree", c.agree)
