"""
Prefix sums and permutations
============================

Prefix sums turn compositions whose short windows all have nonzero sum into
sequences with no repeat among nearby terms. Relabelling values then shows the
count does not depend on which nonzero s is targeted.
"""
from abelicomp import build_mullen, make_group, phi, phi_inv
from abelicomp.bijections import check_bijection_prop5, check_s_independence, mullen_permutation_map

G = make_group([5])
u = ((2,), (4,), (4,))
print("u =", u, "phi(u) =", phi(G, u), "back:", phi_inv(G, phi(G, u)))

report = check_bijection_prop5(G, 2, 5)
print({k: report[k] for k in ("source_size", "target_size", "bijection")})

# a composition of 3 sent to a composition of 1
print(mullen_permutation_map(G, (3,), ((1,), (2,))))

r = check_s_independence(build_mullen(G, 2), 7, verify_maps=True)
print(r["counts"], "asserted:", r["asserted"], "holds:", r["holds"])
