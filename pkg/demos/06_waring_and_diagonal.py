"""
Diagonal equations and Waring numbers
=====================================

Substituting y = a x^d turns a_1 x_1^d_1 + ... = a into a composition of a
whose j-th part lies in the set of a_j times d_j-th powers.
"""
from abelicomp import diagonal_count, make_field, power_set, waring_number
from abelicomp.oracle import brute_diagonal_count

F = make_field(13)
coeffs, exps = [1, 3, 5], [2, 3, 4]
for a in range(4):
    print(a, diagonal_count(F, coeffs, exps, a), brute_diagonal_count(F, coeffs, exps, a))

for p in (7, 11, 13):
    print(f"GF({p})", [waring_number(make_field(p), k) for k in range(1, p)])

# GF(9): elements are coefficient tuples modulo x^2 + 1
F9 = make_field(3, 2)
print(F9.irreducible, sorted(power_set(F9, 4, include_zero=True)))
