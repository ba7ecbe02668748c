"""
Restriction digraphs and exact tables
=====================================

Local rules (no repeated part nearby, nonzero window sums) are compiled into a
digraph of blocks. Walks in that digraph spell out the compositions, and the
transfer matrix counts them exactly for every s at once.
"""
from abelicomp import build_carlitz, build_mullen, build_window_sum, count, count_table, cyclic
from abelicomp.tables import render_csv

# Z_6, no part repeated among 3 consecutive parts, zero parts allowed
D = build_carlitz(cyclic(6), 2, weak=True)
print("span", D.span, "vertices", D.n_recurrent, "start arcs", len(D.start))

rows = count_table(D, range(2, 11))
for m, v in rows.items():
    print(m, list(v.coeffs))

# every 1..2 consecutive parts have nonzero sum, over Z_5
M = build_mullen(cyclic(5), 2)
print("c_10(1) =", count(M, 10, 1))

# Z_4, any 3 consecutive parts sum to something nonzero; m = 200 is instant
W = build_window_sum(cyclic(4), 3)
print("c_200(0) has", len(str(count(W, 200, 0))), "digits")

print(render_csv("table2"))
