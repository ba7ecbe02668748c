import numpy as np
import pytest

from abelicomp.errors import NoTerminal, PrecisionRefused, Unsupported
from abelicomp.group_algebra import ga_delta
from abelicomp.group_core import make_group
from abelicomp.oracle import brute_count_upto
from abelicomp.restriction import (
    build_carlitz, build_class, build_mullen, build_window_sum, load_digraph, save_digraph,
    unrestricted_spec,
)
from abelicomp.transfer import (
    build_transfer, count, count_all, count_table, multisection_crosscheck, multisection_estimates,
)

Z5, Z6, Z4 = make_group([5]), make_group([6]), make_group([4])


def test_mullen_z3_matrix():
    G = make_group([3])
    TS = build_transfer(build_mullen(G, 2))
    zero = ga_delta(G, 0) - ga_delta(G, 0)
    for u in range(2):
        for v in range(2):
            a, b = u + 1, v + 1
            expected = ga_delta(G, b) if (a + b) % 3 else zero
            assert TS.entry(u, v) == expected


def test_carlitz_weak_alpha():
    k = 5
    G = make_group([k])
    D = build_carlitz(G, 1, weak=True)
    TS = build_transfer(D)
    assert D.span == 1
    assert TS.alpha == tuple(ga_delta(G, x) for x in range(k))


def test_count_examples():
    assert count(build_mullen(Z5, 2), 3, 0) == 12
    assert count(build_carlitz(Z6, 2, weak=True), 6, 5) == 1284
    assert count(build_carlitz(Z6, 2), 5, 3) == 136
    assert count(build_window_sum(Z4, 3), 21, 0) == 40234356
    assert count(build_window_sum(Z4, 3), 21, 1) == 41196941


def test_empty_composition():
    D = build_mullen(Z5, 2)
    assert count_all(D, 0) == ga_delta(Z5, 0)


def test_short_lengths_use_predicate():
    D = build_window_sum(Z4, 3)
    assert count_all(D, 1).coeffs == (0, 1, 1, 1)


def test_custom_digraph_errors():
    D = load_digraph(save_digraph(build_window_sum(Z4, 3)))
    with pytest.raises(Unsupported):
        count(D, 1, 0)
    data = {
        "moduli": [3], "span": 2, "recurrent": [[[1], [1]]], "start": [0],
        "arcs": [[0, 0]], "terminal": {"0": [[0, []]]},
    }
    D = load_digraph(data)
    assert count(D, 4, 1) == 1
    with pytest.raises(NoTerminal):
        count(D, 5, 0)


def test_count_table_matches_count_all():
    D = build_carlitz(Z6, 2)
    table = count_table(D, range(0, 15))
    for m in range(0, 15):
        assert table[m] == count_all(D, m)


def test_overflow_switches_to_exact_ints():
    D = build_class(make_group([7]), unrestricted_spec(weak=True))
    v = count_all(D, 40)
    assert set(v.coeffs) == {7 ** 39}
    assert 7 ** 39 > 2 ** 63


def test_large_counts_match_oracle_small_m():
    D = build_window_sum(make_group([6]), 2, weak=True)
    brute = brute_count_upto(make_group([6]), D.predicate, 7)
    for m in range(8):
        assert count_all(D, m) == brute[m]


def test_crosscheck_examples():
    c = multisection_crosscheck(build_mullen(Z5, 2), 10, 1)
    assert c.exact == 15681 and c.agree and abs(c.estimate - 15681) < 1e-6
    c = multisection_crosscheck(build_window_sum(Z4, 3), 12, 0)
    assert c.exact == 16377 and c.agree


def test_crosscheck_zero_count():
    # the class of one repeated nonzero part: never sums to 0 in Z_3 for m=1 mod 3
    data = {
        "moduli": [3], "span": 1, "recurrent": [[[1]]], "start": [0],
        "arcs": [[0, 0]], "terminal": {"0": [[0, []]]},
    }
    D = load_digraph(data)
    c = multisection_crosscheck(D, 4, 0)
    assert c.exact == 0 and abs(c.estimate) < 0.5 and c.agree


def test_crosscheck_refuses_large_counts():
    D = build_class(make_group([6]), unrestricted_spec(weak=True))
    with pytest.raises(PrecisionRefused):
        multisection_crosscheck(D, 25, 0)


def test_estimates_are_real_counts():
    D = build_carlitz(Z6, 2, weak=True)
    est = multisection_estimates(D, 7)
    exact = count_all(D, 7).coeffs
    assert np.allclose(est, exact)
