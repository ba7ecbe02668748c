import math

import numpy as np
import pytest

from abelicomp.closed_forms import corollary2_constants, theorem3_constants
from abelicomp.errors import NoConvergence, NoTerminal
from abelicomp.group_core import make_group
from abelicomp.restriction import build_carlitz, build_mullen, build_window_sum, load_digraph
from abelicomp.spectral import asymptotic_constants, perron
from abelicomp.transfer import count


def test_mullen_perron():
    P = perron(build_mullen(make_group([5]), 2))
    assert abs(P.rho - 3) < 1e-9
    assert np.all(P.g > 0) and np.all(P.h > 0)
    assert abs(P.h @ P.g - 1) < 1e-12


def test_window_example():
    D = build_window_sum(make_group([4]), 3)
    P = perron(D)
    assert abs(P.rho - (3 + 2 * math.sqrt(2))) < 1e-6
    e = asymptotic_constants(D, 0, P)
    assert abs(e.A - 0.375) < 1e-4
    assert abs(e.B - (1 + math.sqrt(2))) < 1e-9


def test_single_loop():
    D = load_digraph({"moduli": [2], "span": 1, "recurrent": [[[1]]], "start": [0],
                      "arcs": [[0, 0]], "terminal": {"0": [[0, []]]}})
    assert perron(D).rho == pytest.approx(1.0)


def test_periodic_digraph_does_not_converge():
    # bipartite, period 2, not regular: the iterate oscillates
    M = np.array([[0.0, 1.0, 1.0], [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    with pytest.raises(NoConvergence) as info:
        perron(M, max_iter=500)
    assert info.value.residual is not None


def test_rho_within_row_sums():
    D = build_carlitz(make_group([6]), 2)
    A = D.adjacency()
    rho = perron(D).rho
    assert A.sum(axis=1).min() - 1e-9 <= rho <= A.sum(axis=1).max() + 1e-9


def test_constants_match_closed_forms():
    e = asymptotic_constants(build_mullen(make_group([5]), 2))
    t = theorem3_constants(5, 2)
    assert abs(e.A - float(t.A)) < 1e-6 and abs(e.B - 3) < 1e-9
    e = asymptotic_constants(build_carlitz(make_group([6]), 2, weak=True))
    c = corollary2_constants(1, 6, 2)
    assert abs(e.A / float(c.A) - 1) < 1e-6 and abs(e.B - float(c.B)) < 1e-9


def test_missing_terminal():
    D = load_digraph({"moduli": [3], "span": 2, "recurrent": [[[1], [1]]], "start": [0],
                      "arcs": [[0, 0]], "terminal": {"0": [[0, []]]}})
    with pytest.raises(NoTerminal):
        asymptotic_constants(D, 1)


def test_convergence_decreases():
    D = build_mullen(make_group([5]), 2)
    e = asymptotic_constants(D)
    errs = [abs(count(D, m, 1) / (e.A * e.B ** m) - 1) for m in range(4, 41, 4)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
