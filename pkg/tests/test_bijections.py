import itertools

import pytest

from abelicomp.bijections import (
    check_bijection_prop5, check_s_independence, mullen_permutation_map, phi, phi_inv, scale,
)
from abelicomp.group_core import make_group
from abelicomp.oracle import enumerate_class, satisfies
from abelicomp.restriction import (
    build_carlitz, build_mullen, build_window_sum, carlitz_spec, mullen_spec, window_sum_spec,
)

Z5 = make_group([5])


def test_phi_examples():
    assert phi(Z5, ((2,), (4,), (4,))) == ((2,), (1,), (0,))
    assert phi(Z5, ()) == ()
    assert phi_inv(Z5, phi(Z5, ((1,), (1,), (1,)))) == ((1,), (1,), (1,))


def test_prefix_sum_bijection_examples():
    r = check_bijection_prop5(Z5, 2, 4)
    assert r["source_size"] == r["target_size"] == 108 and r["bijection"]
    r = check_bijection_prop5(Z5, 2, 1)
    assert r["source_size"] == 4 and r["bijection"]
    r = check_bijection_prop5(Z5, 2, 0)
    assert r["source_size"] == r["target_size"] == 1 and r["bijection"]


@pytest.mark.parametrize("moduli", [[3], [4], [2, 2]])
def test_phi_round_trip_exhaustive(moduli):
    G = make_group(moduli)
    for m in range(5):
        for u in itertools.product(G.elements, repeat=m):
            assert phi_inv(G, phi(G, u)) == u
            assert phi(G, phi_inv(G, u)) == u


def test_s_independence_examples():
    r = check_s_independence(build_mullen(Z5, 2), 5, verify_maps=True)
    assert r["holds"] and r["maps_verified"]
    assert {r["counts"][s] for s in ("1", "2", "3", "4")} == {"69"}
    r = check_s_independence(build_window_sum(make_group([4]), 3), 9, verify_maps=True)
    assert r["reason"] == "unit_multiplication" and r["holds"] and r["maps_verified"]
    assert r["counts"]["1"] == r["counts"]["3"] == "1119"
    assert r["counts"]["2"] == "1119" and r["asserted"] == ["3"]
    r = check_s_independence(build_carlitz(make_group([6]), 2), 3, verify_maps=True)
    assert r["asserted"] == ["5"] and r["holds"]
    assert r["counts"]["1"] == "6" and r["counts"]["3"] == "12"
    assert not r["all_nonzero_equal"]


def test_mullen_map_is_involution():
    G = Z5
    for u in enumerate_class(G, mullen_spec(2), 4):
        s = G.size(u)
        if s not in (G.zero, G.one):
            w = mullen_permutation_map(G, s, u)
            assert G.size(w) == G.one
            assert mullen_permutation_map(G, s, w) == u


def test_scale_transport():
    G = make_group([2, 3])
    spec = carlitz_spec(1)
    for a in G.nonzero_elements:
        inv = G.ring_inverse(a)
        if inv is None:
            continue
        for u in enumerate_class(G, spec, 3):
            v = scale(G, a, u)
            assert satisfies(G, spec, v)
            assert G.size(v) == G.ring_mul(a, G.size(u))
