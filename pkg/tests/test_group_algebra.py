import json

import pytest
from hypothesis import given, settings, strategies as st

from abelicomp.errors import ShapeError
from abelicomp.group_algebra import (
    GroupVector, fourier_mul, ga_add, ga_coeff, ga_delta, ga_indicator, ga_mul,
)
from abelicomp.group_core import make_group

Z5 = make_group([5])


def test_delta_examples():
    assert ga_delta(Z5, 0).coeffs == (1, 0, 0, 0, 0)
    assert ga_delta(Z5, 2).coeffs == (0, 0, 1, 0, 0)
    G = make_group([2, 3])
    v = ga_delta(G, (1, 1))
    assert v.coeffs[G.index_of((1, 1))] == 1 and sum(v.coeffs) == 1


def test_mul_examples():
    assert ga_mul(ga_delta(Z5, 2), ga_delta(Z5, 4)) == ga_delta(Z5, 1)
    nonzero = ga_indicator(Z5, Z5.nonzero_elements)
    cube = nonzero ** 3
    # (|G|-1)^m -/+ ... over |G| with |G| = 5, m = 3
    assert ga_coeff(cube, 1) == 13
    assert ga_coeff(cube, 0) == 12
    full = ga_indicator(Z5, Z5.elements) ** 3
    assert set(full.coeffs) == {25}


def test_coeff_of_identity():
    e = ga_delta(Z5, 0)
    assert ga_coeff(e, 0) == 1
    assert all(ga_coeff(e, s) == 0 for s in range(1, 5))


def test_group_mismatch():
    with pytest.raises(ShapeError):
        ga_add(ga_delta(Z5, 0), ga_delta(make_group([6]), 0))
    with pytest.raises(ShapeError):
        GroupVector(Z5, [1, 2])


SMALL = [[2], [3], [4], [5], [6], [2, 2], [2, 3], [3, 4], [2, 6], [12]]


@st.composite
def vectors(draw, n=3, bound=1000):
    G = make_group(draw(st.sampled_from(SMALL)))
    vs = [GroupVector(G, draw(st.lists(st.integers(-bound, bound), min_size=G.order, max_size=G.order)))
          for _ in range(n)]
    return G, vs


@settings(max_examples=60, deadline=None)
@given(vectors())
def test_ring_axioms(data):
    G, (u, v, w) = data
    one = ga_delta(G, G.zero)
    assert (u * v) * w == u * (v * w)
    assert u * v == v * u
    assert u * (v + w) == u * v + u * w
    assert one * u == u


@settings(max_examples=60, deadline=None)
@given(vectors(n=2, bound=999))
def test_fourier_consistency(data):
    _, (u, v) = data
    u = GroupVector(u.group, [abs(c) for c in u.coeffs])
    v = GroupVector(v.group, [abs(c) for c in v.coeffs])
    assert fourier_mul(u, v) == u * v
    assert (u * v).total() == u.total() * v.total()


def test_big_coefficients_are_exact():
    G = make_group([6])
    v = ga_indicator(G, G.elements) ** 40
    assert set(v.coeffs) == {6 ** 39}
    assert 6 ** 39 > 2 ** 64


def test_json_round_trip():
    v = ga_indicator(Z5, Z5.elements) ** 30
    data = json.loads(json.dumps(v.to_json()))
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert GroupVector.from_json(data) == v
