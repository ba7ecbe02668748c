import cmath
import itertools
import json

import pytest

from abelicomp.errors import InvalidModulus, RangeError, ShapeError
from abelicomp.group_core import Group, make_group


def test_make_group_orders():
    assert make_group([5]).order == 5
    assert make_group([2, 3]).order == 6
    with pytest.raises(InvalidModulus):
        make_group([1])
    with pytest.raises(InvalidModulus):
        make_group([])


def test_arithmetic_examples():
    Z5 = make_group([5])
    assert Z5.add((3,), (4,)) == (2,)
    assert Z5.neg((0,)) == (0,)
    G = make_group([2, 3])
    assert G.add((1, 2), (1, 2)) == (0, 1)
    assert G.ring_mul((1, 2), (1, 2)) == (1, 1)
    with pytest.raises(ShapeError):
        G.add((1,), (1, 2))


def test_index_examples():
    G = make_group([2, 3])
    assert G.element_of(0) == (0, 0)
    assert G.index_of(G.element_of(5)) == 5
    assert make_group([5]).element_of(3) == (3,)
    assert G.index_of(G.zero) == 0
    # first coordinate varies fastest
    assert G.element_of(1) == (1, 0)
    with pytest.raises(RangeError):
        G.element_of(6)


def test_character_examples():
    Z4 = make_group([4])
    for s in Z4:
        assert Z4.character((0,), s) == 1
    assert Z4.character((1,), (2,)) == pytest.approx(-1)
    G = make_group([2, 3])
    assert G.character((1, 0), (1, 2)) == pytest.approx(-1)


GROUPS = [[2], [3], [4], [5], [6], [7], [2, 2], [2, 3], [3, 3], [2, 2, 2], [4, 2], [6, 6], [2, 3, 6]]


@pytest.mark.parametrize("moduli", GROUPS)
def test_index_bijection(moduli):
    G = make_group(moduli)
    assert [G.index_of(G.element_of(i)) for i in range(G.order)] == list(range(G.order))
    assert len(set(G.elements)) == G.order


@pytest.mark.parametrize("moduli", [m for m in GROUPS if make_group(m).order <= 36])
def test_group_axioms_exhaustive(moduli):
    G = make_group(moduli)
    for a, b in itertools.product(G, repeat=2):
        assert G.add(a, b) == G.add(b, a)
        assert G.add(a, G.neg(a)) == G.zero
        assert G.add(a, G.zero) == a
    sample = G.elements[:6]
    for a, b, c in itertools.product(sample, G.elements, sample):
        assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))


@pytest.mark.parametrize("moduli", [[4], [5], [2, 3], [2, 2], [3, 3]])
def test_character_orthogonality(moduli):
    G = make_group(moduli)
    for s in G:
        avg = sum(G.character(j, s) * G.character(j, G.zero).conjugate() for j in G) / G.order
        assert abs(avg - (1 if s == G.zero else 0)) < 1e-9


def test_json_round_trip():
    G = make_group([2, 3])
    assert Group.from_json(json.dumps(G.to_json())) == G
    assert G.to_json() == {"moduli": [2, 3]}
