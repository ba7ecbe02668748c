import math

import pytest

from abelicomp.errors import DivisionByZero, NotIrreducible, NotPrime
from abelicomp.finite_field import (
    FieldSpec, finv, fmul, fpow, is_irreducible, make_field, power_set, smallest_irreducible,
)


def test_make_field_examples():
    F = make_field(7)
    assert F.q == 7 and F.group.moduli == (7,)
    F4 = make_field(2, 2, (1, 1, 1))
    assert F4.q == 4
    with pytest.raises(NotIrreducible):
        make_field(2, 2, (1, 0, 1))
    with pytest.raises(NotPrime):
        make_field(6)


def test_default_irreducible():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert is_irreducible((1, 1, 0, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)


def test_arithmetic_examples():
    F = make_field(7)
    assert fmul(F, 3, 5) == (1,)
    assert finv(F, 3) == (5,)
    assert fpow(F, 3, 6) == (1,)
    F4 = make_field(2, 2)
    # x * x = x + 1 modulo x^2 + x + 1
    assert fmul(F4, (0, 1), (0, 1)) == (1, 1)
    with pytest.raises(DivisionByZero):
        finv(F, 0)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (3, 1)])
def test_field_axioms(p, n):
    F = make_field(p, n)
    els = F.group.elements
    for a in els:
        assert F.mul(a, F.one) == a
        if any(a):
            assert F.mul(a, F.inv(a)) == F.one
            assert F.pow(a, F.q - 1) == F.one
    for a in els[:5]:
        for b in els:
            for c in els[:4]:
                assert F.mul(a, F.group.add(b, c)) == F.group.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_power_set_examples():
    F = make_field(7)
    assert power_set(F, 2, 1, include_zero=True) == {(0,), (1,), (2,), (4,)}
    assert len(power_set(F, 1, 1)) == 6
    assert power_set(F, 3, 1, include_zero=True) == {(0,), (1,), (6,)}


@pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (2, 3)])
def test_power_set_size(p, n):
    F = make_field(p, n)
    for k in range(1, 8):
        assert len(power_set(F, k)) == (F.q - 1) // math.gcd(k, F.q - 1)


def test_json_round_trip():
    F = make_field(3, 2)
    assert FieldSpec.from_json(F.to_json()) == F
