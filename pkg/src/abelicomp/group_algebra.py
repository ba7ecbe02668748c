"""Exact arithmetic in the integral group algebra Z[G].

A :class:`GroupVector` is a dense list of Python ints indexed like the
group's elements. Multiplication is convolution over G, which is what
multiplying generating functions does once exponents are reduced mod k_t.
"""
from __future__ import annotations

import json

import numpy as np

from .errors import ShapeError
from .group_core import Group


class GroupVector:
    __slots__ = ("group", "coeffs")

    def __init__(self, group: Group, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != group.order:
            raise ShapeError(f"{len(coeffs)} coefficients for a group of order {group.order}")
        self.group = group
        self.coeffs = coeffs

    def __repr__(self):
        return f"GroupVector({self.group!r}, {list(self.coeffs)})"

    def __eq__(self, other):
        if not isinstance(other, GroupVector):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.group, self.coeffs))

    def __getitem__(self, s):
        return self.coeffs[self.group.index_of(self.group.coerce(s))]

    def _check(self, other):
        if not isinstance(other, GroupVector) or other.group != self.group:
            raise ShapeError("group algebra operands live over different groups")

    def __add__(self, other):
        self._check(other)
        return GroupVector(self.group, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return GroupVector(self.group, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupVector(self.group, (c * other for c in self.coeffs))
        self._check(other)
        table = self.group.add_table
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if b:
                    out[row[j]] += a * b
        return GroupVector(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in Z[G]")
        result = ga_delta(self.group, self.group.zero)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def total(self) -> int:
        """Sum of all coefficients, i.e. evaluation at the trivial character."""
        return sum(self.coeffs)

    def shift(self, g) -> "GroupVector":
        """Multiply by the unit delta_g (a permutation of coefficients)."""
        gi = self.group.index_of(g)
        out = [0] * self.group.order
        col = self.group.add_table[:, gi]
        for i, c in enumerate(self.coeffs):
            out[col[i]] = c
        return GroupVector(self.group, out)

    def as_dict(self) -> dict:
        return {self.group.element_of(i): c for i, c in enumerate(self.coeffs)}

    def to_json(self) -> dict:
        return {"moduli": list(self.group.moduli), "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "GroupVector":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Group(tuple(data["moduli"])), [int(c) for c in data["coeffs"]])


def ga_zero(group: Group) -> GroupVector:
    return GroupVector(group, [0] * group.order)


def ga_delta(group: Group, e) -> GroupVector:
    e = group.coerce(e)
    coeffs = [0] * group.order
    coeffs[group.index_of(e)] = 1
    return GroupVector(group, coeffs)


def ga_indicator(group: Group, subset) -> GroupVector:
    """Sum of delta_e over a subset (duplicates are collapsed)."""
    coeffs = [0] * group.order
    for e in subset:
        coeffs[group.index_of(group.coerce(e))] = 1
    return GroupVector(group, coeffs)


def ga_add(u: GroupVector, v: GroupVector) -> GroupVector:
    return u + v


def ga_mul(u: GroupVector, v: GroupVector) -> GroupVector:
    return u * v


def ga_coeff(v: GroupVector, s) -> int:
    return v[s]


def fourier_mul(u: GroupVector, v: GroupVector) -> GroupVector:
    """Convolution through the complex DFT on G, rounded to integers.

    Only safe while coefficients stay well below 2**50; used as an
    independent check of :func:`ga_mul`.
    """
    u._check(v)
    shape = u.group.moduli
    fu = np.fft.fftn(np.array(u.coeffs, dtype=float).reshape(shape, order="F"))
    fv = np.fft.fftn(np.array(v.coeffs, dtype=float).reshape(shape, order="F"))
    w = np.fft.ifftn(fu * fv).real.reshape(-1, order="F")
    return GroupVector(u.group, (int(round(x)) for x in w))
