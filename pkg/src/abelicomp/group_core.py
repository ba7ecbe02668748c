"""Finite abelian groups written as direct sums of cyclic groups.

Elements are plain tuples of ints, one coordinate per cyclic factor. The
dense index of an element is mixed radix with the first coordinate varying
fastest, ``index = s_1 + k_1*(s_2 + k_2*(...))``.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InvalidModulus, RangeError, ShapeError

Element = tuple


@dataclass(frozen=True)
class Group:
    """The group Z_{k_1} + ... + Z_{k_r}."""

    moduli: tuple
    order: int = field(init=False, compare=False)

    def __post_init__(self):
        moduli = tuple(int(k) for k in self.moduli)
        if not moduli:
            raise InvalidModulus("a group needs at least one cyclic factor")
        for k in moduli:
            if k < 2:
                raise InvalidModulus(f"modulus {k} < 2")
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "order", math.prod(moduli))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def __repr__(self):
        return "Group(" + "+".join(f"Z{k}" for k in self.moduli) + ")"

    # -- elements ---------------------------------------------------------

    def coerce(self, e) -> Element:
        """Validate ``e`` and return it as a tuple. Ints are accepted for rank 1."""
        if isinstance(e, (int,)) and not isinstance(e, bool):
            e = (e,)
        e = tuple(int(x) for x in e)
        if len(e) != self.rank:
            raise ShapeError(f"element {e} has {len(e)} coordinates, group has {self.rank}")
        for x, k in zip(e, self.moduli):
            if not 0 <= x < k:
                raise ShapeError(f"coordinate {x} outside Z_{k}")
        return e

    def reduce(self, e) -> Element:
        """Reduce arbitrary integer coordinates into range."""
        if isinstance(e, int):
            e = (e,)
        if len(e) != self.rank:
            raise ShapeError(f"element {tuple(e)} does not match rank {self.rank}")
        return tuple(int(x) % k for x, k in zip(e, self.moduli))

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def is_zero(self, e) -> bool:
        return not any(e)

    def add(self, a, b) -> Element:
        if len(a) != self.rank or len(b) != self.rank:
            raise ShapeError("dimension mismatch")
        return tuple((x + y) % k for x, y, k in zip(a, b, self.moduli))

    def sub(self, a, b) -> Element:
        if len(a) != self.rank or len(b) != self.rank:
            raise ShapeError("dimension mismatch")
        return tuple((x - y) % k for x, y, k in zip(a, b, self.moduli))

    def neg(self, a) -> Element:
        if len(a) != self.rank:
            raise ShapeError("dimension mismatch")
        return tuple(-x % k for x, k in zip(a, self.moduli))

    def ring_mul(self, a, b) -> Element:
        """Componentwise product in the ring Z_{k_1} x ... x Z_{k_r}."""
        if len(a) != self.rank or len(b) != self.rank:
            raise ShapeError("dimension mismatch")
        return tuple((x * y) % k for x, y, k in zip(a, b, self.moduli))

    def ring_inverse(self, a):
        """Componentwise ring inverse, or None when some gcd(a_t, k_t) != 1."""
        try:
            return tuple(pow(x, -1, k) for x, k in zip(a, self.moduli))
        except ValueError:
            return None

    def size(self, parts: Sequence[Element]) -> Element:
        """Sum of a sequence of parts, computed in the group."""
        acc = [0] * self.rank
        for p in parts:
            for t, x in enumerate(p):
                acc[t] += x
        return tuple(x % k for x, k in zip(acc, self.moduli))

    def unit(self, t: int) -> Element:
        e = [0] * self.rank
        e[t] = 1
        return tuple(e)

    @property
    def one(self) -> Element:
        return (1,) * self.rank

    # -- dense indexing ---------------------------------------------------

    def index_of(self, e) -> int:
        if len(e) != self.rank:
            raise ShapeError("dimension mismatch")
        idx = 0
        for x, k in zip(reversed(e), reversed(self.moduli)):
            if not 0 <= x < k:
                raise ShapeError(f"coordinate {x} outside Z_{k}")
            idx = idx * k + x
        return idx

    def element_of(self, i: int) -> Element:
        if not 0 <= i < self.order:
            raise RangeError(f"index {i} outside 0..{self.order - 1}")
        coords = []
        for k in self.moduli:
            i, x = divmod(i, k)
            coords.append(x)
        return tuple(coords)

    @cached_property
    def elements(self) -> tuple:
        """All elements in index order."""
        return tuple(self.element_of(i) for i in range(self.order))

    @cached_property
    def nonzero_elements(self) -> tuple:
        return self.elements[1:]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self):
        return self.order

    @cached_property
    def add_table(self):
        """``add_table[i][j] == index_of(element_of(i) + element_of(j))``."""
        import numpy as np

        els = self.elements
        table = np.empty((self.order, self.order), dtype=np.intp)
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                table[i, j] = self.index_of(self.add(a, b))
        return table

    # -- characters -------------------------------------------------------

    def character(self, j, s) -> complex:
        """prod_t exp(2 pi i j_t s_t / k_t)."""
        if len(j) != self.rank or len(s) != self.rank:
            raise ShapeError("dimension mismatch")
        phase = sum(_phase(jt * st, k) for jt, st, k in zip(j, s, self.moduli))
        return cmath.exp(2j * math.pi * phase)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"moduli": list(self.moduli)}

    @classmethod
    def from_json(cls, data) -> "Group":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["moduli"]))


def _phase(num: int, k: int) -> float:
    # reduce before dividing so large products keep full precision
    return (num % k) / k


def make_group(moduli) -> Group:
    if isinstance(moduli, int):
        moduli = [moduli]
    moduli = list(moduli)
    if not moduli:
        raise InvalidModulus("empty moduli list")
    return Group(tuple(moduli))


def cyclic(k: int) -> Group:
    return Group((k,))
