"""GF(p^n) arithmetic on top of the additive group Z_p^n.

A field element is a coefficient tuple ``(c_0, ..., c_{n-1})`` of the
polynomial ``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` modulo a monic
irreducible. This is exactly a :class:`~abelicomp.group_core.Group` element
of ``Z_p^n``, so the counting machinery never needs to know about fields.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DivisionByZero, NotIrreducible, NotPrime, ShapeError
from .group_core import Group


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _poly_mod(a: list, f: tuple, p: int) -> list:
    """Remainder of ``a`` modulo the monic ``f`` (both low-degree-first)."""
    a = [c % p for c in a]
    n = len(f) - 1
    for top in range(len(a) - 1, n - 1, -1):
        c = a[top]
        if c:
            shift = top - n
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
    return a[:n] + [0] * max(0, n - len(a))


def _poly_mul(a, b, p: int) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def _divides(g: tuple, f: tuple, p: int) -> bool:
    # g monic, deg g <= deg f
    r = list(f)
    dg = len(g) - 1
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top] % p
        if c:
            for i, gi in enumerate(g):
                r[top - dg + i] = (r[top - dg + i] - c * gi) % p
    return not any(c % p for c in r[:dg])


def is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = tuple(int(c) % p for c in f)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _divides(low + (1,), f, p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple:
    """Lexicographically smallest monic irreducible, comparing c_0 first."""
    for low in itertools.product(range(p), repeat=n):
        f = low + (1,)
        if is_irreducible(f, p):
            return f
    raise NotIrreducible(f"no irreducible of degree {n} over Z_{p}")  # unreachable for prime p


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    irreducible: tuple
    group: Group = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "group", Group((self.p,) * self.n))

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def element(self, value):
        """Coerce an int (for prime fields) or coefficient tuple."""
        if isinstance(value, int) and self.n == 1:
            return (value % self.p,)
        return self.group.coerce(value)

    @cached_property
    def _mul_table(self):
        els = self.group.elements
        return {
            (a, b): tuple(_poly_mod(_poly_mul(a, b, self.p), self.irreducible, self.p))
            for a in els for b in els
        }

    def mul(self, a, b):
        if len(a) != self.n or len(b) != self.n:
            raise ShapeError("dimension mismatch")
        if self.q <= 1024:
            return self._mul_table[(tuple(a), tuple(b))]
        return tuple(_poly_mod(_poly_mul(a, b, self.p), self.irreducible, self.p))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = self.one, tuple(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def inv(self, a):
        a = tuple(a)
        if not any(a):
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    @cached_property
    def nonzero_elements(self) -> tuple:
        return self.group.nonzero_elements

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "irreducible": list(self.irreducible)}

    @classmethod
    def from_json(cls, data) -> "FieldSpec":
        if isinstance(data, str):
            data = json.loads(data)
        return make_field(data["p"], data.get("n", 1), data.get("irreducible"))


def make_field(p: int, n: int = 1, irreducible=None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if irreducible is None:
        f = smallest_irreducible(p, n)
    else:
        f = tuple(int(c) % p for c in irreducible)
        if len(f) != n + 1 or not is_irreducible(f, p):
            raise NotIrreducible(f"{list(irreducible)} is not a monic irreducible of degree {n} over Z_{p}")
    return FieldSpec(p, n, f)


def fmul(F: FieldSpec, a, b):
    return F.mul(F.element(a), F.element(b))


def finv(F: FieldSpec, a):
    return F.inv(F.element(a))


def fpow(F: FieldSpec, a, k: int):
    return F.pow(F.element(a), k)


def power_set(F: FieldSpec, k: int, a=None, include_zero: bool = False) -> frozenset:
    """{a * x^k : x in F^*}, with 0 adjoined when ``include_zero``."""
    a = F.one if a is None else F.element(a)
    out = {F.mul(a, F.pow(x, k)) for x in F.nonzero_elements}
    if include_zero:
        out.add(F.zero)
    return frozenset(out)
