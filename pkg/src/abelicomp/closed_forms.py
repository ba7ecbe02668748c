"""Closed-form counts and asymptotic constants.

Constants ``A`` are exact :class:`~fractions.Fraction` values whenever the
formula allows it; ``B`` is exact when it is an integer root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import HypothesisViolated, NotGrowing
from .group_core import Group

Number = Union[Fraction, float]


@dataclass(frozen=True)
class AsymptoticEstimate:
    """c_m(s) ~ A * B**m for m = a*span + b, a -> infinity."""

    A: Number
    B: Number
    b: int
    source: str

    def __post_init__(self):
        if not self.A > 0:
            raise ValueError("A must be positive")
        if not self.B > 1:
            raise NotGrowing(f"B = {self.B} does not exceed 1")

    @property
    def exact(self) -> bool:
        return isinstance(self.A, Fraction) and isinstance(self.B, Fraction)

    def main_term(self, m: int) -> Number:
        return self.A * self.B ** m

    def to_json(self) -> dict:
        def fmt(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
            return repr(float(x))

        return {"A": fmt(self.A), "B": fmt(self.B), "b": self.b, "source": self.source,
                "A_float": float(self.A), "B_float": float(self.B)}


def falling_factorial(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1) for integers x >= k >= 0."""
    if k < 0 or x < k:
        raise HypothesisViolated(f"falling factorial {x}^({k}) needs x >= k >= 0")
    return math.prod(range(x - k + 1, x + 1))


def unrestricted_count(G: Group, m: int, s) -> int:
    """m-compositions of s with all parts nonzero."""
    s = G.coerce(s)
    n = G.order
    if m < 0:
        raise ValueError("m must be >= 0")
    sign = -1 if m % 2 else 1
    if G.is_zero(s):
        num = (n - 1) ** m + sign * (n - 1)
    else:
        num = (n - 1) ** m - sign
    q, r = divmod(num, n)
    assert r == 0
    return q


def weak_unrestricted_count(G: Group, m: int) -> int:
    """m-compositions of any fixed s with zero parts allowed (m >= 1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return G.order ** (m - 1)


def _exact_root(K: int, sigma: int):
    r = round(K ** (1.0 / sigma))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** sigma == K:
            return c
    return None


def corollary1_constants(H: int, J: int, K: int, sigma: int, b: int, order: int) -> AsymptoticEstimate:
    """Constants for a digraph whose recurrent vertices all have outdegree K
    and J arcs into Seq_b, with H start arcs."""
    if K <= 1:
        raise NotGrowing(f"outdegree K={K} gives no exponential growth")
    if H < 1 or J < 1:
        raise ValueError("H and J must be positive")
    if not 0 <= b < sigma:
        raise ValueError("need 0 <= b < sigma")
    root = _exact_root(K, sigma)
    if root is not None:
        B = Fraction(root)
        A = Fraction(H * J, order * K) / B ** b
    else:
        B = K ** (1.0 / sigma)
        A = H * J / (order * K * B ** b)
    return AsymptoticEstimate(A, B, b, "corollary1")


def _order(G) -> int:
    if isinstance(G, int):
        return G
    if hasattr(G, "q"):
        return G.q
    return G.order


def corollary2_constants(item: int, G, d: int, b: int = 0) -> AsymptoticEstimate:
    """The five classes:

    1. weak, no repeated part among d+1 consecutive parts (|G| >= d+2)
    2. as 1 with nonzero parts (|G| >= d+3)
    3. as 1 with the first d parts nonzero (|G| >= d+2)
    4. weak, every d consecutive parts have nonzero sum (|G| >= 3, d >= 2)
    5. over F_q, no d consecutive parts multiply to 1 (q >= 4, d >= 2)

    ``G`` may be a Group, a FieldSpec or just the order.
    """
    n = _order(G)
    if d < 1:
        raise HypothesisViolated("d must be >= 1")
    if item == 1:
        if n < d + 2:
            raise HypothesisViolated(f"item 1 needs |G| >= d+2 = {d + 2}")
        A = Fraction(falling_factorial(n, d), n * (n - d) ** d)
        B = n - d
    elif item == 2:
        if n < d + 3:
            raise HypothesisViolated(f"item 2 needs |G| >= d+3 = {d + 3}")
        A = Fraction(falling_factorial(n - 1, d), n * (n - 1 - d) ** d)
        B = n - 1 - d
    elif item == 3:
        if n < d + 2:
            raise HypothesisViolated(f"item 3 needs |G| >= d+2 = {d + 2}")
        A = Fraction(falling_factorial(n - 1, d), n * (n - d) ** d)
        B = n - d
    elif item == 4:
        if n < 3 or d < 2:
            raise HypothesisViolated("item 4 needs |G| >= 3 and d >= 2")
        A = Fraction(n ** (d - 2), (n - 1) ** (d - 1))
        B = n - 1
    elif item == 5:
        if n < 4 or d < 2:
            raise HypothesisViolated("item 5 needs q >= 4 and d >= 2")
        A = Fraction((n - 1) ** (d - 1), n * (n - 2) ** (d - 1))
        B = n - 2
    else:
        raise ValueError(f"unknown item {item}")
    return AsymptoticEstimate(A, Fraction(B), b, f"corollary2_item_{item}")


def theorem3_constants(G, d: int) -> AsymptoticEstimate:
    """Locally d-Mullen compositions: A = (|G|-1)^(d falling) (|G|-d)^(-d) / |G|, B = |G|-d."""
    n = _order(G)
    if d < 1 or n < d + 2:
        raise HypothesisViolated(f"needs |G| >= d+2 = {d + 2} for growth")
    A = Fraction(falling_factorial(n - 1, d), n * (n - d) ** d)
    return AsymptoticEstimate(A, Fraction(n - d), 0, "theorem3")


def theorem1_main_term(G: Group, subsets) -> Fraction:
    """(1/|G|) prod_j |S_j|."""
    sizes = [len(set(S)) for S in subsets]
    if any(k == 0 for k in sizes):
        raise ValueError("subsets must be nonempty")
    return Fraction(math.prod(sizes), G.order)


def gcd_condition(S, k=None) -> bool:
    """gcd{a - b : a, b in S} == 1 for a set of residues."""
    vals = sorted({int(x[0]) if isinstance(x, tuple) else int(x) for x in S})
    if len(vals) < 2:
        return False
    return math.gcd(*(v - vals[0] for v in vals[1:])) == 1
