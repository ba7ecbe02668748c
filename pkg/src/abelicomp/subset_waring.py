"""Compositions with each part drawn from a prescribed subset, diagonal
equations over finite fields, and Waring numbers."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .closed_forms import gcd_condition
from .errors import EmptySubset
from .finite_field import FieldSpec, power_set
from .group_algebra import GroupVector, ga_delta, ga_indicator
from .group_core import Group

UNKNOWN = "Unknown"


def count_subset_all(G: Group, subsets) -> GroupVector:
    """prod_j (sum_{e in S_j} delta_e) in Z[G]."""
    acc = ga_delta(G, G.zero)
    for S in subsets:
        S = list(S)
        if not S:
            raise EmptySubset("every part needs at least one allowed value")
        acc = acc * ga_indicator(G, S)
    return acc


def count_subset_restricted(G: Group, subsets, s) -> int:
    return count_subset_all(G, subsets)[G.coerce(s)]


def _as_product(G: Group, S):
    S = {G.coerce(x) for x in S}
    factors = [sorted({x[t] for x in S}) for t in range(G.rank)]
    if len(S) != math.prod(len(f) for f in factors):
        return None
    return factors


def check_theorem1_hypothesis(G: Group, subsets) -> list:
    """Per position j: a list of per-coordinate gcd verdicts, or UNKNOWN when
    S_j is not a Cartesian product of coordinate sets."""
    out = []
    for S in subsets:
        factors = _as_product(G, S)
        out.append(UNKNOWN if factors is None else [gcd_condition(f) for f in factors])
    return out


def diagonal_count(F: FieldSpec, coeffs, exps, a) -> int:
    """Solutions of a_1 x_1^d_1 + ... + a_m x_m^d_m = a with x_j in F^*.

    Substituting y_j = a_j x_j^d_j gives a subset-restricted composition of
    a; each y_j in the image has gcd(d_j, q-1) preimages.
    """
    if len(coeffs) != len(exps):
        raise ValueError("coefficient and exponent lists differ in length")
    subsets = [power_set(F, d, c, include_zero=False) for c, d in zip(coeffs, exps)]
    fibres = math.prod(math.gcd(d, F.q - 1) for d in exps)
    return count_subset_restricted(F.group, subsets, F.element(a)) * fibres


@dataclass(frozen=True)
class NotReached:
    max_m: int


def waring_number(F: FieldSpec, k: int, max_m: int = 64):
    """Smallest m such that every field element is a sum of m k-th powers
    (zero allowed as a summand), or NotReached(max_m)."""
    return sumset_cover(F.group, power_set(F, k, include_zero=True), max_m)


def sumset_cover(G: Group, S, max_m: int):
    """Smallest m with S + ... + S (m times) = G."""
    S = {G.coerce(x) for x in S}
    reached = set(S)
    for m in range(1, max_m + 1):
        if len(reached) == G.order:
            return m
        reached = {G.add(x, y) for x, y in itertools.product(reached, S)}
    return NotReached(max_m)
