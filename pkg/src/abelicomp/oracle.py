"""Brute-force ground truth.

Every count here comes from listing sequences one by one. The window
checker is deliberately written from scratch rather than shared with the
digraph builder, so the two paths can disagree if either is wrong.
"""
from __future__ import annotations

import dataclasses
import itertools
import math
import os

from .errors import BudgetExceeded
from .group_algebra import GroupVector
from .group_core import Group
from .restriction import ClassSpec

DEFAULT_BUDGET = 10 ** 8


def default_budget() -> int:
    return int(os.environ.get("ABELICOMP_BUDGET", DEFAULT_BUDGET))


def _check_budget(states: int, budget):
    budget = default_budget() if budget is None else budget
    if states > budget:
        raise BudgetExceeded(f"{states} states exceed the budget of {budget}")


def _window_ok(G: Group, rule, window) -> bool:
    if rule.kind == "sum_nonzero":
        total = [0] * G.rank
        for x in window:
            total = [a + b for a, b in zip(total, x)]
        return any(a % k for a, k in zip(total, G.moduli))
    if rule.kind == "all_distinct":
        return len(set(window)) == len(window)
    F = rule.field
    prod = F.one
    for x in window:
        prod = F.mul(prod, x)
    return prod != F.one


def satisfies(G: Group, spec: ClassSpec, seq) -> bool:
    """Check a whole sequence against every constraint of ``spec``."""
    m = len(seq)
    if not spec.weak and any(not any(x) for x in seq):
        return False
    if any(not any(x) for x in seq[:spec.first_nonzero]):
        return False
    for rule in spec.rules:
        w = rule.length
        if rule.kind == "all_distinct":
            # every run of w parts, or the whole sequence when shorter
            starts = range(max(1, m - w + 1)) if m else ()
            windows = (seq[i:i + w] for i in starts)
        else:
            windows = (seq[i:i + w] for i in range(m - w + 1))
        if not all(_window_ok(G, rule, win) for win in windows):
            return False
    return True


def _parts(G: Group, spec: ClassSpec):
    return G.elements if spec.weak else G.nonzero_elements


def enumerate_class(G: Group, spec: ClassSpec, m: int, budget=None, prune: bool = True):
    """Yield every m-part sequence of the class.

    With ``prune`` a prefix is abandoned as soon as it fails ``satisfies``;
    that is sound because the prefix's own windows are completed windows of
    every extension.
    """
    parts = _parts(G, spec)
    _check_budget(len(parts) ** m, budget)
    if not prune:
        for seq in itertools.product(parts, repeat=m):
            if satisfies(G, spec, seq):
                yield seq
        return

    local = dataclasses.replace(spec, first_nonzero=0)
    tail = spec.max_window

    def rec(prefix):
        if len(prefix) == m:
            yield prefix
            return
        i = len(prefix)
        for x in parts:
            if i < spec.first_nonzero and not any(x):
                continue
            nxt = prefix + (x,)
            if satisfies(G, local, nxt[-tail:]):
                yield from rec(nxt)

    yield from rec(())


def brute_count_upto(G: Group, spec: ClassSpec, m_max: int, budget=None) -> list:
    """[brute_count_all(G, spec, m) for m in 0..m_max] from one pruned DFS.

    Parts are handled as element indices; each new part is checked against
    the windows that end at it, which is the same test ``satisfies`` applies
    to a prefix.
    """
    parts = [G.index_of(x) for x in _parts(G, spec)]
    _check_budget(len(parts) ** m_max, budget)
    add = G.add_table.tolist()
    neg = [G.index_of(G.neg(x)) for x in G.elements]
    sums = [r for r in spec.rules if r.kind == "sum_nonzero"]
    distinct = [r.length for r in spec.rules if r.kind == "all_distinct"]
    products = [r for r in spec.rules if r.kind == "product_ne_one"]
    els = G.elements
    tallies = [[0] * G.order for _ in range(m_max + 1)]
    seq = []
    prefix = [0]  # prefix[i] = index of x_1 + ... + x_i

    def ok(x, i):
        if i < spec.first_nonzero and x == 0:
            return False
        total = add[prefix[i]][x]
        for r in sums:
            w = r.length
            if i + 1 >= w and add[total][neg[prefix[i + 1 - w]]] == 0:
                return False
        for w in distinct:
            if x in seq[max(0, i - w + 1):i]:
                return False
        for r in products:
            w = r.length
            if i + 1 >= w:
                F = r.field
                prod = els[x]
                for y in seq[i + 1 - w:i]:
                    prod = F.mul(prod, els[y])
                if prod == F.one:
                    return False
        return True

    def rec(i):
        tallies[i][prefix[i]] += 1
        if i == m_max:
            return
        for x in parts:
            if ok(x, i):
                seq.append(x)
                prefix.append(add[prefix[i]][x])
                rec(i + 1)
                seq.pop()
                prefix.pop()

    rec(0)
    return [GroupVector(G, t) for t in tallies]


def brute_count_all(G: Group, spec: ClassSpec, m: int, budget=None, prune: bool = True) -> GroupVector:
    if prune:
        return brute_count_upto(G, spec, m, budget)[m]
    coeffs = [0] * G.order
    for seq in enumerate_class(G, spec, m, budget, prune=False):
        coeffs[G.index_of(G.size(seq))] += 1
    return GroupVector(G, coeffs)


def brute_count(G: Group, spec: ClassSpec, m: int, s, budget=None) -> int:
    return brute_count_all(G, spec, m, budget)[G.coerce(s)]


def count_valid(G: Group, spec: ClassSpec, m: int, budget=None) -> int:
    """Number of class members with m parts, no tally by sum."""
    return sum(1 for _ in enumerate_class(G, spec, m, budget))


def brute_subset_count(G: Group, subsets, s, budget=None) -> int:
    s = G.coerce(s)
    subsets = [sorted({G.coerce(x) for x in S}) for S in subsets]
    _check_budget(math.prod(len(S) for S in subsets), budget)
    return sum(1 for xs in itertools.product(*subsets) if G.size(xs) == s)


def brute_diagonal_count(F, coeffs, exps, a, budget=None) -> int:
    """Solutions of sum_j a_j x_j^(d_j) = a with every x_j nonzero, by listing x."""
    a = F.element(a)
    coeffs = [F.element(c) for c in coeffs]
    units = F.nonzero_elements
    _check_budget(len(units) ** len(coeffs), budget)
    total = 0
    for xs in itertools.product(units, repeat=len(coeffs)):
        acc = F.zero
        for c, d, x in zip(coeffs, exps, xs):
            acc = F.group.add(acc, F.mul(c, F.pow(x, d)))
        total += acc == a
    return total
