"""Transfer matrices over Z[G] and exact counting.

Entry (u, v) of the transfer matrix is delta_{|v|} when u -> v is an arc.
The count of m-part compositions, m = a*span + b, is the Z[G] scalar
alpha T^(a-1) beta_b. It is computed by iterating a row vector: the state is
an |R| x |G| integer array whose row v holds the Z[G] weight of all walks
ending at v. Values stay in int64 while a bound guarantees no overflow and
switch to Python ints (object arrays) after that, so results are exact
either way.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NoTerminal, PrecisionRefused, Unsupported
from .group_algebra import GroupVector, ga_delta
from .restriction import RestrictionDigraph

_INT64_SAFE = 2 ** 62


class TransferSystem:
    def __init__(self, D: RestrictionDigraph):
        self.digraph = D
        G = D.group
        self.group = G
        n = D.n_recurrent
        self.adjacency = D.adjacency()
        self.weight_index = np.array([G.index_of(s) for s in D.sizes], dtype=np.intp)
        # shifted[v, j] = unshifted[v, perm[v, j]] multiplies row v by delta_{|v|}
        neg = [G.index_of(G.neg(g)) for g in G.elements]
        table = G.add_table
        self._shift_by = np.array([table[:, neg[w]] for w in range(G.order)], dtype=np.intp)
        self._perm = self._shift_by[self.weight_index]
        self.start_mask = np.zeros(n, dtype=bool)
        self.start_mask[list(D.start)] = True
        self.finish_counts = {}
        for b, arcs in D.terminal.items():
            counts = np.zeros((n, G.order), dtype=np.int64)
            for u, tail in arcs:
                counts[u, G.index_of(G.size(tail))] += 1
            self.finish_counts[b] = counts
        self._max_indegree = int(self.adjacency.sum(axis=0).max()) if n else 0

    # -- the Z[G]-valued objects, for inspection ---------------------------

    def entry(self, u: int, v: int) -> GroupVector:
        G = self.group
        if self.adjacency[u, v]:
            return ga_delta(G, self.digraph.sizes[v])
        return GroupVector(G, [0] * G.order)

    @cached_property
    def alpha(self) -> tuple:
        G = self.group
        zero = GroupVector(G, [0] * G.order)
        return tuple(ga_delta(G, self.digraph.sizes[v]) if self.start_mask[v] else zero
                     for v in range(self.digraph.n_recurrent))

    def beta(self, b: int) -> tuple:
        if b not in self.finish_counts:
            raise NoTerminal(f"no terminal arcs into Seq_{b}")
        return tuple(GroupVector(self.group, row.tolist()) for row in self.finish_counts[b])

    def trivial_character_matrix(self) -> np.ndarray:
        """T evaluated at z = 1: the 0-1 adjacency matrix of D_R."""
        return self.adjacency.copy()

    # -- exact iteration ----------------------------------------------------

    def _initial(self):
        G = self.group
        n = self.digraph.n_recurrent
        X = np.zeros((n, G.order), dtype=np.int64)
        X[np.flatnonzero(self.start_mask), self.weight_index[self.start_mask]] = 1
        return X

    def _step(self, X):
        if X.dtype != object and int(X.max(initial=0)) * max(self._max_indegree, 1) >= _INT64_SAFE:
            X = X.astype(object)
        A = self.adjacency if X.dtype != object else self.adjacency.astype(object)
        Y = A.T @ X
        return np.take_along_axis(Y, self._perm, axis=1)

    def _finish(self, X, b: int) -> list:
        if b not in self.finish_counts:
            raise NoTerminal(f"no terminal arcs into Seq_{b}")
        Bc = self.finish_counts[b]
        if X.dtype != object and int(X.max(initial=0)) * max(int(Bc.sum()), 1) >= _INT64_SAFE:
            X = X.astype(object)
        if X.dtype == object:
            Bc = Bc.astype(object)
        Z = Bc.T @ X  # Z[g, h] = sum_u finish[u, g] * X[u, h]
        out = [0] * self.group.order
        for g in range(self.group.order):
            row = Z[g]
            shift = self._shift_by[g]
            for s in range(self.group.order):
                out[s] += int(row[shift[s]])
        return out

    def sweep(self, m_max: int):
        """Yield (m, GroupVector) for m in span..m_max, in order, skipping
        lengths whose residue b has no terminal arcs."""
        sigma = self.digraph.span
        X = self._initial()
        a = 1
        while a * sigma <= m_max:
            for b in range(sigma):
                m = a * sigma + b
                if m > m_max:
                    break
                if b in self.finish_counts:
                    yield m, GroupVector(self.group, self._finish(X, b))
            X = self._step(X)
            a += 1

    def count_all(self, m: int) -> GroupVector:
        sigma = self.digraph.span
        a, b = divmod(m, sigma)
        if b not in self.finish_counts:
            raise NoTerminal(f"no terminal arcs into Seq_{b}")
        X = self._initial()
        for _ in range(a - 1):
            X = self._step(X)
        return GroupVector(self.group, self._finish(X, b))

    # -- complex evaluation at characters ----------------------------------

    @cached_property
    def _chi(self):
        G = self.group
        return np.array([[G.character(j, g) for g in G.elements] for j in G.elements])

    def evaluate_at_character(self, j_index: int, m: int) -> complex:
        """alpha(w^j) T(w^j)^(a-1) beta_b(w^j) in complex doubles."""
        chi = self._chi[j_index]
        sigma = self.digraph.span
        a, b = divmod(m, sigma)
        if b not in self.finish_counts:
            raise NoTerminal(f"no terminal arcs into Seq_{b}")
        wv = chi[self.weight_index]
        T = self.adjacency * wv[None, :]
        x = np.where(self.start_mask, wv, 0)
        for _ in range(a - 1):
            x = x @ T
        beta = self.finish_counts[b] @ chi
        return complex(x @ beta)


def build_transfer(D: RestrictionDigraph) -> TransferSystem:
    return TransferSystem(D)


def _system(D) -> TransferSystem:
    if isinstance(D, TransferSystem):
        return D
    cache = D.__dict__.get("_transfer")
    if cache is None:
        cache = TransferSystem(D)
        object.__setattr__(D, "_transfer", cache)
    return cache


def _short(D: RestrictionDigraph, m: int) -> GroupVector:
    G = D.group
    if m == 0:
        return ga_delta(G, G.zero)
    if D.predicate is None:
        raise Unsupported(f"m={m} is shorter than the span {D.span} and the digraph has no predicate")
    coeffs = [0] * G.order
    for seq in D.predicate.extensions(G, (), m):
        coeffs[G.index_of(G.size(seq))] += 1
    return GroupVector(G, coeffs)


def count_all(D, m: int) -> GroupVector:
    """Number of m-part compositions of every s, as a Z[G] vector."""
    if m < 0:
        raise ValueError("m must be >= 0")
    TS = _system(D)
    D = TS.digraph
    if m < D.span:
        return _short(D, m)
    return TS.count_all(m)


def count(D, m: int, s) -> int:
    TS = _system(D)
    s = TS.group.coerce(s)
    return count_all(TS, m)[s]


def count_table(D, ms) -> dict:
    """{m: GroupVector} for the requested m values, using one sweep."""
    TS = _system(D)
    D = TS.digraph
    ms = sorted(set(ms))
    out = {m: _short(D, m) for m in ms if m < D.span}
    wanted = {m for m in ms if m >= D.span}
    for m in wanted:
        if not D.has_terminal(m % D.span):
            raise NoTerminal(f"no terminal arcs into Seq_{m % D.span} (m={m})")
    if wanted:
        for m, vec in TS.sweep(max(wanted)):
            if m in wanted:
                out[m] = vec
    return out


@dataclass(frozen=True)
class Crosscheck:
    estimate: float
    exact: int
    agree: bool


def character_values(D, m: int) -> list:
    """C_m evaluated at every character, in group index order (complex doubles)."""
    TS = _system(D)
    D = TS.digraph
    if m < D.span:
        vec = _short(D, m)
        return [complex(sum(c * row[i] for i, c in enumerate(vec.coeffs))) for row in TS._chi]
    return [TS.evaluate_at_character(ji, m) for ji in range(TS.group.order)]


def multisection_estimates(D, m: int) -> list:
    """Floating-point c_m(s) for every s via the character average."""
    TS = _system(D)
    values = np.array(character_values(TS, m))
    # c(s) = (1/|G|) sum_j conj(chi_j(s)) C(w^j); chi is symmetric in (j, s)
    return list((TS._chi.conj() @ values).real / TS.group.order)


def multisection_crosscheck(D, m: int, s) -> Crosscheck:
    """Recover c_m(s) by averaging the generating function over characters."""
    TS = _system(D)
    G = TS.group
    s = G.coerce(s)
    exact = count(TS, m, s)
    if exact >= 2 ** 50:
        raise PrecisionRefused(f"count {exact} exceeds 2^50; double precision cannot certify it")
    estimate = float(multisection_estimates(TS, m)[G.index_of(s)])
    rounded = int(round(estimate))
    agree = rounded == exact and abs(estimate - exact) < 0.5
    return Crosscheck(estimate, exact, agree)
