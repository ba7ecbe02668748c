"""Local-restriction digraphs for locally restricted compositions.

A class of compositions is described by a :class:`ClassSpec`: whether zero
parts are allowed, a list of window rules, and an optional "first d parts
nonzero" constraint. :func:`build_class` turns it into a
:class:`RestrictionDigraph` whose recurrent vertices are blocks of ``span``
parts; a composition with ``m >= span`` parts is a walk
``eps_s -> R -> ... -> R -> T``.

Window semantics:

* ``sum_nonzero`` and ``product_ne_one`` look at every run of exactly ``w``
  consecutive parts (shorter compositions are unconstrained by that rule);
* ``all_distinct`` forbids equal parts at distance ``< w``, so a composition
  shorter than ``w`` must have all parts distinct.

A locally d-Mullen class carries ``sum_nonzero`` at every length 1..d.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import DegenerateClass, InvalidDigraph, ParseError, ShapeError
from .finite_field import FieldSpec
from .group_core import Group

RULE_KINDS = ("sum_nonzero", "all_distinct", "product_ne_one")


@dataclass(frozen=True)
class WindowRule:
    length: int
    kind: str
    field: Optional[FieldSpec] = None

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("window length must be >= 1")
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown window rule {self.kind!r}")
        if self.kind == "product_ne_one" and self.field is None:
            raise ValueError("product_ne_one needs a FieldSpec")


@dataclass(frozen=True)
class ClassSpec:
    weak: bool = False
    rules: tuple = ()
    first_nonzero: int = 0
    name: str = ""

    @property
    def max_window(self) -> int:
        return max((r.length for r in self.rules), default=1)

    def natural_span(self) -> int:
        return max(1, self.max_window - 1, self.first_nonzero)

    def validate(self, G: Group):
        for r in self.rules:
            if r.kind == "product_ne_one" and r.field.group != G:
                raise ShapeError("product rule field does not match the group")
            if r.kind == "all_distinct" and r.length > G.order:
                raise DegenerateClass(
                    f"{r.length} pairwise distinct parts cannot fit in a group of order {G.order}")

    def ok_at(self, G: Group, seq, i: int, first_block: bool = True) -> bool:
        """Check every constraint whose window ends at position ``i``.

        Only completed windows are examined, so a prefix failing here can
        never be extended to a valid composition.
        """
        x = seq[i]
        nonzero = any(x)
        if not self.weak and not nonzero:
            return False
        if first_block and i < self.first_nonzero and not nonzero:
            return False
        for rule in self.rules:
            w = rule.length
            if rule.kind == "all_distinct":
                for j in range(max(0, i - w + 1), i):
                    if seq[j] == x:
                        return False
            elif i + 1 >= w:
                window = seq[i - w + 1:i + 1]
                if rule.kind == "sum_nonzero":
                    if not any(G.size(window)):
                        return False
                else:
                    F = rule.field
                    prod = F.one
                    for y in window:
                        prod = F.mul(prod, y)
                    if prod == F.one:
                        return False
        return True

    def is_valid(self, G: Group, seq, first_block: bool = True) -> bool:
        return all(self.ok_at(G, seq, i, first_block) for i in range(len(seq)))

    def extensions(self, G: Group, prefix, length: int, first_block: bool = True):
        """Yield every valid sequence of ``length`` parts extending ``prefix``.

        ``prefix`` itself is assumed valid.
        """
        seq = list(prefix)
        elements = G.elements

        def rec():
            if len(seq) == length:
                yield tuple(seq)
                return
            i = len(seq)
            seq.append(None)
            for e in elements:
                seq[i] = e
                if self.ok_at(G, seq, i, first_block):
                    yield from rec()
            seq.pop()

        yield from rec()

    def to_json(self) -> dict:
        return {
            "weak": self.weak,
            "first_nonzero": self.first_nonzero,
            "rules": [
                {"length": r.length, "kind": r.kind, **({"field": r.field.to_json()} if r.field else {})}
                for r in self.rules
            ],
        }


@dataclass(frozen=True, eq=False)
class RestrictionDigraph:
    """Blocks of ``span`` parts joined by arcs; see module docstring."""

    group: Group
    span: int
    recurrent: tuple
    start: tuple
    succ: tuple
    terminal: dict
    predicate: Optional[ClassSpec] = None
    sizes: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.group.size(u) for u in self.recurrent))

    @property
    def n_recurrent(self) -> int:
        return len(self.recurrent)

    @property
    def arcs(self):
        return [(u, v) for u, vs in enumerate(self.succ) for v in vs]

    def outdegree(self, u: int) -> int:
        return len(self.succ[u])

    def has_terminal(self, b: int) -> bool:
        return bool(self.terminal.get(b))

    def index(self, block) -> int:
        return self._index[tuple(tuple(p) for p in block)]

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {u: i for i, u in enumerate(self.recurrent)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def adjacency(self):
        import numpy as np

        n = self.n_recurrent
        A = np.zeros((n, n), dtype=np.int64)
        for u, vs in enumerate(self.succ):
            A[u, list(vs)] = 1
        return A


# -- builders ---------------------------------------------------------------

def build_class(G: Group, spec: ClassSpec, span: Optional[int] = None) -> RestrictionDigraph:
    """Build the restriction digraph of ``spec`` over ``G``.

    The default span is the smallest that lets every window fit inside two
    consecutive blocks; a larger ``span`` gives an equivalent digraph.
    """
    spec.validate(G)
    natural = spec.natural_span()
    sigma = natural if span is None else int(span)
    if sigma < natural:
        raise ValueError(f"span {sigma} is too small for this class (need >= {natural})")

    recurrent = tuple(spec.extensions(G, (), sigma, first_block=False))
    if not recurrent:
        raise DegenerateClass("no admissible block of parts: the class is empty")
    index = {u: i for i, u in enumerate(recurrent)}

    start = tuple(i for i, u in enumerate(recurrent) if spec.is_valid(G, u, first_block=True))
    if not start:
        raise DegenerateClass("no admissible first block")

    succ = []
    terminal = {b: [] for b in range(sigma)}
    for i, u in enumerate(recurrent):
        vs = sorted(index[ext[sigma:]] for ext in spec.extensions(G, u, 2 * sigma, first_block=False))
        succ.append(tuple(vs))
        for b in range(sigma):
            for ext in spec.extensions(G, u, sigma + b, first_block=False):
                terminal[b].append((i, ext[sigma:]))
    terminal = {b: tuple(arcs) for b, arcs in terminal.items() if arcs}
    return RestrictionDigraph(G, sigma, recurrent, start, tuple(succ), terminal, spec)


def mullen_spec(d: int) -> ClassSpec:
    return ClassSpec(weak=False, rules=tuple(WindowRule(w, "sum_nonzero") for w in range(1, d + 1)),
                     name=f"locally {d}-Mullen")


def carlitz_spec(d: int, weak: bool = False, first_d_nonzero: bool = False) -> ClassSpec:
    name = f"{d}-Carlitz" + (" weak" if weak else "") + (", first d nonzero" if first_d_nonzero else "")
    return ClassSpec(weak=weak, rules=(WindowRule(d + 1, "all_distinct"),),
                     first_nonzero=d if first_d_nonzero else 0, name=name)


def window_sum_spec(d: int, weak: bool = False) -> ClassSpec:
    return ClassSpec(weak=weak, rules=(WindowRule(d, "sum_nonzero"),),
                     name=f"window-{d} sum nonzero" + (" weak" if weak else ""))


def product_spec(F: FieldSpec, d: int) -> ClassSpec:
    return ClassSpec(weak=False, rules=(WindowRule(d, "product_ne_one", F),),
                     name=f"window-{d} product != 1")


def unrestricted_spec(weak: bool = False) -> ClassSpec:
    return ClassSpec(weak=weak, rules=(), name="unrestricted" + (" weak" if weak else ""))


def build_mullen(G: Group, d: int, span=None) -> RestrictionDigraph:
    return build_class(G, mullen_spec(d), span)


def build_carlitz(G: Group, d: int, weak: bool = False, first_d_nonzero: bool = False,
                  span=None) -> RestrictionDigraph:
    return build_class(G, carlitz_spec(d, weak, first_d_nonzero), span)


def build_window_sum(G: Group, d: int, weak: bool = False, span=None) -> RestrictionDigraph:
    return build_class(G, window_sum_spec(d, weak), span)


def build_window_product_ne_one(F: FieldSpec, d: int, span=None) -> RestrictionDigraph:
    return build_class(F.group, product_spec(F, d), span)


def build_unrestricted(G: Group, weak: bool = False) -> RestrictionDigraph:
    return build_class(G, unrestricted_spec(weak))


# -- structure ----------------------------------------------------------------

def _sccs(D: RestrictionDigraph):
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    n = D.n_recurrent
    rows = [u for u, v in D.arcs]
    cols = [v for u, v in D.arcs]
    graph = csr_matrix(([1] * len(rows), (rows, cols)), shape=(n, n))
    return connected_components(graph, directed=True, connection="strong")


def is_strongly_connected(D: RestrictionDigraph) -> bool:
    """True when D_R is strongly connected with at least two vertices."""
    if D.n_recurrent == 0:
        raise DegenerateClass("empty recurrent set")
    if D.n_recurrent < 2:
        return False
    ncomp, _ = _sccs(D)
    return ncomp == 1


def cycle_gcd(D: RestrictionDigraph) -> int:
    """gcd of all directed cycle lengths in D_R (0 when D_R is acyclic).

    Within each strong component, BFS levels give the period as the gcd of
    ``level[u] + 1 - level[v]`` over its arcs.
    """
    if D.n_recurrent == 0:
        raise DegenerateClass("empty recurrent set")
    _, labels = _sccs(D)
    g = 0
    seen = set()
    for root in range(D.n_recurrent):
        comp = labels[root]
        if comp in seen:
            continue
        seen.add(comp)
        level = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in D.succ[u]:
                if labels[v] != comp:
                    continue
                if v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
                else:
                    g = math.gcd(g, abs(level[u] + 1 - level[v]))
    return g


def degree_constants(D: RestrictionDigraph, b: int = 0):
    """(H, J, K) when every recurrent vertex has outdegree K and J arcs into
    Seq_b; None otherwise. H is the number of start arcs."""
    outdeg = {len(vs) for vs in D.succ}
    counts = [0] * D.n_recurrent
    for u, _ in D.terminal.get(b, ()):
        counts[u] += 1
    if len(outdeg) != 1 or len(set(counts)) != 1:
        return None
    return len(D.start), counts[0], outdeg.pop()


# -- walk witnesses for aperiodic sizes -----------------------------------------

@dataclass(frozen=True)
class Witness:
    coordinate: int
    length: int
    u: int
    v: int
    walks: tuple  # vertex index sequences u, w_1, ..., w_{l-1}, v

    def to_json(self, D: RestrictionDigraph) -> dict:
        return {
            "coordinate": self.coordinate,
            "length": self.length,
            "walks": [[[list(p) for p in D.recurrent[x]] for x in walk] for walk in self.walks],
        }


UNKNOWN = "Unknown"


def _int_size(block):
    # size with plain integer addition, not reduced mod k_t
    return tuple(sum(col) for col in zip(*block))


def walks_satisfy_condition2(D: RestrictionDigraph, t: int, walks) -> bool:
    """Check that ``walks`` (vertex sequences) share end points, length and the
    integer sizes of their inner vertices off coordinate t, while their inner
    sizes at coordinate t have pairwise differences with gcd 1."""
    walks = [tuple(w) for w in walks]
    if not walks or len({(w[0], w[-1], len(w)) for w in walks}) != 1:
        return False
    for w in walks:
        if any(b not in D.succ[a] for a, b in zip(w, w[1:])):
            return False
    sigs = set()
    N = set()
    for w in walks:
        sizes = [_int_size(D.recurrent[x]) for x in w[1:-1]]
        sigs.add(tuple(tuple(s[i] for i in range(len(s)) if i != t) for s in sizes))
        N.add(sum(s[t] for s in sizes))
    if len(sigs) != 1:
        return False
    base = min(N)
    return math.gcd(*(n - base for n in N)) == 1 if len(N) > 1 else False


def check_condition2(D: RestrictionDigraph, l_max: int, state_budget: int = 200_000):
    """Bounded search for walk witnesses (see walks_satisfy_condition2), one per coordinate.

    Returns a list of :class:`Witness` (one per coordinate) or ``UNKNOWN``
    when some coordinate has no witness with walk length <= ``l_max``.
    Absence of a witness proves nothing.
    """
    witnesses = []
    for t in range(D.group.rank):
        w = _search_coordinate(D, t, l_max, state_budget)
        if w is None:
            return UNKNOWN
        witnesses.append(w)
    return witnesses


def _search_coordinate(D, t, l_max, state_budget):
    isizes = [_int_size(u) for u in D.recurrent]
    other = [tuple(s[i] for i in range(len(s)) if i != t) for s in isizes]
    for length in range(2, l_max + 1):
        for u in range(D.n_recurrent):
            # state: (vertex, signature of intermediates, N) -> one example walk
            frontier = {(u, (), 0): (u,)}
            for _ in range(length - 1):
                nxt = {}
                for (x, sig, n), walk in frontier.items():
                    for y in D.succ[x]:
                        key = (y, sig + (other[y],), n + isizes[y][t])
                        if key not in nxt:
                            nxt[key] = walk + (y,)
                frontier = nxt
                if len(frontier) > state_budget:
                    break
            else:
                groups = {}
                for (x, sig, n), walk in frontier.items():
                    for v in D.succ[x]:
                        groups.setdefault((v, sig), {}).setdefault(n, walk + (v,))
                for (v, _), by_n in sorted(groups.items(), key=lambda kv: kv[0][0]):
                    if len(by_n) < 2:
                        continue
                    ns = sorted(by_n)
                    if math.gcd(*(n - ns[0] for n in ns)) != 1:
                        continue
                    chosen, g = [ns[0]], 0
                    for n in ns[1:]:
                        g2 = math.gcd(g, n - ns[0])
                        if g2 != g:
                            chosen.append(n)
                            g = g2
                        if g == 1:
                            break
                    return Witness(t, length, u, v, tuple(by_n[n] for n in chosen))
    return None


# -- JSON ------------------------------------------------------------------------

_KEYS = {"moduli", "span", "recurrent", "start", "arcs", "terminal"}


def save_digraph(D: RestrictionDigraph) -> str:
    data = {
        "moduli": list(D.group.moduli),
        "span": D.span,
        "recurrent": [[list(p) for p in u] for u in D.recurrent],
        "start": list(D.start),
        "arcs": [[u, v] for u, v in D.arcs],
        "terminal": {
            str(b): [[u, [list(p) for p in tail]] for u, tail in arcs]
            for b, arcs in sorted(D.terminal.items())
        },
    }
    return json.dumps(data)


def load_digraph(text) -> RestrictionDigraph:
    """Parse a custom digraph. Schema problems raise ParseError; structural
    violations of the digraph conditions raise InvalidDigraph."""
    try:
        data = json.loads(text) if isinstance(text, (str, bytes)) else text
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    if not isinstance(data, dict):
        raise ParseError("digraph JSON must be an object")
    extra = set(data) - _KEYS
    missing = _KEYS - set(data)
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}")
    if missing:
        raise ParseError(f"missing keys {sorted(missing)}")
    try:
        G = Group(tuple(data["moduli"]))
        sigma = int(data["span"])
        if sigma < 1:
            raise ParseError("span must be >= 1")
        recurrent = []
        for u in data["recurrent"]:
            block = tuple(G.coerce(p) for p in u)
            if len(block) != sigma:
                raise ParseError(f"recurrent vertex {u} does not have {sigma} parts")
            recurrent.append(block)
        if len(set(recurrent)) != len(recurrent):
            raise ParseError("duplicate recurrent vertex")
        n = len(recurrent)

        def vertex(i):
            if not isinstance(i, int) or not 0 <= i < n:
                raise ParseError(f"bad recurrent index {i!r}")
            return i

        start = tuple(sorted({vertex(i) for i in data["start"]}))
        succ = [set() for _ in range(n)]
        for arc in data["arcs"]:
            if len(arc) != 2:
                raise ParseError(f"bad arc {arc!r}")
            succ[vertex(arc[0])].add(vertex(arc[1]))
        terminal = {}
        if not isinstance(data["terminal"], dict):
            raise ParseError("terminal must map b to arc lists")
        for key, arcs in data["terminal"].items():
            b = int(key)
            if not 0 <= b < sigma:
                raise ParseError(f"terminal length {b} outside 0..{sigma - 1}")
            out = []
            for u, tail in arcs:
                tail = tuple(G.coerce(p) for p in tail)
                if len(tail) != b:
                    raise ParseError(f"terminal block {tail} filed under b={b}")
                out.append((vertex(u), tail))
            if out:
                terminal[b] = tuple(out)
    except (TypeError, KeyError, ValueError, ShapeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    if not recurrent:
        raise InvalidDigraph("recurrent set is empty")
    if not start:
        raise InvalidDigraph("no arc from the start vertex")
    if not terminal:
        raise InvalidDigraph("no arc into a terminal vertex")
    return RestrictionDigraph(G, sigma, tuple(recurrent), start,
                              tuple(tuple(sorted(s)) for s in succ), terminal, None)
