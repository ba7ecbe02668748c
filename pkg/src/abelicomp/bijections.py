"""Prefix-sum, scaling and permutation bijections between composition classes."""
from __future__ import annotations

from .group_core import Group
from .oracle import enumerate_class, satisfies
from .restriction import ClassSpec, carlitz_spec, mullen_spec
from .transfer import count_all


def phi(G: Group, u) -> tuple:
    """Prefix sums: v_j = u_1 + ... + u_j."""
    out, acc = [], G.zero
    for x in u:
        acc = G.add(acc, x)
        out.append(acc)
    return tuple(out)


def phi_inv(G: Group, v) -> tuple:
    """Consecutive differences: u_j = v_j - v_{j-1} with v_0 = 0."""
    out, prev = [], G.zero
    for x in v:
        out.append(G.sub(x, prev))
        prev = x
    return tuple(out)


def scale(G: Group, a, u, field=None) -> tuple:
    """x -> a x, componentwise in the ring, or in ``field`` when given."""
    if field is not None:
        return tuple(field.mul(a, x) for x in u)
    return tuple(G.ring_mul(a, x) for x in u)


def _swap(G: Group, s, u):
    one = G.one
    if s == one:
        return tuple(u)
    return tuple(one if x == s else s if x == one else x for x in u)


def mullen_permutation_map(G: Group, s, u) -> tuple:
    """Send a locally d-Mullen composition of s to one of 1.

    Prefix sums turn u into a Carlitz-type sequence ending in s; swapping the
    values s and 1 keeps distinctness and nonzeroness, and the differences
    give back a Mullen composition, now summing to 1. The map is an
    involution when s != 1.
    """
    return phi_inv(G, _swap(G, s, phi(G, u)))


def check_bijection_prop5(G: Group, d: int, m: int, budget=None) -> dict:
    """Verify that prefix sums map locally d-Mullen m-compositions onto
    d-Carlitz weak m-compositions whose first d parts are nonzero."""
    source = mullen_spec(d)
    target = carlitz_spec(d, weak=True, first_d_nonzero=True)
    images = set()
    into = True
    round_trip = True
    n_source = 0
    for u in enumerate_class(G, source, m, budget):
        n_source += 1
        v = phi(G, u)
        if not satisfies(G, target, v):
            into = False
        if phi_inv(G, v) != u:
            round_trip = False
        images.add(v)
    n_target = sum(1 for _ in enumerate_class(G, target, m, budget))
    injective = len(images) == n_source
    return {
        "moduli": list(G.moduli), "d": d, "m": m,
        "source_size": n_source, "target_size": n_target,
        "maps_into_target": into, "injective": injective, "round_trip": round_trip,
        "bijection": into and injective and round_trip and n_source == n_target,
    }


def closed_under_units(spec: ClassSpec) -> bool:
    """Sum-nonzero and all-distinct windows survive multiplication by a unit."""
    return all(r.kind in ("sum_nonzero", "all_distinct") for r in spec.rules)


def is_mullen(spec: ClassSpec) -> bool:
    lengths = sorted(r.length for r in spec.rules if r.kind == "sum_nonzero")
    return (not spec.weak and spec.first_nonzero == 0 and len(lengths) == len(spec.rules)
            and lengths == list(range(1, len(lengths) + 1)))


def check_s_independence(D, m: int, verify_maps: bool = False, budget=None) -> dict:
    """Compare c_m(s) with c_m(1) wherever a bijection guarantees equality.

    For Mullen classes every nonzero s is asserted; for classes closed under
    unit multiplication, every s with a componentwise inverse. With
    ``verify_maps`` the concrete bijections are also run on the enumerated
    compositions.
    """
    G = D.group
    spec = D.predicate
    counts = count_all(D, m)
    one = G.one
    c1 = counts[one]
    if spec is not None and is_mullen(spec):
        reason = "mullen_permutation"
        asserted = [s for s in G.nonzero_elements if s != one]
    elif spec is not None and closed_under_units(spec):
        reason = "unit_multiplication"
        asserted = [s for s in G.nonzero_elements if s != one and G.ring_inverse(s) is not None]
    else:
        reason = "none"
        asserted = []
    holds = all(counts[s] == c1 for s in asserted)

    maps_ok = None
    if verify_maps and asserted:
        members = list(enumerate_class(G, spec, m, budget))
        by_sum = {}
        for u in members:
            by_sum.setdefault(G.size(u), set()).add(u)
        ones = by_sum.get(one, set())
        maps_ok = True
        for s in asserted:
            src = by_sum.get(s, set())
            if reason == "mullen_permutation":
                img = {mullen_permutation_map(G, s, u) for u in src}
            else:
                img = {scale(G, G.ring_inverse(s), u) for u in src}
            maps_ok &= img == ones
    nonzero = [counts[s] for s in G.nonzero_elements]
    return {
        "moduli": list(G.moduli), "m": m, "reason": reason,
        "counts": {",".join(map(str, s)): str(counts[s]) for s in G.elements},
        "asserted": [",".join(map(str, s)) for s in asserted],
        "holds": holds,
        "maps_verified": maps_ok,
        "all_nonzero_equal": len(set(nonzero)) == 1,
    }
