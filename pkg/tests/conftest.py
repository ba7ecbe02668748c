import sys

import pytest

from abelicomp.errors import DegenerateClass
from abelicomp.finite_field import make_field
from abelicomp.group_core import make_group
from abelicomp.restriction import (
    build_class, carlitz_spec, mullen_spec, product_spec, unrestricted_spec, window_sum_spec,
)

SMALL_GROUPS = [[2], [3], [4], [5], [6], [2, 2], [2, 3]]
SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]


def builtin_specs(G, d_max=3, fields=()):
    """(label, spec) for every built-in class over G with d <= d_max."""
    out = [("unrestricted", unrestricted_spec(False)), ("unrestricted-weak", unrestricted_spec(True))]
    for d in range(1, d_max + 1):
        out += [
            (f"mullen-{d}", mullen_spec(d)),
            (f"carlitz-{d}", carlitz_spec(d)),
            (f"carlitz-weak-{d}", carlitz_spec(d, weak=True)),
            (f"carlitz-weak-first-{d}", carlitz_spec(d, weak=True, first_d_nonzero=True)),
            (f"window-sum-{d}", window_sum_spec(d)),
            (f"window-sum-weak-{d}", window_sum_spec(d, weak=True)),
        ]
        for F in fields:
            if F.group == G:
                out.append((f"product-{d}-GF{F.q}", product_spec(F, d)))
    return out


def all_small_configs(d_max=3):
    fields = [make_field(p, n) for p, n in SMALL_FIELDS]
    for moduli in SMALL_GROUPS:
        G = make_group(moduli)
        for label, spec in builtin_specs(G, d_max, fields):
            yield G, label, spec


def try_build(G, spec):
    try:
        return build_class(G, spec)
    except DegenerateClass:
        return None


@pytest.fixture
def z5():
    return make_group([5])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
