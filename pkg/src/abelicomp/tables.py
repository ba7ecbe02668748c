"""Presets pinning the group, class and (m, s) grid of the four published tables.

Layout: one row per s (ascending), one column per m (ascending).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .group_core import cyclic
from .restriction import build_carlitz, build_mullen, build_window_sum
from .transfer import count_table


@dataclass(frozen=True)
class Preset:
    name: str
    title: str
    moduli: tuple
    builder: object
    ms: tuple
    ss: tuple

    def digraph(self):
        return self.builder()


PRESETS = {
    "table1": Preset("table1", "Z_4, sum of any 3 consecutive parts nonzero", (4,),
                     lambda: build_window_sum(cyclic(4), 3, weak=False), tuple(range(2, 22)), (0, 1)),
    "table2": Preset("table2", "Z_5, locally 2-Mullen", (5,),
                     lambda: build_mullen(cyclic(5), 2), tuple(range(1, 11)), (0, 1)),
    "table3": Preset("table3", "Z_6, 2-Carlitz weak", (6,),
                     lambda: build_carlitz(cyclic(6), 2, weak=True), tuple(range(2, 11)), tuple(range(6))),
    "table4": Preset("table4", "Z_6, 2-Carlitz", (6,),
                     lambda: build_carlitz(cyclic(6), 2, weak=False), tuple(range(2, 11)), tuple(range(6))),
}


def compute_table(name: str) -> dict:
    """{s: [c_m(s) for m in preset.ms]}."""
    preset = PRESETS[name]
    vectors = count_table(preset.digraph(), preset.ms)
    return {s: [vectors[m][(s,)] for m in preset.ms] for s in preset.ss}


def render_csv(name: str) -> str:
    preset = PRESETS[name]
    rows = compute_table(name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s"] + list(preset.ms))
    for s in preset.ss:
        writer.writerow([s] + rows[s])
    return buf.getvalue()


def render_json(name: str) -> str:
    preset = PRESETS[name]
    rows = compute_table(name)
    return json.dumps({
        "preset": name,
        "class": preset.title,
        "moduli": list(preset.moduli),
        "m": list(preset.ms),
        "rows": {str(s): [str(c) for c in rows[s]] for s in preset.ss},
    }, indent=1) + "\n"
