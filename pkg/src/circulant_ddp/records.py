"""Best-known circulant graphs per (degree, diameter) cell.

A :class:`RecordTable` keeps one best entry per cell plus a list of other
set-bearing graphs ("alternates") that are smaller than the best but still
useful, e.g. as coprime factors for Cartesian products.
"""
from __future__ import annotations

import json
import math
import threading
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from .bounds import circulant_upper_bound
from .constructions import cartesian_product, decompose_product, known_family
from .data import found_sets as found
from .data import record_tables as tables
from .errors import RejectedUnverified
from .graph import CirculantGraph, ConnectionSet, distances_from_zero, is_connected, parse_set
from .grid import Grid

SCHEMA_VERSION = 1

Cell = tuple[int, int]


@dataclass(frozen=True)
class RecordEntry:
    degree: int
    diameter: int
    order: int
    set: ConnectionSet | None = None
    source: str = ""
    optimal: bool = False
    verified: bool = False

    @property
    def cell(self) -> Cell:
        return self.degree, self.diameter

    @property
    def graph(self) -> CirculantGraph | None:
        return None if self.set is None else CirculantGraph(self.set.n, self.set)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["set"] = None if self.set is None else self.set.to_text()
        if d["set"] is None:
            del d["set"]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RecordEntry":
        d = dict(d)
        text = d.pop("set", None)
        return cls(set=None if text is None else parse_set(text), **d)


@dataclass
class VerificationReport:
    entry: RecordEntry
    degree: int | None = None
    order: int | None = None
    diameter: float | None = None
    connected: bool | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.set_present and not self.mismatches

    @property
    def set_present(self) -> bool:
        return self.entry.set is not None

    def __str__(self) -> str:
        e = self.entry
        head = f"({e.degree},{e.diameter}) order {e.order}"
        if not self.set_present:
            return f"{head}: no connection set"
        if self.passed:
            return f"{head}: ok, diameter {self.diameter}, degree {self.degree}"
        return f"{head}: MISMATCH " + "; ".join(self.mismatches)


def verify_entry(e: RecordEntry) -> VerificationReport:
    """Recompute degree, order, connectivity and diameter of the entry's graph."""
    rep = VerificationReport(e)
    if e.set is None:
        rep.mismatches.append("no connection set")
        return rep
    G = CirculantGraph(e.set.n, e.set)
    rep.degree, rep.order = G.degree, G.n
    rep.connected = is_connected(G)
    rep.diameter = distances_from_zero(G).ecc
    if rep.degree != e.degree:
        rep.mismatches.append(f"degree {rep.degree} != {e.degree}")
    if rep.order != e.order:
        rep.mismatches.append(f"order {rep.order} != {e.order}")
    if not rep.connected:
        rep.mismatches.append("disconnected")
    if rep.diameter != e.diameter:
        rep.mismatches.append(f"diameter {rep.diameter} != {e.diameter}")
    if e.order > circulant_upper_bound(e.degree, e.diameter):
        rep.mismatches.append("order exceeds the upper bound")
    return rep


class RecordTable:
    """Single-writer, multi-reader table; updates are serialized by a lock."""

    def __init__(self, entries=(), alternates=()):
        self._lock = threading.Lock()
        self.entries: dict[Cell, RecordEntry] = {}
        self.alternates: dict[Cell, list[RecordEntry]] = {}
        for e in entries:
            self.entries[e.cell] = e
        for e in alternates:
            self.alternates.setdefault(e.cell, []).append(e)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, RecordTable) and self.to_json() == other.to_json()

    def get(self, deg: int, diam: int) -> RecordEntry | None:
        return self.entries.get((deg, diam))

    def known_graphs(self, deg: int, diam: int) -> list[RecordEntry]:
        """All set-bearing entries of the cell, largest order first."""
        cands = list(self.alternates.get((deg, diam), ()))
        best = self.entries.get((deg, diam))
        if best is not None:
            cands.append(best)
        return sorted((e for e in cands if e.set is not None), key=lambda e: -e.order)

    def best_with_set(self, deg: int, diam: int) -> RecordEntry | None:
        known = self.known_graphs(deg, diam)
        return known[0] if known else None

    def find(self, deg: int, diam: int, order: int) -> RecordEntry | None:
        for e in self.known_graphs(deg, diam):
            if e.order == order:
                return e
        return None

    def add(self, e: RecordEntry) -> None:
        """Merge ``e`` without verification (seeding and loading)."""
        with self._lock:
            self._merge(e)

    def _merge(self, e: RecordEntry) -> None:
        cur = self.entries.get(e.cell)
        if cur is None:
            self.entries[e.cell] = e
        elif e.order > cur.order:
            self.entries[e.cell] = e
            self._push_alternate(cur)
        elif e.order == cur.order:
            if cur.set is None and e.set is not None:
                self.entries[e.cell] = replace(e, optimal=e.optimal or cur.optimal)
            elif e.optimal and not cur.optimal:
                self.entries[e.cell] = replace(cur, optimal=True)
        else:
            self._push_alternate(e)

    def _push_alternate(self, e: RecordEntry) -> None:
        if e.set is None:
            return
        alts = self.alternates.setdefault(e.cell, [])
        if all(a.set != e.set for a in alts):
            alts.append(e)
            alts.sort(key=lambda a: (-a.order, a.set))

    def replace_entry(self, e: RecordEntry) -> None:
        with self._lock:
            if e.cell in self.entries and self.entries[e.cell].set == e.set:
                self.entries[e.cell] = e
            else:
                alts = self.alternates.get(e.cell, [])
                for i, a in enumerate(alts):
                    if a.set == e.set:
                        alts[i] = e

    def all_entries(self):
        yield from (self.entries[c] for c in sorted(self.entries))
        for c in sorted(self.alternates):
            yield from self.alternates[c]

    def to_json(self) -> str:
        doc = {
            "version": SCHEMA_VERSION,
            "entries": [self.entries[c].to_dict() for c in sorted(self.entries)],
            "alternates": [a.to_dict() for c in sorted(self.alternates) for a in self.alternates[c]],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RecordTable":
        doc = json.loads(text)
        if doc.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported records schema version {doc.get('version')!r}")
        return cls(
            [RecordEntry.from_dict(d) for d in doc["entries"]],
            [RecordEntry.from_dict(d) for d in doc.get("alternates", [])],
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def load(cls, path: str | Path) -> "RecordTable":
        return cls.from_json(Path(path).read_text())


def update_if_better(t: RecordTable, e: RecordEntry) -> bool:
    """Store ``e`` iff it verifies and strictly beats the cell's current order."""
    rep = verify_entry(e)
    if not rep.passed:
        raise RejectedUnverified(str(rep))
    e = replace(e, verified=True)
    with t._lock:
        cur = t.entries.get(e.cell)
        if cur is not None and e.order <= cur.order:
            return False
        t._merge(e)
        return True


def verify_table(t: RecordTable) -> list[VerificationReport]:
    """Verify every set-bearing entry and alternate, flagging the ones that pass."""
    reports = []
    for e in list(t.all_entries()):
        if e.set is None:
            continue
        rep = verify_entry(e)
        reports.append(rep)
        if rep.passed != e.verified:
            t.replace_entry(replace(e, verified=rep.passed))
    return reports


def _citation(source: str) -> str:
    return {"T2": "table:new-networks", "T3": "table:new-networks", "": "table:table"}.get(
        source, f"table:table [{source}]"
    )


def _split(n: int, gens) -> ConnectionSet:
    return ConnectionSet(n, tuple(g for g in gens if 2 * g != n), any(2 * g == n for g in gens))


def seed_builtin() -> RecordTable:
    """Record table populated from the published tables.

    Connection sets come from the set-bearing tables, the classical families
    (cycles, degree 3 and 4, complete graphs) and from splitting published
    product graphs into their factors; product-table graphs are rebuilt from
    their factors when both factor sets are known.  The unreadable (16, 3)
    cell is left out.
    """
    t = RecordTable()
    for deg, cells in tables.BIG_TABLE_ORDERS.items():
        for diam, cell in zip(tables.DIAMETERS, cells):
            if cell is None:
                continue
            order, source = cell
            pct = tables.BIG_TABLE_PERCENT[deg][diam - tables.DIAMETERS[0]]
            t.add(RecordEntry(deg, diam, order, None, _citation(source), optimal=pct == 100))

    for deg in range(2, 17):
        for diam in range(1, 11):
            G = known_family(deg, diam)
            if G is not None:
                t.add(RecordEntry(deg, diam, G.n, G.S, "family", optimal=True))

    for deg, diam, n, gens, flags in tables.SEARCH_TABLE:
        t.add(RecordEntry(deg, diam, n, _split(n, gens), "table:connection-sets", optimal="L" in flags))
    for deg, diam, n, gens, optimal in tables.NEW_NETWORKS:
        erratum = tables.ERRATA.get((deg, diam, n))
        source = "table:new-networks"
        if erratum is not None and tuple(gens) == erratum["printed"]:
            gens, source = erratum["corrected"], "table:new-networks (corrected)"
        t.add(RecordEntry(deg, diam, n, _split(n, gens), source, optimal=optimal))

    for deg, diam, n, gens in found.FACTOR_SETS:
        t.add(RecordEntry(deg, diam, n, _split(n, gens), "search"))

    # factors hidden inside published product graphs
    for (deg, diam, order), f1, f2 in tables.product_rows():
        host = t.find(deg, diam, order)
        if host is None:
            continue
        try:
            G1, G2 = decompose_product(host.graph, f1[2])
        except ValueError:
            continue
        for (d, D, n), G in ((f1, G1), (f2, G2)):
            if G.degree == d and G.n == n and t.find(d, D, n) is None:
                t.add(RecordEntry(d, D, n, G.S, "table:product-factor"))

    for (deg, diam, order), f1, f2 in tables.product_rows():
        if t.find(deg, diam, order) is not None:
            continue
        e1, e2 = t.find(*f1), t.find(*f2)
        S = None
        if e1 is not None and e2 is not None:
            S = cartesian_product(e1.graph, e2.graph, verify_cap=0, diameters=(f1[1], f2[1])).product.S
        t.add(RecordEntry(deg, diam, order, S, "table:product"))
    return t


def percentage_grid(t: RecordTable, deg_range=(3, 16), diam_range=(2, 10)) -> Grid:
    """100 * order / upper bound per cell, recomputed from the current records."""

    def pct(deg, diam):
        e = t.get(deg, diam)
        if e is None:
            return None
        return 100.0 * e.order / circulant_upper_bound(deg, diam)

    return Grid.from_function(pct, deg_range, diam_range)


def order_grid(t: RecordTable, deg_range=(3, 16), diam_range=(2, 10)) -> Grid:
    def order(deg, diam):
        e = t.get(deg, diam)
        return None if e is None else e.order

    return Grid.from_function(order, deg_range, diam_range)


def render_table(t: RecordTable, fmt: str = "text", deg_range=(3, 16), diam_range=(2, 10)) -> str:
    """Four-element cells: order, source, bound, percentage."""
    rows = []
    for deg in range(deg_range[0], deg_range[1] + 1):
        for diam in range(diam_range[0], diam_range[1] + 1):
            e = t.get(deg, diam)
            ub = circulant_upper_bound(deg, diam)
            if e is None:
                rows.append((deg, diam, "", "", ub, ""))
            else:
                rows.append((deg, diam, e.order, e.source, ub, f"{100 * e.order / ub:.1f}"))
    if fmt == "csv":
        lines = ["degree,diameter,order,source,bound,percent"]
        lines += [",".join(f'"{v}"' if isinstance(v, str) and "," in v else str(v) for v in r) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        keys = ("degree", "diameter", "order", "source", "bound", "percent")
        return json.dumps([dict(zip(keys, r)) for r in rows], indent=1) + "\n"
    width = max(len(str(r[3])) for r in rows)
    out = [f"{'deg':>3} {'diam':>4} {'order':>8} {'source':<{width}} {'bound':>9} {'pct':>6}"]
    for r in rows:
        out.append(f"{r[0]:>3} {r[1]:>4} {str(r[2]):>8} {str(r[3]):<{width}} {r[4]:>9} {r[5]:>6}")
    return "\n".join(out) + "\n"
