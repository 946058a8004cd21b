"""Combined search: Cartesian products of known circulants with coprime orders.

Every (degree, diameter) split of the target is tried with the largest known
*set-bearing* graph of each part.  Products whose factor orders share a
divisor are not circulant, so for those the factor orders are stepped down
until a coprime factor of the same degree and diameter turns up, either in
the record table or through a bounded run of the pruned DFS.
"""
from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass, field

from .constructions import VERIFY_CAP, ProductWitness, cartesian_product
from .errors import NoProductFound, ParityError
from .records import RecordEntry, RecordTable
from .search import Mode, PruneConfig, search

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 20_000


@dataclass(order=True)
class _Candidate:
    key: int  # negated order, so ascending sort puts the largest first
    first: RecordEntry = field(compare=False)
    second: RecordEntry = field(compare=False)

    @property
    def order(self) -> int:
        return -self.key

    @property
    def coprime(self) -> bool:
        return math.gcd(self.first.order, self.second.order) == 1


@dataclass
class CombineReport:
    witness: ProductWitness
    first: RecordEntry
    second: RecordEntry
    lookups: list[tuple[int, int, int, str]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.witness.order


class FactorFinder:
    """Looks up circulants of an exact (degree, diameter, order), caching searches."""

    def __init__(self, records: RecordTable, budget: int | None, cfg: PruneConfig | None = None):
        self.records = records
        self.budget = budget
        self.cfg = cfg or PruneConfig()
        self.trail: list[tuple[int, int, int, str]] = []
        self._cache: dict[tuple[int, int, int], RecordEntry | None] = {}

    def __call__(self, deg: int, diam: int, n: int) -> RecordEntry | None:
        key = (deg, diam, n)
        if key in self._cache:
            return self._cache[key]
        hit = self.records.find(deg, diam, n)
        how = "records" if hit else "none"
        if hit is None and self.budget:
            hit = self._search(deg, diam, n)
            how = "search" if hit else "none"
        self.trail.append((deg, diam, n, how))
        self._cache[key] = hit
        return hit

    def _search(self, deg, diam, n) -> RecordEntry | None:
        if n < deg + 1:
            return None
        try:
            out = search(n, deg, diam, self.cfg, Mode.FIRST, max_nodes=self.budget)
        except ParityError:
            return None
        if not out.solutions:
            return None
        return RecordEntry(deg, diam, n, out.solutions[0], "search", verified=True)


def _insert(A: list[_Candidate], c: _Candidate) -> int:
    i = bisect.bisect_right(A, c)
    A.insert(i, c)
    return i


def combined_search(
    deg: int,
    diam: int,
    records: RecordTable,
    budget: int | None = DEFAULT_BUDGET,
    *,
    cfg: PruneConfig | None = None,
    verify_cap: int = VERIFY_CAP,
) -> CombineReport:
    """Largest coprime product C(n; S1) x C(m; S2) of degree ``deg`` and diameter ``diam``.

    ``budget`` caps the nodes of each sub-search for a replacement factor;
    0 or None restricts replacements to graphs already in ``records``.
    """
    if deg < 4 or diam < 2:
        raise ValueError("combined search needs degree >= 4 and diameter >= 2")
    find = FactorFinder(records, budget, cfg)
    best = 0
    A: list[_Candidate] = []
    for i in range(2, deg // 2 + 1):
        for j in range(1, diam // 2 + 1):
            e1 = records.best_with_set(i, j)
            e2 = records.best_with_set(deg - i, diam - j)
            if e1 is None or e2 is None:
                continue
            c = _Candidate(-(e1.order * e2.order), e1, e2)
            if c.order > best:
                pos = _insert(A, c)
                if c.coprime:
                    best = c.order
                    del A[pos + 1 :]

    while A and not A[0].coprime:
        c = A.pop(0)
        e1, e2 = c.first, c.second
        n, m = e1.order, e2.order

        n2, g1 = n - 1, None
        while n2 * m > best:
            if math.gcd(n2, m) == 1:
                g1 = find(e1.degree, e1.diameter, n2)
                if g1 is not None:
                    break
            n2 -= 1
        m2, g2 = m - 1, None
        while n * m2 > best:
            if math.gcd(n, m2) == 1:
                g2 = find(e2.degree, e2.diameter, m2)
                if g2 is not None:
                    break
            m2 -= 1

        options = []
        if g1 is not None:
            options.append(_Candidate(-(n2 * m), g1, e2))
        if g2 is not None:
            options.append(_Candidate(-(n * m2), e1, g2))
        if not options:
            continue
        new = min(options)
        pos = _insert(A, new)
        best = new.order
        del A[pos + 1 :]

    if not A:
        raise NoProductFound(f"no coprime product of degree {deg} and diameter {diam}")
    top = A[0]
    w = cartesian_product(
        top.first.graph,
        top.second.graph,
        verify_cap=verify_cap,
        diameters=(top.first.diameter, top.second.diameter),
    )
    return CombineReport(w, top.first, top.second, find.trail)


def product_entry(report: CombineReport) -> RecordEntry:
    w = report.witness
    return RecordEntry(w.degree, w.diameter, w.order, w.product.S, "product", verified=w.measured)
