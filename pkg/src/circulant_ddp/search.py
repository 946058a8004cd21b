"""Pruned depth-first search over connection sets, plus a brute-force oracle.

The search tree is rooted at {+-1} (even degree) or {+-1, n/2} (odd degree);
a node with largest proper generator m has one child per g in
[m + k, (n - k) // 2] (even) or [m + k, n/2 - k] (odd).  Leaves have the
target degree and are reported when their diameter equals the target.

A node is cut when some vertex w at distance i < D from 0 has more than
``c[i, d]`` path classes of length d, for some i <= d < D.  A path class is a
multiset of signed generator steps; it is counted for its target when the
walk taking the steps in ascending order (steps ordered by their value in
(-n/2, n/2]) visits no vertex twice, a return to 0 at the very end excepted.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .bounds import circulant_upper_bound
from .errors import InvalidGenerator, ParityError, TooLarge
from .graph import (
    CirculantGraph,
    ConnectionSet,
    DistanceProfile,
    bit_eccentricity,
    distances_from_zero,
)

log = logging.getLogger(__name__)

ORACLE_LIMIT = 10**7


class Mode(str, Enum):
    FIRST = "first"
    ALL = "all"


@dataclass(frozen=True)
class PathClass:
    steps: tuple[int, ...]
    target: int


@dataclass
class PruneConfig:
    """Search restrictions: minimum generator gap ``k`` and path-count ceilings.

    ``ceilings`` maps (i, d) to the largest allowed number of length-d path
    classes to a vertex at distance i.  Missing keys are unbounded.
    """

    k: int = 1
    ceilings: dict[tuple[int, int], int] = field(default_factory=dict)
    require_s1_eq_1: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        for (i, d), c in self.ceilings.items():
            if not 0 <= i <= d:
                raise ValueError(f"ceiling ({i}, {d}) needs 0 <= i <= d")
            if c < 0:
                raise ValueError(f"ceiling ({i}, {d}) is negative")

    @property
    def bounded(self) -> bool:
        return bool(self.ceilings)

    def ceiling(self, i: int, d: int) -> float:
        return self.ceilings.get((i, d), math.inf)

    def tightened(self, **changes) -> "PruneConfig":
        return PruneConfig(
            changes.get("k", self.k),
            dict(changes.get("ceilings", self.ceilings)),
            changes.get("require_s1_eq_1", self.require_s1_eq_1),
        )

    def to_text(self) -> str:
        lines = [f"k {self.k}"]
        lines += [f"{i} {d} {c}" for (i, d), c in sorted(self.ceilings.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, **kwargs) -> "PruneConfig":
        k = 1
        ceilings = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "k" and len(parts) == 2:
                k = int(parts[1])
            elif len(parts) == 3:
                i, d, c = (int(p) for p in parts)
                ceilings[(i, d)] = c
            else:
                raise ValueError(f"line {lineno}: expected 'i d ceiling' or 'k <int>', got {raw!r}")
        return cls(k=k, ceilings=ceilings, **kwargs)

    @classmethod
    def load(cls, path: str | Path, **kwargs) -> "PruneConfig":
        return cls.from_text(Path(path).read_text(), **kwargs)

    @classmethod
    def unbounded(cls, **kwargs) -> "PruneConfig":
        return cls(**kwargs)

    @classmethod
    def default(cls, **kwargs) -> "PruneConfig":
        text = resources.files("circulant_ddp").joinpath("data/default_ceilings.txt").read_text()
        return cls.from_text(text, **kwargs)


@dataclass
class SearchOutcome:
    solutions: list[ConnectionSet]
    nodes_visited: int = 0
    pruned: int = 0
    exhausted: bool = True


def _signed(n: int, proper: Sequence[int], half: bool) -> list[int]:
    return [n - s for s in reversed(proper)] + list(proper) + ([n // 2] if half else [])


def path_counts(n: int, signed: Sequence[int], dmax: int) -> list[dict[int, int]]:
    """counts[d][w] = number of length-d path classes from 0 to w, for d <= dmax.

    ``signed`` must already be in the canonical step order.
    """
    counts: list[dict[int, int]] = [dict() for _ in range(dmax + 1)]
    counts[0][0] = 1
    if dmax == 0:
        return counts
    visited = {0}
    steps = list(signed)
    nsteps = len(steps)

    def walk(start: int, pos: int, depth: int) -> None:
        layer = counts[depth + 1]
        for j in range(start, nsteps):
            nxt = (pos + steps[j]) % n
            if nxt in visited:
                if nxt == 0:
                    layer[0] = layer.get(0, 0) + 1
                continue
            layer[nxt] = layer.get(nxt, 0) + 1
            if depth + 1 < dmax:
                visited.add(nxt)
                walk(j, nxt, depth + 1)
                visited.discard(nxt)

    walk(0, 0, 0)
    return counts


def path_classes(G: CirculantGraph, w: int, d: int, D: int | None = None) -> list[PathClass]:
    """The length-d path classes from 0 to w, each as its sorted signed-step multiset."""
    if d < 1:
        raise ValueError("path length must be >= 1")
    if D is not None and d >= D:
        raise ValueError(f"path length {d} must be below the diameter {D}")
    n = G.n
    w %= n
    steps = G.S.signed()
    found = []
    for combo in itertools.combinations_with_replacement(range(len(steps)), d):
        pos = 0
        seen = {0}
        ok = True
        for idx, j in enumerate(combo):
            pos = (pos + steps[j]) % n
            if pos in seen and not (pos == 0 and idx == d - 1):
                ok = False
                break
            seen.add(pos)
        if ok and pos == w:
            found.append(PathClass(tuple(steps[j] for j in combo), w))
    return found


def _admissible(n: int, signed: Sequence[int], D: int, cfg: PruneConfig, dist=None) -> bool:
    if D < 1:
        return True
    counts = path_counts(n, signed, D - 1)
    if dist is None:
        # the shortest walks are simple, so the first length with a class is the distance
        dist = {}
        for d, layer in enumerate(counts):
            for w in layer:
                dist.setdefault(w, d)
        dist[0] = 0
        lookup = dist.get
    else:
        lookup = lambda w: int(dist[w])  # noqa: E731
    for d, layer in enumerate(counts):
        for w, c in layer.items():
            i = lookup(w)
            if i is not None and i <= d and c > cfg.ceiling(i, d):
                return False
    return True


def prune_admissible(
    G: CirculantGraph, D: int, cfg: PruneConfig, profile: DistanceProfile | None = None
) -> bool:
    """False iff some w at distance i < D has |P_w^d| > c[i, d] for some i <= d < D."""
    if not cfg.bounded:
        return True
    dist = profile.dist if profile is not None else None
    return _admissible(G.n, G.S.signed(), D, cfg, dist)


class _Stop(Exception):
    pass


class _Explorer:
    def __init__(self, n, deg, D, cfg, mode, max_nodes):
        self.n, self.D, self.cfg, self.mode = n, D, cfg, Mode(mode)
        self.t, self.odd = divmod(deg, 2)
        self.top = n // 2 - cfg.k if self.odd else (n - cfg.k) // 2
        self.max_nodes = max_nodes
        self.out = SearchOutcome([])
        self.stopped = False

    def steps(self, gens):
        return _signed(self.n, gens, self.odd)

    def visit(self, gens: tuple[int, ...]) -> None:
        out = self.out
        if self.max_nodes is not None and out.nodes_visited >= self.max_nodes:
            out.exhausted = False
            raise _Stop
        out.nodes_visited += 1
        steps = self.steps(gens)
        if len(gens) < self.t:
            if self.cfg.bounded and not _admissible(self.n, steps, self.D, self.cfg):
                out.pruned += 1
                return
            for g in range(gens[-1] + self.cfg.k, self.top + 1):
                self.visit(gens + (g,))
            return
        if bit_eccentricity(self.n, steps, cap=self.D) != self.D:
            return
        if self.cfg.bounded and not _admissible(self.n, steps, self.D, self.cfg):
            out.pruned += 1
            return
        S = ConnectionSet(self.n, gens, bool(self.odd))
        if distances_from_zero(CirculantGraph(self.n, S)).ecc != self.D:
            raise AssertionError(f"bitset and array BFS disagree on {S}")
        out.solutions.append(S)
        if self.mode is Mode.FIRST:
            out.exhausted = False
            raise _Stop

    def run(self, first_level: Iterable[int]) -> SearchOutcome:
        try:
            for g in first_level:
                self.visit((g,))
                log.info("n=%d s1=%d done: %d nodes, %d pruned", self.n, g, self.out.nodes_visited, self.out.pruned)
        except _Stop:
            self.stopped = True
        return self.out


def _first_level(n: int, deg: int, cfg: PruneConfig) -> list[int]:
    t, odd = divmod(deg, 2)
    top = n // 2 - cfg.k if odd else (n - cfg.k) // 2
    if cfg.require_s1_eq_1:
        return [1] if top >= 1 else []
    return list(range(1, top + 1))


def _run_chunk(args) -> SearchOutcome:
    n, deg, D, cfg, mode, max_nodes, chunk = args
    return _Explorer(n, deg, D, cfg, mode, max_nodes).run(chunk)


def _validate(n: int, deg: int, D: int) -> None:
    if deg < 2:
        raise ValueError(f"degree must be >= 2, got {deg}")
    if deg % 2 and n % 2:
        raise ParityError(f"odd degree {deg} needs an even order, got n={n}")
    if n < deg + 1:
        raise ValueError(f"order {n} too small for degree {deg}")
    if D < 1:
        raise ValueError("diameter must be >= 1")


def search(
    n: int,
    deg: int,
    D: int,
    cfg: PruneConfig | None = None,
    mode: Mode | str = Mode.FIRST,
    *,
    max_nodes: int | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Find connection sets of degree ``deg`` on Z_n whose circulant has diameter exactly ``D``.

    With ``workers > 1`` the first-level generators are split into contiguous
    chunks explored in separate processes; the reported solutions do not
    depend on the worker count.  ``max_nodes`` bounds the work per worker.
    """
    _validate(n, deg, D)
    cfg = cfg or PruneConfig()
    mode = Mode(mode)
    first = _first_level(n, deg, cfg)
    if workers <= 1 or len(first) < 2:
        out = _Explorer(n, deg, D, cfg, mode, max_nodes).run(first)
        out.solutions.sort()
        return out
    size = -(-len(first) // workers)
    chunks = [first[i : i + size] for i in range(0, len(first), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_chunk, [(n, deg, D, cfg, mode, max_nodes, c) for c in chunks]))
    merged = SearchOutcome([], exhausted=True)
    for part in parts:
        merged.nodes_visited += part.nodes_visited
        merged.pruned += part.pruned
        merged.exhausted &= part.exhausted
        if mode is Mode.FIRST and part.solutions and not merged.solutions:
            merged.solutions = part.solutions[:1]
        elif mode is Mode.ALL:
            merged.solutions.extend(part.solutions)
    merged.solutions.sort()
    if mode is Mode.FIRST and merged.solutions:
        merged.exhausted = False
    return merged


def _bfs_eccentricity(G: CirculantGraph) -> float:
    # plain queue BFS, kept apart from the bitset and numpy routes on purpose
    n = G.n
    steps = G.S.signed()
    dist = [-1] * n
    dist[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for s in steps:
            w = (v + s) % n
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return math.inf if min(dist) < 0 else max(dist)


def brute_force_oracle(n: int, deg: int, D: int) -> list[ConnectionSet]:
    """Every canonical connection set of degree ``deg`` on Z_n with diameter exactly D."""
    if deg < 1:
        raise ValueError("degree must be >= 1")
    t, odd = divmod(deg, 2)
    if odd and n % 2:
        return []
    candidates = list(range(1, (n + 1) // 2))
    if math.comb(len(candidates), t) > ORACLE_LIMIT:
        raise TooLarge(f"C({len(candidates)}, {t}) combinations exceed {ORACLE_LIMIT}")
    found = []
    for combo in itertools.combinations(candidates, t):
        try:
            S = ConnectionSet(n, combo, bool(odd))
        except InvalidGenerator:
            continue
        if _bfs_eccentricity(CirculantGraph(n, S)) == D:
            found.append(S)
    return sorted(found)


def max_order_search(
    deg: int,
    D: int,
    n_lo: int,
    n_hi: int,
    cfg: PruneConfig | None = None,
    *,
    max_nodes: int | None = None,
    workers: int = 1,
) -> tuple[int, ConnectionSet] | None:
    """Scan n from n_hi down to n_lo and return the first order admitting a solution."""
    ub = circulant_upper_bound(deg, D)
    if n_hi > ub:
        raise ValueError(f"n_hi = {n_hi} exceeds the upper bound {ub} for ({deg}, {D})")
    for n in range(n_hi, n_lo - 1, -1):
        if (deg % 2 and n % 2) or n < deg + 1:
            continue
        out = search(n, deg, D, cfg, Mode.FIRST, max_nodes=max_nodes, workers=workers)
        log.info("n=%d: %d nodes, %d pruned", n, out.nodes_visited, out.pruned)
        if out.solutions:
            return n, out.solutions[0]
    return None


def _prefixes(S: ConnectionSet) -> list[tuple[int, ...]]:
    return [S.proper[: j + 1] for j in range(len(S.proper))]


def profile_ceilings(graphs: Iterable[tuple[ConnectionSet, int]], slack: int = 1) -> dict[tuple[int, int], int]:
    """Max observed |P_w^d| per (distance, length) over graphs and their tree prefixes, plus slack.

    Every (i, d) with i <= d < D gets a ceiling, also when nothing was observed.

    ``graphs`` yields (connection set, diameter) pairs; each set is profiled
    together with every ancestor it has in the search tree so the tree path
    to a profiled graph is never cut.
    """
    seen: dict[tuple[int, int], int] = {}
    for S, D in graphs:
        n = S.n
        for d in range(D):
            for i in range(d + 1):
                seen.setdefault((i, d), 0)
        for prefix in _prefixes(S):
            counts = path_counts(n, _signed(n, prefix, S.has_half), D - 1)
            dist: dict[int, int] = {}
            for d, layer in enumerate(counts):
                for w in layer:
                    dist.setdefault(w, d)
            dist[0] = 0
            for d, layer in enumerate(counts):
                for w, c in layer.items():
                    key = (dist[w], d)
                    if c > seen.get(key, -1):
                        seen[key] = c
    return {key: c + slack for key, c in sorted(seen.items())}


def derive_default_ceilings(slack: int = 1) -> PruneConfig:
    """Ceilings profiled from the published search-table graphs (the shipped defaults)."""
    from .data.record_tables import SEARCH_TABLE

    graphs = []
    for deg, D, n, gens, _flags in SEARCH_TABLE:
        half = deg % 2 == 1
        graphs.append((ConnectionSet(n, tuple(g for g in gens if 2 * g != n), half), D))
    return PruneConfig(ceilings=profile_ceilings(graphs, slack))


def default_ceilings_text() -> str:
    header = "# default pruning ceilings: i d max_paths (regenerate with derive_default_ceilings)\n"
    return header + derive_default_ceilings().to_text()
