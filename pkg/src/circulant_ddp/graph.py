"""Undirected circulant graphs C(n; S) and their distance machinery.

A connection set is kept in canonical form: the proper generators
``1 <= s < n/2`` in increasing order, plus a flag for the self-inverse
generator ``n/2``.  Adjacency is never materialized; neighbours of ``v`` are
``v +- s`` for every generator.

Two BFS routes are provided.  :func:`distances_from_zero` works on numpy
arrays and returns the whole distance vector; :func:`bit_eccentricity` grows
the ball around 0 as a Python integer bitset and is what the search loop
uses.  They are tested against each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

from .errors import EmptySet, InvalidGenerator, NotAUnit

INF = np.iinfo(np.int32).max
MAX_ORDER = 2**31 - 1
INFINITE = math.inf


@dataclass(frozen=True, order=True)
class ConnectionSet:
    n: int
    proper: tuple[int, ...]
    has_half: bool = False

    def __post_init__(self):
        n = self.n
        if not 2 <= n <= MAX_ORDER:
            raise InvalidGenerator(f"order {n} outside [2, {MAX_ORDER}]")
        object.__setattr__(self, "proper", tuple(int(s) for s in self.proper))
        prev = 0
        for s in self.proper:
            if s <= prev or 2 * s >= n:
                raise InvalidGenerator(
                    f"proper generators must be strictly increasing in [1, n/2): {self.proper}"
                )
            prev = s
        if self.has_half and n % 2:
            raise InvalidGenerator(f"half generator requires even order, got n={n}")
        if not self.proper and not self.has_half:
            raise EmptySet("connection set is empty")

    @property
    def degree(self) -> int:
        return 2 * len(self.proper) + int(self.has_half)

    @property
    def t(self) -> int:
        return len(self.proper)

    @property
    def generators(self) -> tuple[int, ...]:
        """Proper generators followed by n/2 when present."""
        return self.proper + ((self.n // 2,) if self.has_half else ())

    def signed(self) -> tuple[int, ...]:
        """All elements of S = -S as residues, ordered by their value in (-n/2, n/2]."""
        neg = [self.n - s for s in reversed(self.proper)]
        return tuple(neg) + self.proper + ((self.n // 2,) if self.has_half else ())

    def to_text(self) -> str:
        return f"{self.n};" + ",".join(str(s) for s in self.generators)

    @classmethod
    def parse(cls, text: str) -> "ConnectionSet":
        return parse_set(text)

    def __str__(self) -> str:
        return self.to_text()


def canonical_set(n: int, raw: Iterable[int]) -> ConnectionSet:
    """Reduce ``raw`` mod n, fold x to min(x, n-x) and merge duplicates."""
    if n < 2:
        raise InvalidGenerator(f"order must be >= 2, got {n}")
    raw = list(raw)
    if not raw:
        raise EmptySet("no generators given")
    proper = set()
    half = False
    for x in raw:
        x = int(x) % n
        if x == 0:
            raise InvalidGenerator(f"generator congruent to 0 mod {n}")
        x = min(x, n - x)
        if 2 * x == n:
            half = True
        else:
            proper.add(x)
    return ConnectionSet(n, tuple(sorted(proper)), half)


def parse_set(text: str) -> ConnectionSet:
    """Parse the ``n;s1,s2,...`` syntax (half generator written explicitly)."""
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise InvalidGenerator(f"expected 'n;s1,s2,...', got {text!r}")
    try:
        n = int(head)
        gens = [int(tok) for tok in tail.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InvalidGenerator(f"cannot parse {text!r}") from exc
    return canonical_set(n, gens)


@dataclass(frozen=True, order=True)
class CirculantGraph:
    n: int
    S: ConnectionSet

    def __post_init__(self):
        if self.S.n != self.n:
            raise InvalidGenerator(f"connection set is over Z_{self.S.n}, graph order is {self.n}")

    @classmethod
    def of(cls, n: int, gens: Iterable[int]) -> "CirculantGraph":
        return cls(n, canonical_set(n, gens))

    @classmethod
    def parse(cls, text: str) -> "CirculantGraph":
        S = parse_set(text)
        return cls(S.n, S)

    @property
    def degree(self) -> int:
        return self.S.degree

    def neighbours(self, v: int) -> list[int]:
        return [(v + s) % self.n for s in self.S.signed()]

    def __str__(self) -> str:
        return f"C({self.S.to_text()})"


@dataclass(frozen=True)
class DistanceProfile:
    dist: np.ndarray
    ecc: float

    @property
    def connected(self) -> bool:
        return not math.isinf(self.ecc)


def is_connected(G: CirculantGraph) -> bool:
    return reduce(math.gcd, G.S.generators, G.n) == 1


def distances_from_zero(G: CirculantGraph) -> DistanceProfile:
    n = G.n
    steps = np.array(G.S.signed(), dtype=np.int64)
    dist = np.full(n, INF, dtype=np.int32)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        nxt = np.unique((frontier[:, None] + steps[None, :]) % n)
        nxt = nxt[dist[nxt] == INF]
        dist[nxt] = level
        frontier = nxt
    ecc = level - 1
    if (dist == INF).any():
        return DistanceProfile(dist, INFINITE)
    return DistanceProfile(dist, ecc)


def diameter(G: CirculantGraph) -> float:
    """Eccentricity of vertex 0, which is the diameter by vertex-transitivity.

    Returns ``math.inf`` for disconnected graphs.
    """
    return distances_from_zero(G).ecc


def bit_eccentricity(n: int, steps: Iterable[int], cap: int | None = None) -> float:
    """Eccentricity of 0 in the circulant with signed ``steps``, via bitset ball growth.

    ``steps`` must be closed under negation mod n.  When ``cap`` is given the
    growth stops after ``cap`` levels and ``math.inf`` is returned if the
    ball is still incomplete.
    """
    full = (1 << n) - 1
    shifts = [(s % n, n - s % n) for s in steps]
    ball = frontier = 1
    level = 0
    while ball != full:
        if cap is not None and level >= cap:
            return INFINITE
        grown = 0
        for left, right in shifts:
            grown |= (frontier << left) | (frontier >> right)
        frontier = grown & full & ~ball
        if not frontier:
            return INFINITE
        ball |= frontier
        level += 1
    return level


def multiply_set(G: CirculantGraph, r: int) -> CirculantGraph:
    if math.gcd(r, G.n) != 1:
        raise NotAUnit(f"gcd({r}, {G.n}) != 1")
    return CirculantGraph.of(G.n, (r * s for s in G.S.generators))


def least_multiplicative_image(S: ConnectionSet) -> ConnectionSet:
    """Lexicographically least rS over all units r; a canonical isomorph representative."""
    n = S.n
    best = S
    for r in range(2, n):
        if math.gcd(r, n) == 1:
            img = canonical_set(n, (r * s for s in S.generators))
            if img.proper < best.proper:
                best = img
    return best
