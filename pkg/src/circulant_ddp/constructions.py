"""Deterministic constructions of large circulant graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateOrder, DisconnectedFactor, EvenBase, NotCoprime
from .graph import CirculantGraph, ConnectionSet, bit_eccentricity, canonical_set, is_connected

# products up to this order get their diameter measured by BFS
VERIFY_CAP = 10**6


@dataclass(frozen=True)
class ProductWitness:
    factors: tuple[CirculantGraph, CirculantGraph]
    product: CirculantGraph
    degree: int
    diameter: int
    measured: bool

    @property
    def order(self) -> int:
        return self.product.n


def factor_diameter(G: CirculantGraph) -> int:
    d = bit_eccentricity(G.n, G.S.signed())
    if math.isinf(d):
        raise DisconnectedFactor(f"{G} is disconnected")
    return int(d)


def cartesian_product(
    G1: CirculantGraph,
    G2: CirculantGraph,
    *,
    verify_cap: int = VERIFY_CAP,
    diameters: tuple[int, int] | None = None,
) -> ProductWitness:
    """C(n; S1) x C(m; S2) as C(nm; m*S1 + n*S2) for coprime n, m.

    ``diameters`` may carry already-known factor diameters to skip their BFS.
    """
    n, m = G1.n, G2.n
    if math.gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) = {math.gcd(n, m)}")
    for G in (G1, G2):
        if not is_connected(G):
            raise DisconnectedFactor(f"{G} is disconnected")
    d1, d2 = diameters if diameters else (factor_diameter(G1), factor_diameter(G2))
    N = n * m
    S = canonical_set(N, [m * s for s in G1.S.generators] + [n * s for s in G2.S.generators])
    product = CirculantGraph(N, S)
    diam = d1 + d2
    measured = N <= verify_cap
    if measured:
        got = bit_eccentricity(N, S.signed())
        if got != diam:
            raise AssertionError(f"product diameter {got} != {d1} + {d2}")
    return ProductWitness((G1, G2), product, S.degree, diam, measured)


def decompose_product(G: CirculantGraph, n: int) -> tuple[CirculantGraph, CirculantGraph]:
    """Recover the factors of G = C(n; S1) x C(m; S2) given the first factor's order.

    Generators divisible by m belong to the first factor, those divisible by n
    to the second; anything else means G is not such a product.
    """
    N = G.n
    if N % n or math.gcd(n, N // n) != 1:
        raise NotCoprime(f"{n} is not a unitary divisor of {N}")
    m = N // n
    first, second = [], []
    for s in G.S.generators:
        if s % m == 0:
            first.append(s // m)
        elif s % n == 0:
            second.append(s // n)
        else:
            raise ValueError(f"generator {s} of {G} is not of the form m*a or n*b")
    return CirculantGraph.of(n, first), CirculantGraph.of(m, second)


def optimal_degree4_set(n: int) -> ConnectionSet:
    """Double-loop set {s1, s1+1} with s1 = floor((sqrt(2n-1) - 1) / 2)."""
    if n < 5:
        raise DegenerateOrder(f"order {n} too small for a degree-4 circulant")
    s1 = (math.isqrt(2 * n - 1) - 1) // 2
    if 2 * (s1 + 1) >= n:
        raise DegenerateOrder(f"s1 + 1 = {s1 + 1} is not below n/2 for n = {n}")
    return ConnectionSet(n, (s1, s1 + 1))


def power_construction(s: int, t: int) -> CirculantGraph:
    """C(s^t; 1, s, ..., s^(t-1)) for odd s; its diameter is t(s-1)/2."""
    if s % 2 == 0:
        raise EvenBase(f"base must be odd, got {s}")
    if s < 3 or t < 2:
        raise ValueError("need s >= 3 and t >= 2")
    n = s**t
    return CirculantGraph(n, ConnectionSet(n, tuple(s**i for i in range(t))))


def complete_circulant(deg: int) -> CirculantGraph:
    """K_{deg+1} as a circulant (diameter 1)."""
    n = deg + 1
    return CirculantGraph.of(n, range(1, n))


def known_family(deg: int, diam: int) -> CirculantGraph | None:
    """Optimal members of the classical families: complete graphs, cycles, degree 3 and 4."""
    if diam == 1:
        return complete_circulant(deg)
    if deg == 2:
        return CirculantGraph.of(2 * diam + 1, [1])
    if deg == 3:
        n = 4 * diam
        return CirculantGraph.of(n, [1, n // 2])
    if deg == 4:
        n = 2 * diam * diam + 2 * diam + 1
        return CirculantGraph(n, optimal_degree4_set(n))
    return None
