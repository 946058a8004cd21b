"""Upper bounds on the order of circulant graphs with given degree and diameter.

All quantities are exact Python integers except :func:`asymptotic_main_term`.
The Delannoy-type bounds are available through several independent formulas
(the ``*_forms`` helpers) so they can cross-check each other.
"""
from __future__ import annotations

import enum
import math


class BoundKind(str, enum.Enum):
    MOORE = "moore"
    CIRCULANT_EVEN = "circulant-even"
    CIRCULANT_ODD = "circulant-odd"
    TRIPLE_LOOP = "triple"


_PASCAL: list[tuple[int, ...]] = [(1,)]


def _pascal_row(a: int) -> tuple[int, ...]:
    while len(_PASCAL) <= a:
        prev = _PASCAL[-1]
        _PASCAL.append((1,) + tuple(x + y for x, y in zip(prev, prev[1:])) + (1,))
    return _PASCAL[a]


def binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return _pascal_row(a)[b]


def moore_bound(deg: int, diam: int) -> int:
    if deg < 2 or diam < 1:
        raise ValueError("moore_bound needs deg >= 2 and diam >= 1")
    if deg == 2:
        return 2 * diam + 1
    return 1 + deg * ((deg - 1) ** diam - 1) // (deg - 2)


def _check(t: int, D: int) -> None:
    if t < 0 or D < 0:
        raise ValueError(f"need t >= 0 and D >= 0, got t={t}, D={D}")


def delannoy_F(t: int, D: int) -> int:
    """Even-degree bound: sum_i 2^i C(t,i) C(D,i).  F(t, 0) = 1."""
    _check(t, D)
    return sum((1 << i) * binom(t, i) * binom(D, i) for i in range(t + 1))


def delannoy_F_forms(t: int, D: int) -> dict[str, int]:
    """Every closed form of F(t, D) we know, keyed by a short label."""
    r = range(t + 1)
    return {
        "powers-of-two": delannoy_F(t, D),
        "stanton-cowan-1": sum(binom(t, i) * binom(D + i, t) for i in r),
        "stanton-cowan-2": sum(binom(D + i, i) * binom(D, t - i) for i in r),
        "convolution-1": sum(binom(D, i) * binom(D + t - i, t - i) for i in r),
        "convolution-2": sum(binom(D, t - i) * binom(D + i, i) for i in r),
    }


def delannoy_F_prime(t: int, D: int) -> int:
    """Odd-degree bound F(t, D) + F(t, D-1), with F'(t, 0) = 2."""
    _check(t, D)
    if D == 0:
        return 2
    return delannoy_F(t, D) + delannoy_F(t, D - 1)


def delannoy_F_prime_forms(t: int, D: int) -> dict[str, int]:
    """Closed forms of F'(t, D) for D >= 1 (coefficients of 2(1+z)^(D-1) / (1-z)^(D+1))."""
    r = range(t + 1)
    return {
        "sum": delannoy_F_prime(t, D),
        "convolution-1": 2 * sum(binom(D - 1, i) * binom(D + t - i, t - i) for i in r),
        "convolution-2": 2 * sum(binom(D - 1, i) * binom(D + t - i, D) for i in r),
        "convolution-3": 2 * sum(binom(D - 1, t - i) * binom(D + i, i) for i in r),
    }


def _recurrence_table(t_max: int, d_max: int, first_column) -> list[list[int]]:
    # G(t, D) = G(t-1, D) + G(t, D-1) + G(t-1, D-1), seeded with G(t, 1) and G(0, D) = G(0, 1)
    table = [[0] * (d_max + 1) for _ in range(t_max + 1)]
    for t in range(t_max + 1):
        table[t][1] = first_column(t)
    for D in range(2, d_max + 1):
        table[0][D] = first_column(0)
        for t in range(1, t_max + 1):
            table[t][D] = table[t - 1][D] + table[t][D - 1] + table[t - 1][D - 1]
    return table


def delannoy_F_recurrence(t_max: int, d_max: int) -> list[list[int]]:
    """F(t, D) for 0 <= t <= t_max, 1 <= D <= d_max from F(t,1) = 2t+1 (column 0 unused)."""
    return _recurrence_table(t_max, d_max, lambda t: 2 * t + 1)


def delannoy_F_prime_recurrence(t_max: int, d_max: int) -> list[list[int]]:
    return _recurrence_table(t_max, d_max, lambda t: 2 * t + 2)


def circulant_upper_bound(deg: int, diam: int) -> int:
    if deg < 2:
        raise ValueError(f"degree must be >= 2, got {deg}")
    t, odd = divmod(deg, 2)
    return delannoy_F_prime(t, diam) if odd else delannoy_F(t, diam)


def triple_loop_max(diam: int) -> int:
    """Largest order of a triple-loop network C(n; 1, s2, s3) with the given diameter."""
    if diam < 1:
        raise ValueError("diameter must be >= 1")
    k, rem = divmod(diam, 3)
    if rem == 0:
        # 32/27 D^3 + 16/9 D^2 + 2D + 1 with D = 3k
        return 32 * k**3 + 16 * k**2 + 6 * k + 1
    if rem == 1:
        return 32 * k**3 + 48 * k**2 + 30 * k + 7
    return 32 * k**3 + 80 * k**2 + 70 * k + 21


def asymptotic_main_term(t: int, D: int) -> float:
    return (2 * t) ** D / math.factorial(D)


def bound(kind: BoundKind | str, deg: int, diam: int) -> int:
    kind = BoundKind(kind)
    if kind is BoundKind.MOORE:
        return moore_bound(deg, diam)
    if kind is BoundKind.TRIPLE_LOOP:
        return triple_loop_max(diam)
    t, odd = divmod(deg, 2)
    if kind is BoundKind.CIRCULANT_ODD:
        return delannoy_F_prime(t, diam)
    return delannoy_F(t, diam)
