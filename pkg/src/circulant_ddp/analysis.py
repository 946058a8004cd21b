"""Least-squares surface fits over (degree, diameter) grids.

Fits are polynomials in degree and diameter of bounded total degree, fitted
either to the raw cell values or to their natural logarithm.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

import numpy as np

from .bounds import circulant_upper_bound
from .errors import SingularFit
from .grid import Grid

FIT_DEGREES = (3, 15)
FIT_DIAMETERS = (2, 10)


class Transform(str, enum.Enum):
    IDENTITY = "identity"
    LOG = "log"

    def apply(self, values):
        return np.log(values) if self is Transform.LOG else np.asarray(values, dtype=float)


def monomials(max_total_degree: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b), a + b <= max_total_degree, ordered by total degree then a descending."""
    return [(tot - b, b) for tot in range(max_total_degree + 1) for b in range(tot + 1)]


@dataclass(frozen=True)
class PolyFit:
    max_total_degree: int
    coefficients: dict[tuple[int, int], float]
    r_squared: float
    transform: Transform = Transform.IDENTITY
    n_obs: int = 0

    def predict(self, deg, diam):
        """Fitted value in the transformed space (log space for a log fit)."""
        deg = np.asarray(deg, dtype=float)
        diam = np.asarray(diam, dtype=float)
        return sum(c * deg**a * diam**b for (a, b), c in self.coefficients.items())

    def to_json(self) -> str:
        doc = {
            "max_total_degree": self.max_total_degree,
            "transform": self.transform.value,
            "r_squared": self.r_squared,
            "n_obs": self.n_obs,
            "coefficients": [
                {"deg_power": a, "diam_power": b, "value": c} for (a, b), c in self.coefficients.items()
            ],
        }
        return json.dumps(doc, indent=1) + "\n"

    def __str__(self) -> str:
        terms = []
        for (a, b), c in self.coefficients.items():
            mono = "*".join(p for p in (f"deg^{a}" if a else "", f"diam^{b}" if b else "") if p)
            terms.append(f"{c:+.6g}" + (f"*{mono}" if mono else ""))
        return " ".join(terms) + f"   (R^2 = {self.r_squared:.6f}, {self.n_obs} cells)"


def _expand_back(coef_c: np.ndarray, exps, mu, sigma) -> dict[tuple[int, int], float]:
    # sum c_ab ((x-mx)/sx)^a ((y-my)/sy)^b expanded into raw monomials x^u y^v
    (mx, my), (sx, sy) = mu, sigma
    out = {e: 0.0 for e in exps}
    for (a, b), c in zip(exps, coef_c):
        scale = c / (sx**a * sy**b)
        for u in range(a + 1):
            cu = math.comb(a, u) * (-mx) ** (a - u)
            for v in range(b + 1):
                out[(u, v)] += scale * cu * math.comb(b, v) * (-my) ** (b - v)
    return out


def fit_poly(g: Grid, max_total_degree: int = 3, transform: Transform | str = Transform.IDENTITY) -> PolyFit:
    """Ordinary least squares on the monomials deg^a diam^b, a + b <= max_total_degree.

    Degree and diameter are centered and scaled before forming the normal
    equations; the coefficients are mapped back to raw monomials afterwards.
    Missing cells are skipped.
    """
    transform = Transform(transform)
    cells = list(g.cells())
    exps = monomials(max_total_degree)
    if len(cells) < len(exps):
        raise SingularFit(f"{len(cells)} cells cannot determine {len(exps)} coefficients")
    x = np.array([c[0] for c in cells], dtype=float)
    y = np.array([c[1] for c in cells], dtype=float)
    z = transform.apply(np.array([c[2] for c in cells], dtype=float))
    mu = (x.mean(), y.mean())
    sigma = (x.std() or 1.0, y.std() or 1.0)
    xc, yc = (x - mu[0]) / sigma[0], (y - mu[1]) / sigma[1]
    X = np.column_stack([xc**a * yc**b for a, b in exps])
    if np.linalg.matrix_rank(X) < len(exps):
        raise SingularFit("design matrix is rank deficient")
    try:
        beta = np.linalg.solve(X.T @ X, X.T @ z)  # LU with partial pivoting
    except np.linalg.LinAlgError as exc:
        raise SingularFit(str(exc)) from exc
    resid = z - X @ beta
    ss_res = float(resid @ resid)
    ss_tot = float(((z - z.mean()) ** 2).sum())
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else (1.0 if ss_res < 1e-12 else 0.0)
    coef = _expand_back(beta, exps, mu, sigma)
    return PolyFit(max_total_degree, coef, r2, transform, len(cells))


def diff_grid(fit: PolyFit, actual: Grid, normalize: bool = False) -> Grid:
    """Predicted minus actual per cell, both in the fit's space; optionally divided by actual."""
    out = Grid.empty(actual.deg_range, actual.diam_range)
    for deg, diam, v in actual.cells():
        a = float(fit.transform.apply(v))
        d = float(fit.predict(deg, diam)) - a
        if normalize:
            if a == 0:
                raise ZeroDivisionError(f"actual value is zero at ({deg}, {diam})")
            d /= a
        out[deg, diam] = d
    return out


def percentage_fit(g: Grid) -> PolyFit:
    return fit_poly(g, 4, Transform.IDENTITY)


def bound_grid(deg_range=FIT_DEGREES, diam_range=FIT_DIAMETERS) -> Grid:
    return Grid.from_function(circulant_upper_bound, deg_range, diam_range)


def parity_rows(g: Grid, odd: bool) -> Grid:
    return g.select(d for d in g.degrees if d % 2 == int(odd))
