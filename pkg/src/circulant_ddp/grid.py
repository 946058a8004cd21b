"""Dense (degree, diameter) indexed grids with missing cells."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np


@dataclass
class Grid:
    deg_range: tuple[int, int]
    diam_range: tuple[int, int]
    values: np.ndarray  # float, NaN marks a missing cell

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        shape = (self.deg_range[1] - self.deg_range[0] + 1, self.diam_range[1] - self.diam_range[0] + 1)
        if self.values.shape != shape:
            raise ValueError(f"values shape {self.values.shape} does not match ranges {shape}")

    @classmethod
    def empty(cls, deg_range, diam_range) -> "Grid":
        shape = (deg_range[1] - deg_range[0] + 1, diam_range[1] - diam_range[0] + 1)
        return cls(tuple(deg_range), tuple(diam_range), np.full(shape, np.nan))

    @classmethod
    def from_function(cls, fn, deg_range, diam_range) -> "Grid":
        g = cls.empty(deg_range, diam_range)
        for deg in g.degrees:
            for diam in g.diameters:
                v = fn(deg, diam)
                if v is not None:
                    g[deg, diam] = v
        return g

    @property
    def degrees(self) -> range:
        return range(self.deg_range[0], self.deg_range[1] + 1)

    @property
    def diameters(self) -> range:
        return range(self.diam_range[0], self.diam_range[1] + 1)

    def _index(self, key):
        deg, diam = key
        if deg not in self.degrees or diam not in self.diameters:
            raise KeyError(key)
        return deg - self.deg_range[0], diam - self.diam_range[0]

    def __getitem__(self, key) -> float:
        return float(self.values[self._index(key)])

    def __setitem__(self, key, value) -> None:
        self.values[self._index(key)] = value

    def cells(self):
        """Yield (degree, diameter, value) for every non-missing cell."""
        for deg in self.degrees:
            for diam in self.diameters:
                v = self[deg, diam]
                if not math.isnan(v):
                    yield deg, diam, v

    def select(self, degrees) -> "Grid":
        """Copy keeping only the given degrees (others become missing)."""
        out = Grid(self.deg_range, self.diam_range, self.values.copy())
        keep = set(degrees)
        for deg in self.degrees:
            if deg not in keep:
                out.values[deg - self.deg_range[0], :] = np.nan
        return out

    def map(self, fn) -> "Grid":
        return Grid(self.deg_range, self.diam_range, fn(self.values))

    def to_csv(self, fmt: str = "{:.10g}") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree"] + [str(d) for d in self.diameters])
        for deg in self.degrees:
            row = [str(deg)]
            for diam in self.diameters:
                v = self[deg, diam]
                row.append("" if math.isnan(v) else fmt.format(v))
            w.writerow(row)
        return buf.getvalue()
