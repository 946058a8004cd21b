"""Bounds, constructions and searches for large circulant graphs of given degree and diameter."""
from .bounds import (
    BoundKind,
    asymptotic_main_term,
    circulant_upper_bound,
    delannoy_F,
    delannoy_F_prime,
    moore_bound,
    triple_loop_max,
)
from .graph import (
    CirculantGraph,
    ConnectionSet,
    DistanceProfile,
    canonical_set,
    diameter,
    distances_from_zero,
    is_connected,
    multiply_set,
    parse_set,
)

__version__ = "0.1.0"
