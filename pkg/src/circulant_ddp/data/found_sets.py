"""Factor graphs needed by published products but printed nowhere.

Each set was produced by ``search(n, deg, D)`` with s1 = 1, no ceilings and
the first solution kept; ``tests/test_records.py`` reruns those searches.
"""

# (degree, diameter, order, generators incl. half)
FACTOR_SETS = [
    (6, 3, 55, (1, 5, 21)),
    (7, 3, 76, (1, 27, 31, 38)),
    (8, 3, 99, (1, 24, 39, 44)),
]
