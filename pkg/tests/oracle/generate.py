"""Independent oracle for the derived test values.

Nothing here imports the package.  Graphs are built as networkx graphs from
explicit edge lists, ball sizes are counted coordinate by coordinate in Z^t,
and path classes are enumerated from ordered step sequences.  Run

    python tests/oracle/generate.py

to rewrite ``derived_values.json``; the tests only read the frozen file.
"""
from __future__ import annotations

import itertools
import json
import math
from pathlib import Path

import networkx as nx

OUT = Path(__file__).with_name("derived_values.json")


def circulant(n, gens):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for v in range(n):
        for s in gens:
            G.add_edge(v, (v + s) % n)
            G.add_edge(v, (v - s) % n)
    return G


def dist_vector(n, gens):
    d = nx.single_source_shortest_path_length(circulant(n, gens), 0)
    return [d.get(w, -1) for w in range(n)]


def diam(n, gens):
    G = circulant(n, gens)
    if not nx.is_connected(G):
        return None
    return max(nx.single_source_shortest_path_length(G, 0).values())


def ball_size(t, D, half=False):
    # points x in Z^t (and a 0/1 extra coordinate if half) with weight <= D
    ways = [1] + [0] * D
    for _ in range(t):
        new = [0] * (D + 1)
        for s, c in enumerate(ways):
            if c:
                for k in range(0, D - s + 1):
                    new[s + k] += c * (1 if k == 0 else 2)
        ways = new
    if half:
        ways = [ways[s] + (ways[s - 1] if s else 0) for s in range(D + 1)]
    return sum(ways)


def sets_by_diameter(n, deg):
    t, odd = divmod(deg, 2)
    if odd and n % 2:
        return {}
    out = {}
    for combo in itertools.combinations(range(1, (n + 1) // 2), t):
        gens = list(combo) + ([n // 2] if odd else [])
        if len(set(g % n for g in gens) | set(-g % n for g in gens)) != deg:
            continue
        d = diam(n, gens)
        if d is not None:
            out.setdefault(d, []).append(";".join([str(n), ",".join(map(str, gens))]))
    return out


def path_class_count(n, gens, w, d):
    def val(s):  # representative in (-n/2, n/2]
        return s - n if 2 * s > n else s

    steps = sorted({g % n for g in gens} | {-g % n for g in gens}, key=val)
    classes = set()
    for seq in itertools.product(steps, repeat=d):
        key = tuple(sorted(seq, key=val))
        pos, seen, ok = 0, {0}, True
        for idx, s in enumerate(key):
            pos = (pos + s) % n
            if pos in seen and not (pos == 0 and idx == d - 1):
                ok = False
                break
            seen.add(pos)
        if ok and pos == w % n:
            classes.add(key)
    return len(classes)


def best_order(deg, D, lo, hi):
    for n in range(hi, lo - 1, -1):
        if D in sets_by_diameter(n, deg):
            return n, sets_by_diameter(n, deg)[D][0]
    return None


def main():
    vals = {}
    vals["ball_even"] = {f"{t},{D}": ball_size(t, D) for t in range(0, 13) for D in range(1, 13)}
    vals["ball_odd"] = {f"{t},{D}": ball_size(t, D, half=True) for t in range(0, 13) for D in range(1, 13)}
    vals["dist"] = {
        "5;1": dist_vector(5, [1]),
        "13;1,5": dist_vector(13, [1, 5]),
        "6;2": dist_vector(6, [2]),
    }
    vals["diameter"] = {
        key: diam(int(key.split(";")[0]), [int(x) for x in key.split(";")[1].split(",")])
        for key in ["13;1,5", "13;2,3", "12;3,4", "15;3,5", "104;1,16,20,27", "9;1,3", "25;1,5",
                    "27;1,3,9", "25;3,4", "41;4,5", "6;2,3", "8;1,4"]
    }
    vals["path_classes"] = {
        "13;1,5|1|1": path_class_count(13, [1, 5], 1, 1),
        "13;1,5|5|1": path_class_count(13, [1, 5], 5, 1),
        "13;1,5|6|2": path_class_count(13, [1, 5], 6, 2),
        "13;1,5|2|2": path_class_count(13, [1, 5], 2, 2),
        "13;1,5|0|2": path_class_count(13, [1, 5], 0, 2),
        "13;1,5|3|3": path_class_count(13, [1, 5], 3, 3),
        "20;1,6|12|2": path_class_count(20, [1, 6], 12, 2),
        "20;1,6,10|10|1": path_class_count(20, [1, 6, 10], 10, 1),
        "20;1,6,10|16|2": path_class_count(20, [1, 6, 10], 16, 2),
    }
    vals["oracle_sets"] = {
        f"{n},{deg}": sets_by_diameter(n, deg) for n in range(4, 41) for deg in (3, 4, 5)
    }
    vals["oracle_small"] = {
        f"{n},{deg}": sets_by_diameter(n, deg) for n, deg in [(13, 4), (14, 4), (12, 4), (8, 3), (10, 3), (21, 6), (22, 6)]
    }
    vals["max_order"] = {
        "4,2,5,13": best_order(4, 2, 5, 13),
        "3,2,4,8": best_order(3, 2, 4, 8),
        "6,2,10,25": best_order(6, 2, 10, 25),
    }
    OUT.write_text(json.dumps(vals, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
