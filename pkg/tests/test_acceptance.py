"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the criterion lines are
printed even without ``-s``.  Time limits are part of each criterion.
"""
import math
import time
from collections import deque

import numpy as np
import pytest

from circulant_ddp.analysis import bound_grid, fit_poly, parity_rows
from circulant_ddp.bounds import (
    binom,
    circulant_upper_bound,
    delannoy_F,
    delannoy_F_prime,
    delannoy_F_prime_recurrence,
    delannoy_F_recurrence,
    triple_loop_max,
)
from circulant_ddp.combine import combined_search
from circulant_ddp.constructions import cartesian_product
from circulant_ddp.data import record_tables as tables
from circulant_ddp.errors import CirculantError
from circulant_ddp.graph import CirculantGraph, canonical_set, diameter, distances_from_zero, is_connected, multiply_set
from circulant_ddp.records import RecordEntry, RecordTable, seed_builtin, verify_entry
from circulant_ddp.search import Mode, PruneConfig, brute_force_oracle, search
from conftest import parse_gens


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail, elapsed, limit):
        within = elapsed <= limit
        status = "PASS" if ok and within else "FAIL"
        line = f"[criterion {number:>2}] {status}  {title}: {detail}  ({elapsed:.2f} s, limit {limit:g} s)"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line

    return emit


def _set(n, gens):
    return canonical_set(n, gens)


def test_criterion_01_bound_table(report):
    t0 = time.perf_counter()
    bad = []
    cells = 0
    for deg, row in tables.BIG_TABLE_BOUNDS.items():
        for D, printed in zip(tables.DIAMETERS, row):
            cells += 1
            if circulant_upper_bound(deg, D) != printed:
                bad.append((deg, D))
    spot = (circulant_upper_bound(5, 2), circulant_upper_bound(8, 5), circulant_upper_bound(16, 10))
    ok = not bad and spot == (18, 681, 1256465)
    report(1, "bound table", ok, f"{cells - len(bad)}/{cells} cells exact, spot cells {spot}",
           time.perf_counter() - t0, 1)


def _printed_F_forms(t, D):
    r = range(t + 1)
    return {
        "powers of two": sum(2**i * binom(t, i) * binom(D, i) for i in r),
        "binomial form 1": sum(binom(t, i) * binom(D + i, t) for i in r),
        "binomial form 2": sum(binom(D + i, i) * binom(D, t - i) for i in r),
        "convolution form 1": sum(binom(D, i) * binom(D + t - i, t - i) for i in r),
        "convolution form 2": sum(binom(D, t - i) * binom(D + i, i) for i in r),
    }


def _printed_F_prime_forms(t, D):
    r = range(t + 1)
    return {
        "F + F(D-1)": delannoy_F(t, D) + delannoy_F(t, D - 1),
        "odd convolution 1": 2 * sum(binom(D - 1, i) * binom(D + t - i, t - i) for i in r),
        "odd convolution 2 (as printed)": 2 * sum(binom(D - 1, i) * binom(D + t - i, D - i) for i in r),
        "odd convolution 3": 2 * sum(binom(D - 1, t - i) * binom(D + i, i) for i in r),
    }


def test_criterion_02_formula_cross_validation(report):
    t0 = time.perf_counter()
    rec = delannoy_F_recurrence(12, 12)
    rec_p = delannoy_F_prime_recurrence(12, 12)
    failures = {}
    checks = 0
    for t in range(13):
        for D in range(1, 13):
            for name, v in _printed_F_forms(t, D).items():
                checks += 1
                if v != rec[t][D] or v != delannoy_F(t, D):
                    failures.setdefault(name, []).append((t, D))
            for name, v in _printed_F_prime_forms(t, D).items():
                checks += 1
                if v != rec_p[t][D] or v != delannoy_F_prime(t, D):
                    failures.setdefault(name, []).append((t, D))
    detail = f"{checks - sum(map(len, failures.values()))}/{checks} identities hold"
    for name, where in failures.items():
        detail += f"; '{name}' differs at {len(where)} of 156 (t,D) points, first {where[0]}"
    report(2, "closed forms vs recurrences", not failures, detail, time.perf_counter() - t0, 1)


def test_criterion_03_triple_loop_row(report):
    t0 = time.perf_counter()
    got = [triple_loop_max(D) for D in range(2, 11)]
    want = [21, 55, 117, 203, 333, 515, 737, 1027, 1393]
    ok = got == want and got == [c[0] for c in tables.BIG_TABLE_ORDERS[6]]
    report(3, "triple-loop row", ok, f"{got}", time.perf_counter() - t0, 1)


def test_criterion_04_record_verification(report):
    t0 = time.perf_counter()
    rows = [(deg, D, n, gens, "connection-sets") for deg, D, n, gens, _ in tables.SEARCH_TABLE]
    rows += [(deg, D, n, gens, "new-networks") for deg, D, n, gens, _ in tables.NEW_NETWORKS]
    mismatches = []
    for deg, D, n, gens, where in rows:
        rep = verify_entry(RecordEntry(deg, D, n, _set(n, gens)))
        if not rep.passed:
            mismatches.append(f"{where} ({deg},{D},{n}): {'; '.join(rep.mismatches)}")
    # the (16, 10) record exists only as the product 511 x 528
    t = seed_builtin()
    w = cartesian_product(t.find(8, 5, 511).graph, t.find(8, 5, 528).graph)
    big = verify_entry(RecordEntry(16, 10, 269808, w.product.S))
    if not big.passed:
        mismatches.append(f"product (16,10,269808): {'; '.join(big.mismatches)}")
    largest = verify_entry(RecordEntry(15, 10, 154720, _set(154720, (160, 967, 1120, 4835, 21120, 29120, 29977, 77360))))
    detail = f"{len(rows) + 1 - len(mismatches)}/{len(rows) + 1} printed graphs verify"
    detail += f", (15,10) largest set {'ok' if largest.passed else 'MISMATCH'}, (16,10) product {'ok' if big.passed else 'MISMATCH'}"
    if mismatches:
        detail += "; mismatches: " + " | ".join(mismatches)
    report(4, "printed connection sets", not mismatches, detail, time.perf_counter() - t0, 30)


def test_criterion_05_product_witnesses(report):
    t0 = time.perf_counter()
    t = seed_builtin()
    problems = []
    for (deg, D, order), f1, f2 in tables.PRODUCT_TABLE:
        e1, e2 = t.find(*f1), t.find(*f2)
        if e1 is None or e2 is None:
            problems.append(f"({deg},{D},{order}): no set for factor {f1 if e1 is None else f2}")
            continue
        try:
            w = cartesian_product(e1.graph, e2.graph, diameters=(f1[1], f2[1]))
        except CirculantError as exc:
            problems.append(f"({deg},{D},{order}) = {f1[2]} x {f2[2]}: {type(exc).__name__} ({exc})")
            continue
        measured = diameter(w.product)
        if (w.order, w.degree, measured) != (order, deg, D) or w.degree != e1.degree + e2.degree:
            problems.append(f"({deg},{D},{order}): got order {w.order}, degree {w.degree}, diameter {measured}")
    n_rows = len(tables.PRODUCT_TABLE)
    detail = f"{n_rows - len(problems)}/{n_rows} rows compose to the stated order, degree and diameter"
    if problems:
        detail += "; " + " | ".join(problems)
    report(5, "product witnesses", not problems, detail, time.perf_counter() - t0, 60)


def test_criterion_06_search_vs_oracle(report, oracle):
    t0 = time.perf_counter()
    cfg = PruneConfig.unbounded(require_s1_eq_1=False)
    compared = 0
    diffs = []
    for n in range(4, 41):
        for deg in (3, 4, 5):
            if (deg % 2 and n % 2) or n <= deg:
                continue
            frozen = oracle["oracle_sets"][f"{n},{deg}"]
            for D in range(1, n):
                found = search(n, deg, D, cfg, Mode.ALL).solutions
                expected = brute_force_oracle(n, deg, D)
                independent = sorted(canonical_set(*parse_gens(s)) for s in frozen.get(str(D), []))
                compared += 1
                if not (found == expected == independent):
                    diffs.append((n, deg, D))
    none_14 = search(14, 4, 2, cfg, Mode.ALL).solutions == [] and brute_force_oracle(14, 4, 2) == []
    none_10 = search(10, 3, 2, cfg, Mode.ALL).solutions == [] and brute_force_oracle(10, 3, 2) == []
    ok = not diffs and none_14 and none_10
    detail = (f"{compared - len(diffs)}/{compared} (n, deg, D) instances identical across search, oracle and "
              f"the frozen networkx oracle; no (4,2) graph on 14 vertices: {none_14}; "
              f"no (3,2) graph on 10 vertices: {none_10}")
    report(6, "exhaustive search = oracle", ok, detail, time.perf_counter() - t0, 120)


@pytest.mark.parametrize("n, deg, D", [(104, 8, 3), (248, 8, 4), (320, 9, 4)])
def test_criterion_07_pruned_recovery(report, n, deg, D):
    t0 = time.perf_counter()
    out = search(n, deg, D, PruneConfig.default(), Mode.FIRST, workers=1)
    ok = bool(out.solutions)
    if ok:
        S = out.solutions[0]
        ok = S.degree == deg and diameter(CirculantGraph(n, S)) == D
    found = out.solutions[0].to_text() if out.solutions else "nothing"
    detail = f"({n},{deg},{D}) -> {found}, {out.nodes_visited} nodes, {out.pruned} pruned"
    report(7, "pruned search", ok, detail, time.perf_counter() - t0, 600)


def test_criterion_08_combined_search(report):
    t0 = time.perf_counter()
    t = seed_builtin()
    want = {(10, 6): 1533, (11, 7): 4088, (12, 8): 13200, (13, 5): 1828, (14, 4): 825, (15, 4): 1100, (16, 5): 3805}
    got = {}
    for (deg, D), order in want.items():
        rep = combined_search(deg, D, t)
        got[(deg, D)] = rep.order
        assert rep.witness.degree == deg and rep.witness.diameter == D
    ok = got == want
    detail = ", ".join(f"{k}: {got[k]}" + ("" if got[k] == v else f" (want {v})") for k, v in want.items())
    report(8, "combined search", ok, detail, time.perf_counter() - t0, 60)


def test_criterion_09_fit_quality(report):
    t0 = time.perf_counter()
    g = bound_grid((3, 15), (2, 10))
    r_all = fit_poly(g, 3, "log").r_squared
    r_even = fit_poly(parity_rows(g, odd=False), 3, "log").r_squared
    r_odd = fit_poly(parity_rows(g, odd=True), 3, "log").r_squared
    ok = r_all >= 0.998 and r_even >= 0.999 and r_odd >= 0.995
    detail = f"R^2 all {r_all:.5f} (>= 0.998), even {r_even:.5f} (>= 0.999), odd {r_odd:.5f} (>= 0.995)"
    report(9, "log-bound fits", ok, detail, time.perf_counter() - t0, 1)


def test_criterion_10_property_sweep(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    failed = []

    def rand_graph(n_max, k_max=3):
        n = int(rng.integers(3, n_max + 1))
        return CirculantGraph.of(n, rng.integers(1, n, size=int(rng.integers(1, k_max + 1))))

    for _ in range(100):
        G = rand_graph(500)
        d = distances_from_zero(G).dist
        if any(d[w] != d[G.n - w] for w in range(1, G.n)):
            failed.append("distance symmetry")
    for _ in range(15):
        G = rand_graph(200)
        if not is_connected(G):
            continue
        ecc = diameter(G)
        steps = G.S.signed()
        for v in rng.choice(G.n, size=min(G.n, 8), replace=False):
            seen = {int(v): 0}
            queue = deque([int(v)])
            while queue:
                u = queue.popleft()
                for s in steps:
                    w = (u + s) % G.n
                    if w not in seen:
                        seen[w] = seen[u] + 1
                        queue.append(w)
            if max(seen.values()) != ecc:
                failed.append("vertex transitivity")
                break
    for _ in range(60):
        G = rand_graph(200)
        r = int(rng.integers(1, 400))
        if math.gcd(r, G.n) == 1 and diameter(multiply_set(G, r)) != diameter(G):
            failed.append("isomorph invariance")
    for tt in range(13):
        for D in range(1, 13):
            if delannoy_F(tt, D) != delannoy_F(D, tt):
                failed.append("Delannoy symmetry")
            if not delannoy_F(tt, D) < delannoy_F_prime(tt, D) < delannoy_F(tt + 1, D):
                failed.append("interleaving")
    for _ in range(10):
        n = int(rng.integers(20, 50))
        deg = int(rng.choice([4, 6]))
        D = int(rng.integers(2, 4))
        loose = PruneConfig(ceilings={(i, d): int(rng.integers(1, 6)) for d in range(D) for i in range(d + 1)},
                            require_s1_eq_1=False)
        tight = {k: max(0, c - 1) for k, c in loose.ceilings.items()}
        a = set(search(n, deg, D, loose, Mode.ALL).solutions)
        b = set(search(n, deg, D, loose.tightened(ceilings=tight), Mode.ALL).solutions)
        if not b <= a:
            failed.append("pruning monotonicity")
    t = seed_builtin()
    text = t.to_json()
    if RecordTable.from_json(text).to_json() != text or seed_builtin().to_json() != text:
        failed.append("record round trip")
    detail = "all property checks hold" if not failed else f"violations: {sorted(set(failed))}"
    detail += " (full randomized suites in tests/test_properties.py)"
    report(10, "property sweep", not failed, detail, time.perf_counter() - t0, 120)
