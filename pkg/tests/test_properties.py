"""Randomized invariants (hypothesis)."""
import math
from collections import deque

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from circulant_ddp.bounds import delannoy_F, delannoy_F_prime
from circulant_ddp.constructions import cartesian_product, optimal_degree4_set, power_construction
from circulant_ddp.graph import (
    CirculantGraph,
    canonical_set,
    diameter,
    distances_from_zero,
    is_connected,
    multiply_set,
)
from circulant_ddp.records import RecordEntry, RecordTable, update_if_better
from circulant_ddp.search import Mode, PruneConfig, brute_force_oracle, search

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, n_max=200, k_max=4):
    n = draw(st.integers(3, n_max))
    gens = draw(st.lists(st.integers(1, n - 1), min_size=1, max_size=k_max))
    return CirculantGraph.of(n, gens)


def bfs_ecc(G, src):
    n = G.n
    dist = [-1] * n
    dist[src] = 0
    q = deque([src])
    while q:
        v = q.popleft()
        for w in G.neighbours(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return math.inf if min(dist) < 0 else max(dist), dist


@SETTINGS
@given(graphs(n_max=500))
def test_distance_symmetry(G):
    d = distances_from_zero(G).dist
    assert all(d[w] == d[G.n - w] for w in range(1, G.n))


@SETTINGS
@given(graphs(n_max=200))
def test_vertex_transitive_eccentricity(G):
    assume(is_connected(G))
    ecc0 = diameter(G)
    assert max(bfs_ecc(G, v)[0] for v in range(G.n)) == ecc0


@SETTINGS
@given(graphs(n_max=500))
def test_gcd_connectivity_matches_bfs(G):
    _, dist = bfs_ecc(G, 0)
    assert is_connected(G) == (min(dist) >= 0)


@SETTINGS
@given(graphs(n_max=200), st.integers(1, 400))
def test_multiplicative_isomorph_invariance(G, r):
    assume(math.gcd(r, G.n) == 1)
    H = multiply_set(G, r)
    assert H.degree == G.degree and diameter(H) == diameter(G)
    assert sorted(distances_from_zero(H).dist) == sorted(distances_from_zero(G).dist)


@SETTINGS
@given(graphs(n_max=1000, k_max=6))
def test_canonical_idempotent(G):
    assert canonical_set(G.n, G.S.generators) == G.S
    assert G.degree == len({s % G.n for s in G.S.generators} | {-s % G.n for s in G.S.generators})


@given(st.integers(0, 12), st.integers(1, 12))
def test_delannoy_symmetry_and_interleaving(t, D):
    assert delannoy_F(t, D) == delannoy_F(D, t)
    assert delannoy_F(t, D) < delannoy_F_prime(t, D) < delannoy_F(t + 1, D)


@SETTINGS
@given(graphs(n_max=70, k_max=3), graphs(n_max=70, k_max=3))
def test_product_additivity_and_commutativity(G1, G2):
    assume(math.gcd(G1.n, G2.n) == 1 and G1.n * G2.n <= 5000)
    assume(is_connected(G1) and is_connected(G2))
    w = cartesian_product(G1, G2)
    assert w.measured
    assert w.degree == G1.degree + G2.degree == w.product.degree
    assert diameter(w.product) == diameter(G1) + diameter(G2)
    assert cartesian_product(G2, G1).product == w.product


def test_power_construction_all_small():
    for s in range(3, 1001, 2):
        for t in range(2, 20):
            if s**t > 10**6:
                break
            assert diameter(power_construction(s, t)) == t * (s - 1) // 2, (s, t)


@given(st.integers(5, 10**5))
def test_degree4_family_connected(n):
    assert is_connected(CirculantGraph(n, optimal_degree4_set(n)))


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 40), st.integers(2, 6), st.integers(2, 5))
def test_unpruned_search_equals_oracle(n, deg, D):
    assume(not (deg % 2 and n % 2) and n > deg)
    cfg = PruneConfig.unbounded(require_s1_eq_1=False)
    assert search(n, deg, D, cfg, Mode.ALL).solutions == brute_force_oracle(n, deg, D)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(20, 60),
    st.sampled_from([4, 5, 6]),
    st.integers(2, 4),
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p[0] <= p[1]),
                    st.integers(0, 6), max_size=6),
    st.data(),
)
def test_pruning_is_monotone(n, deg, D, ceilings, data):
    assume(not (deg % 2 and n % 2))
    loose = PruneConfig(ceilings=ceilings, require_s1_eq_1=False)
    tight = dict(ceilings)
    key = data.draw(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p[0] <= p[1]))
    tight[key] = max(0, tight.get(key, 6) - data.draw(st.integers(1, 3)))
    a = set(search(n, deg, D, loose, Mode.ALL).solutions)
    b = set(search(n, deg, D, loose.tightened(ceilings=tight), Mode.ALL).solutions)
    assert b <= a


@st.composite
def entries(draw):
    n = draw(st.integers(5, 60))
    gens = draw(st.lists(st.integers(1, n - 1), min_size=1, max_size=3))
    S = canonical_set(n, gens)
    return RecordEntry(S.degree, draw(st.integers(1, 10)), n, draw(st.none() | st.just(S)),
                       draw(st.sampled_from(["search", "product", "table:table"])), draw(st.booleans()))


@SETTINGS
@given(st.lists(entries(), max_size=12))
def test_record_round_trip(es):
    t = RecordTable()
    for e in es:
        t.add(e)
    text = t.to_json()
    again = RecordTable.from_json(text)
    assert again.to_json() == text and again == t


@SETTINGS
@given(graphs(n_max=80, k_max=3))
def test_update_idempotent_and_monotone(G):
    assume(is_connected(G))
    e = RecordEntry(G.degree, int(diameter(G)), G.n, G.S)
    t = RecordTable()
    first = update_if_better(t, e)
    snapshot = t.to_json()
    assert first and not update_if_better(t, e) and t.to_json() == snapshot
    smaller = CirculantGraph.of(G.n - 1, [1]) if G.n > 3 else None
    if smaller is not None and smaller.degree == G.degree and diameter(smaller) == diameter(G):
        update_if_better(t, RecordEntry(smaller.degree, int(diameter(smaller)), smaller.n, smaller.S))
    assert t.get(G.degree, int(diameter(G))).order == G.n
