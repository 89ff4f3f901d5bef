"""Vertex/edge invariants checked against hand values and brute-force oracles."""

import itertools
import json
import math
import random
from collections import deque
from fractions import Fraction

import numpy as np
import pytest

from ecclib import DisconnectedGraphError, from_edges
from ecclib.families import (
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_lollipop,
    make_path,
    make_star,
)
from ecclib.invariants import (
    REPORT_FIELDS,
    chromatic_number,
    clique_number,
    domination_number,
    eccentric_connectivity_index,
    independence_number,
    invariant_report,
    randic_index,
    spectral_radius,
    wiener_index,
)


def bfs_row(g, source):
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def random_connected(n, p, rng):
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    edges += [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def alpha_oracle(g):
    best = 0
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return r
    return best


def gamma_oracle(g):
    closed = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            covered = set()
            for v in sub:
                covered |= closed[v]
            if len(covered) == g.n:
                return r
    raise AssertionError("unreachable")


def chi_oracle(g):
    if g.m == 0:
        return 1 if g.n else 0
    for k in range(2, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# hand values
# ---------------------------------------------------------------------------


def test_eccentric_connectivity_hand_values():
    assert eccentric_connectivity_index(make_complete(4)) == 12
    assert eccentric_connectivity_index(make_cycle(6)) == 36
    assert eccentric_connectivity_index(make_path(4)) == 14


def test_wiener_hand_values():
    assert wiener_index(make_complete(5)) == 10
    assert wiener_index(make_path(4)) == 10
    assert wiener_index(make_star(5)) == 16


def test_randic_hand_values():
    assert randic_index(make_path(4)) == pytest.approx(math.sqrt(2) + 0.5)
    assert randic_index(make_complete(5)) == pytest.approx(2.5)
    assert randic_index(make_cycle(7)) == pytest.approx(3.5)
    assert randic_index(make_star(5)) == pytest.approx(2.0)
    # general exponent: with exponent -1 each edge contributes 1/(d_u d_v)
    assert randic_index(make_star(5), exponent=-1) == pytest.approx(1.0)


def test_counting_invariants_hand_values():
    assert independence_number(make_path(5)) == 3
    assert independence_number(make_cycle(5)) == 2
    assert independence_number(make_complete(5)) == 1
    assert independence_number(make_complete_bipartite(3, 4)) == 4
    assert clique_number(make_complete(5)) == 5
    assert clique_number(make_cycle(5)) == 2
    assert domination_number(make_path(7)) == 3
    assert domination_number(make_cycle(4)) == 2
    assert domination_number(make_star(6)) == 1
    assert chromatic_number(make_cycle(5)) == 3
    assert chromatic_number(make_cycle(6)) == 2
    assert chromatic_number(make_complete(4)) == 4
    assert chromatic_number(make_complete_bipartite(3, 3)) == 2


def test_lollipop_clique_and_chromatic():
    lp = make_lollipop(12, 8)
    assert clique_number(lp) == 8
    assert chromatic_number(lp) == 8
    assert independence_number(lp) == 3


def test_spectral_radius_hand_values():
    assert spectral_radius(make_complete(6)) == pytest.approx(5.0, abs=1e-8)
    assert spectral_radius(make_cycle(8)) == pytest.approx(2.0, abs=1e-8)
    assert spectral_radius(make_star(10)) == pytest.approx(3.0, abs=1e-8)
    assert spectral_radius(make_complete_bipartite(2, 3)) == pytest.approx(
        math.sqrt(6), abs=1e-8
    )
    assert spectral_radius(make_path(4)) == pytest.approx(
        2 * math.cos(math.pi / 5), abs=1e-8
    )
    assert spectral_radius(from_edges(1, [])) == 0.0


# ---------------------------------------------------------------------------
# randomized cross-checks against independent oracles
# ---------------------------------------------------------------------------


def test_counting_invariants_match_brute_force():
    rng = random.Random(31)
    for _ in range(12):
        g = random_connected(rng.randrange(2, 8), 0.3, rng)
        assert independence_number(g) == alpha_oracle(g)
        assert domination_number(g) == gamma_oracle(g)
        assert chromatic_number(g) == chi_oracle(g)


def test_clique_is_independence_of_complement():
    rng = random.Random(37)
    for _ in range(12):
        n = rng.randrange(2, 9)
        g = random_connected(n, 0.4, rng)
        comp_edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if not g.has_edge(i, j)
        ]
        comp = from_edges(n, comp_edges)
        assert clique_number(g) == alpha_oracle(comp)


def test_spectral_radius_matches_eigvalsh():
    rng = random.Random(41)
    for _ in range(10):
        g = random_connected(rng.randrange(2, 15), 0.3, rng)
        a = np.zeros((g.n, g.n))
        for u, v in g.edges():
            a[u, v] = a[v, u] = 1.0
        expected = float(np.linalg.eigvalsh(a)[-1]) if g.n > 1 else 0.0
        assert spectral_radius(g) == pytest.approx(expected, abs=1e-8)


def test_distance_indices_match_bfs_oracle():
    rng = random.Random(43)
    for _ in range(10):
        g = random_connected(rng.randrange(2, 12), 0.25, rng)
        rows = [bfs_row(g, v) for v in range(g.n)]
        assert wiener_index(g) == sum(sum(r) for r in rows) // 2
        assert eccentric_connectivity_index(g) == sum(
            max(rows[v]) * g.degree(v) for v in range(g.n)
        )


def test_regular_graph_identities():
    # k-regular: eccentric connectivity is k * sum(ecc); Randic index is n/2
    for g, k in ((make_cycle(9), 2), (make_complete(6), 5)):
        rows = [bfs_row(g, v) for v in range(g.n)]
        assert eccentric_connectivity_index(g) == k * sum(max(r) for r in rows)
        assert randic_index(g) == pytest.approx(g.n / 2)


# ---------------------------------------------------------------------------
# guards and report serialization
# ---------------------------------------------------------------------------


def test_disconnected_guards():
    g = from_edges(4, [(0, 1), (2, 3)])
    for fn in (wiener_index, eccentric_connectivity_index, spectral_radius):
        with pytest.raises(DisconnectedGraphError):
            fn(g)


def test_spectral_radius_tol_guard():
    with pytest.raises(ValueError):
        spectral_radius(make_path(4), tol=0.0)


def test_invariant_report_round_trip():
    g = make_lollipop(7, 4)
    rep = invariant_report(g)
    d = rep.to_dict()
    # every report field plus a float companion for the exact average
    assert set(REPORT_FIELDS) <= set(d)
    assert d["average_eccentricity_float"] == pytest.approx(24 / 7)
    assert d["n"] == 7 and d["m"] == 9
    assert json.loads(rep.to_json()) == json.loads(rep.to_json())
    header = rep.csv_header()
    row = rep.to_csv_row()
    assert header.count(",") == row.count(",")
    assert header.split(",") == list(REPORT_FIELDS)
    parsed = json.loads(rep.to_json())
    assert parsed["clique"] == 4
    assert Fraction(parsed["average_eccentricity"]) == Fraction(24, 7)
