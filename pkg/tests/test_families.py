"""Named families: builders, exact closed forms, and degenerate identities."""

import math
from fractions import Fraction

import pytest

from ecclib import (
    average_eccentricity,
    canonical_certificate,
    eccentricity_profile,
    is_tree,
)
from ecclib.families import (
    PARAM_NAMES,
    FamilySpec,
    balanced_parts,
    broom_alpha_plus_ecc,
    broom_ecc,
    broom_independence,
    closed_form_ecc,
    lollipop_kstar,
    lollipop_product,
    make,
    make_balanced_starlike,
    make_broom,
    make_complete,
    make_complete_minus_matching,
    make_cycle,
    make_double_broom,
    make_dn_tree,
    make_dumbbell,
    make_hypercube,
    make_lollipop,
    make_path,
    make_pc_graph,
    make_star,
    make_star_plus_edge,
    make_starlike,
    path_ecc,
    pc_graph_ecc,
    spec,
    star_ecc,
)
from ecclib.invariants import independence_number


# ---------------------------------------------------------------------------
# spec plumbing
# ---------------------------------------------------------------------------


def test_spec_validation():
    s = spec("broom", 11, 6)
    assert s.kind == "broom" and s.params == (11, 6)
    with pytest.raises(ValueError):
        spec("petersen")
    with pytest.raises(ValueError):
        spec("broom", 11)  # wrong arity
    with pytest.raises(ValueError):
        FamilySpec("path", (2, 3))
    # starlike takes any number of arm lengths
    assert PARAM_NAMES["starlike"] is None
    assert spec("starlike", 3, 2, 1).params == (3, 2, 1)


def test_make_dispatch():
    assert make(spec("path", 6)) == make_path(6)
    assert make(spec("dumbbell", 3, 4, 2)) == make_dumbbell(3, 4, 2)


# ---------------------------------------------------------------------------
# builder structure
# ---------------------------------------------------------------------------


def test_basic_builder_shapes():
    assert (make_path(6).n, make_path(6).m) == (6, 5)
    assert (make_cycle(6).n, make_cycle(6).m) == (6, 6)
    assert (make_star(6).n, make_star(6).m) == (6, 5)
    assert (make_complete(6).n, make_complete(6).m) == (6, 15)
    assert make_hypercube(4).n == 16 and make_hypercube(4).m == 32
    assert make_hypercube(0).n == 1


def test_broom_structure():
    g = make_broom(11, 6)
    assert g.n == 11 and is_tree(g)
    assert g.degree(0) == 6
    assert max(g.degrees()) == 6
    # six pendant vertices: five pure leaves plus the chain tip
    assert sum(1 for d in g.degrees() if d == 1) == 6


def test_double_broom_structure():
    g = make_double_broom(5, 2, 3)
    assert g.n == 5 + 2 + 3 + 1 and is_tree(g)
    assert eccentricity_profile(g).diameter == 5
    # d = 2 collapses to the star
    assert canonical_certificate(make_double_broom(2, 1, 2)) == (
        canonical_certificate(make_star(6))
    )


def test_lollipop_and_dumbbell_structure():
    lp = make_lollipop(9, 5)
    assert lp.n == 9 and lp.m == 10 + 4
    db = make_dumbbell(4, 3, 2)
    assert db.n == 9 and db.m == 6 + 3 + 3
    # path = 0 joins the cliques by a single edge
    assert make_dumbbell(3, 3, 0).m == 3 + 3 + 1


def test_pc_graph_structure():
    g = make_pc_graph(4, 3)
    assert g.n == 4 * 4 + 2 == 18
    assert g.m == 31
    assert min(g.degrees()) == 3


def test_pc_graph_min_degree_grid():
    for k in (2, 3, 4):
        for delta in (2, 3, 4):
            g = make_pc_graph(k, delta)
            assert g.n == k * (delta + 1) + 2
            assert min(g.degrees()) == delta


def test_starlike_structure():
    g = make_starlike(3, 2, 1)
    assert g.n == 7 and is_tree(g) and g.degree(0) == 3
    # arms are sorted longest first regardless of argument order
    assert make_starlike(1, 2, 3) == make_starlike(3, 2, 1)
    assert balanced_parts(8, 3) == (3, 2, 2)
    assert make_balanced_starlike(8, 3) == make_starlike(3, 2, 2)


def test_complete_minus_matching_structure():
    g8 = make_complete_minus_matching(8)
    assert g8.n == 8 and g8.m == 28 - 4
    assert all(d == 6 for d in g8.degrees())
    g7 = make_complete_minus_matching(7)
    assert g7.m == 21 - 4


def test_builder_validation_errors():
    cases = [
        (make_path, (0,)),
        (make_cycle, (2,)),
        (make_broom, (5, 1)),
        (make_broom, (5, 5)),
        (make_lollipop, (5, 1)),
        (make_lollipop, (5, 5)),
        (make_double_broom, (1, 1, 1)),
        (make_dn_tree, (4,)),
        (make_complete_minus_matching, (3,)),
        (make_pc_graph, (1, 3)),
        (make_pc_graph, (4, 1)),
        (make_dumbbell, (0, 3, 1)),
        (make_star_plus_edge, (2,)),
        (make_starlike, ()),  # no arms at all
    ]
    for fn, args in cases:
        with pytest.raises(ValueError):
            fn(*args)


# ---------------------------------------------------------------------------
# closed forms against BFS
# ---------------------------------------------------------------------------


def test_path_closed_form():
    assert path_ecc(5) == Fraction(16, 5)
    for n in range(1, 40):
        assert path_ecc(n) == average_eccentricity(make_path(n))


def test_star_closed_form():
    assert star_ecc(1) == 0 and star_ecc(2) == 1
    for n in range(1, 20):
        assert star_ecc(n) == average_eccentricity(make_star(n))


def test_cycle_complete_bipartite_hypercube_closed_forms():
    for n in range(3, 25):
        assert closed_form_ecc(spec("cycle", n)) == average_eccentricity(make_cycle(n))
    for n in range(1, 12):
        assert closed_form_ecc(spec("complete", n)) == average_eccentricity(
            make_complete(n)
        )
    for a in range(1, 6):
        for b in range(a, 6):
            assert closed_form_ecc(spec("complete_bipartite", a, b)) == (
                average_eccentricity(make(spec("complete_bipartite", a, b)))
            )
    for d in range(0, 8):
        assert closed_form_ecc(spec("hypercube", d)) == average_eccentricity(
            make_hypercube(d)
        )


def test_broom_closed_form_grid():
    assert broom_ecc(11, 6) == Fraction(57, 11)
    for n in range(3, 16):
        for delta in range(2, n):
            assert broom_ecc(n, delta) == average_eccentricity(make_broom(n, delta))


def test_broom_extremes_match_path_and_star():
    for n in range(3, 12):
        assert broom_ecc(n, 2) == path_ecc(n)
        assert broom_ecc(n, n - 1) == star_ecc(n)


def test_broom_chain_is_monotone_in_delta():
    for n in range(5, 16):
        values = [broom_ecc(n, d) for d in range(2, n)]
        assert all(a > b for a, b in zip(values, values[1:]))


def test_lollipop_closed_form_grid():
    assert closed_form_ecc(spec("lollipop", 12, 8)) == Fraction(9, 2)
    for n in range(4, 13):
        for k in range(2, n):
            assert closed_form_ecc(spec("lollipop", n, k)) == average_eccentricity(
                make_lollipop(n, k)
            )


def test_pc_closed_form_grid():
    assert pc_graph_ecc(4, 3) == Fraction(26, 3)
    for k in (2, 4, 6):
        for delta in (2, 3, 5):
            assert pc_graph_ecc(k, delta) == average_eccentricity(
                make_pc_graph(k, delta)
            )
    with pytest.raises(ValueError):
        pc_graph_ecc(3, 3)  # odd block count has no closed form


def test_closed_form_unknown_kind():
    with pytest.raises(ValueError):
        closed_form_ecc(spec("dumbbell", 3, 3, 1))


# ---------------------------------------------------------------------------
# degenerate isomorphisms and identities
# ---------------------------------------------------------------------------


def test_lollipop_with_smallest_clique_is_a_path():
    for n in range(4, 10):
        assert canonical_certificate(make_lollipop(n, 2)) == canonical_certificate(
            make_path(n)
        )


def test_dumbbell_with_trivial_cliques_is_a_path():
    for p in range(0, 6):
        assert canonical_certificate(make_dumbbell(1, 1, p)) == canonical_certificate(
            make_path(p + 2)
        )


def test_dn_tree_is_a_three_arm_spider():
    for n in range(6, 12):
        assert canonical_certificate(make_dn_tree(n)) == canonical_certificate(
            make_starlike(n - 4, 2, 1)
        )


def test_double_broom_matches_broom_closed_form():
    # a double broom of diameter d on n vertices has the same average
    # eccentricity as the broom B(n, n-d+1): eccentricities depend only on
    # the distance to the nearer spine end
    for d in range(3, 9):
        for a in range(0, 4):
            for b in range(0, 4):
                g = make_double_broom(d, a, b)
                assert average_eccentricity(g) == broom_ecc(g.n, g.n - d + 1)


def test_star_plus_edge_values():
    g = make_star_plus_edge(6)
    assert g.n == 6 and g.m == 6
    assert average_eccentricity(g) == 2 - Fraction(1, 6)


# ---------------------------------------------------------------------------
# broom and lollipop optimization helpers
# ---------------------------------------------------------------------------


def test_broom_independence_matches_solver():
    assert broom_independence(11, 6) == 8
    for n in range(3, 13):
        for delta in range(2, n):
            assert broom_independence(n, delta) == independence_number(
                make_broom(n, delta)
            )


def test_broom_alpha_plus_ecc_frozen_and_consistent():
    assert broom_alpha_plus_ecc(5, 2) == Fraction(31, 5)
    assert broom_alpha_plus_ecc(6, 3) == Fraction(22, 3)
    assert broom_alpha_plus_ecc(11, 6) == Fraction(145, 11)
    for n in range(3, 13):
        for delta in range(2, n):
            assert broom_alpha_plus_ecc(n, delta) == (
                broom_independence(n, delta) + broom_ecc(n, delta)
            )


def test_lollipop_product_closed_form():
    assert lollipop_product(12, 7) == Fraction(147, 4)
    from ecclib.invariants import clique_number

    for n in range(5, 12):
        for k in range(2, n):
            g = make_lollipop(n, k)
            assert lollipop_product(n, k) == clique_number(g) * average_eccentricity(g)


def test_lollipop_kstar_frozen():
    res = lollipop_kstar(12)
    assert res.k_star == pytest.approx(7.011623194233342)
    assert res.argmax == (7,)
    assert lollipop_kstar(30).argmax == (17,)


def test_lollipop_kstar_argmax_near_real_root():
    for n in range(10, 60):
        res = lollipop_kstar(n)
        assert all(abs(k - res.k_star) <= 1.0 for k in res.argmax)
        # k* satisfies the stationarity quadratic 3k^2 + (4n-4)k - (4n^2+...)
        assert 2 <= res.k_star <= n
        for k in res.argmax:
            top = lollipop_product(n, k)
            for other in range(2, n):
                assert lollipop_product(n, other) <= top
