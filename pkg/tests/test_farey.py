import random

import pytest
from hypothesis import given, settings, strategies as st

from farey_nielsen.actions import fixed_points
from farey_nielsen.errors import BudgetExceeded, DegenerateTurn, NotAdjacent, PointOnEdge, TurningTooSmall
from farey_nielsen.exact import INFINITY, ZERO, Mat2, vertex
from farey_nielsen.farey import (
    FareyPath,
    GeodesicVerdict,
    adjacent,
    all_geodesics,
    edge,
    edge_separates,
    edges_cross,
    farey_distance,
    is_geodesic_by_turning,
    link_base,
    link_index,
    link_vertex,
    neighbors_within,
    path_from_turnings,
    separating_edges,
    shares_complementary_triangle,
    turning_number,
)
from farey_nielsen.oracles import box_distance
from farey_nielsen.orbits import act, one_orbit_of


def test_adjacency_examples():
    assert adjacent(INFINITY, ZERO)
    assert adjacent(vertex(1, 1), vertex(2, 1))
    assert not adjacent(ZERO, vertex(2, 5))


def test_edge_canonical_order():
    e = edge(INFINITY, vertex(-1, 1))
    assert e.endpoints == (vertex(-1, 1), INFINITY)
    with pytest.raises(NotAdjacent):
        edge(ZERO, vertex(2, 5))


def test_link_index_calibration():
    # calibrated convention: link_index(oo, 0, n) = n
    for n in range(-5, 6):
        assert link_index(INFINITY, ZERO, vertex(n, 1)) == n
    assert link_index(INFINITY, ZERO, ZERO) == 0
    assert link_index(ZERO, INFINITY, vertex(1, 1)) == -1


def test_turning_anchor_at_infinity():
    for A in (Mat2(0, -1, 1, 3), Mat2(0, 1, 1, 1), Mat2(0, -1, 1, 5), Mat2(0, 1, 1, -2)):
        a, b = act(A.inverse(), INFINITY), act(A, INFINITY)
        assert turning_number(a, INFINITY, b) == b.p - a.p


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("x", [-5, -4, -3, -1, 1, 3, 4, 5])
def test_turning_anchor_at_zero(eps, x):
    A = Mat2(0, eps, 1, x)
    assert turning_number(act(A.inverse(), ZERO), ZERO, act(A, ZERO)) == -eps * x


def test_turning_examples():
    assert turning_number(vertex(-3, 1), INFINITY, ZERO) == 3
    with pytest.raises(DegenerateTurn):
        turning_number(ZERO, INFINITY, ZERO)
    with pytest.raises(NotAdjacent):
        turning_number(ZERO, INFINITY, vertex(1, 2))


small_vertices = st.builds(vertex, st.integers(-12, 12), st.integers(1, 12))


@given(small_vertices, st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_turning_base_independent_and_antisymmetric(v, i, j, k):
    a, b = link_vertex(v, i), link_vertex(v, j)
    if a == b:
        return
    other = link_vertex(v, k)
    t = turning_number(a, v, b)
    assert link_index(v, other, b) - link_index(v, other, a) == t
    assert turning_number(b, v, a) == -t


@given(small_vertices, st.integers(-8, 8), st.integers(-8, 8))
def test_turning_counts_separating_edges(v, i, j):
    a, b = link_vertex(v, i), link_vertex(v, j)
    if a == b:
        return
    # count link edges of v strictly between the two path edges that separate a from b
    e_a, e_b = edge(v, a), edge(v, b)
    between = 0
    for k in range(min(i, j) - 20, max(i, j) + 21):
        u = link_vertex(v, k)
        if u in (a, b):
            continue
        e = edge(v, u)
        if edge_separates(e, a, b):
            between += 1
    assert abs(turning_number(a, v, b)) == 1 + between
    assert e_a != e_b


def test_edge_separation_examples():
    lam_minus, lam_plus = fixed_points(Mat2(0, -1, 1, 3))
    assert edge_separates(edge(vertex(-1, 1), ZERO), lam_plus, lam_minus)
    assert edge_separates(edge(ZERO, INFINITY), vertex(-1, 1), vertex(1, 1))
    assert not edge_separates(edge(ZERO, INFINITY), vertex(1, 1), vertex(2, 1))
    with pytest.raises(PointOnEdge):
        edge_separates(edge(ZERO, INFINITY), ZERO, vertex(1, 1))


def test_edges_never_cross():
    es = [edge(u, v) for u in (INFINITY, ZERO, vertex(1, 1), vertex(1, 2)) for v in neighbors_within(u, 4) if v != u]
    for e1 in es:
        for e2 in es:
            if not set(e1.endpoints) & set(e2.endpoints):
                assert not edges_cross(e1, e2)


def test_complementary_triangles():
    assert shares_complementary_triangle(edge(INFINITY, ZERO), edge(ZERO, vertex(1, 1)))
    assert not shares_complementary_triangle(edge(INFINITY, ZERO), edge(ZERO, vertex(1, 2)))
    assert not shares_complementary_triangle(edge(INFINITY, ZERO), edge(vertex(1, 1), vertex(2, 1)))


def test_distance_examples():
    assert farey_distance(INFINITY, ZERO) == 1
    assert farey_distance(ZERO, vertex(2, 5)) == 2
    assert box_distance(ZERO, vertex(2, 5), 10) == 2
    assert farey_distance(vertex(3, 7), vertex(3, 7)) == 0
    with pytest.raises(BudgetExceeded):
        farey_distance(INFINITY, vertex(55, 89), budget=3)


def test_geodesics_through_mediants():
    paths = all_geodesics(ZERO, vertex(2, 5))
    assert len(paths) == 2 and {p[1] for p in paths} == {vertex(1, 2), vertex(1, 3)}


@settings(max_examples=150)
@given(small_vertices, small_vertices)
def test_distance_matches_box_bfs(u, v):
    assert farey_distance(u, v) == box_distance(u, v, 12)


@settings(max_examples=60)
@given(small_vertices, small_vertices, small_vertices)
def test_distance_metric(u, v, w):
    d = farey_distance
    assert d(u, v) == d(v, u)
    assert d(u, w) <= d(u, v) + d(v, w)


def test_separating_edges_example():
    path = FareyPath((vertex(-4, 1), INFINITY, ZERO))
    ms = separating_edges(path, 1)
    assert ms == [edge(vertex(-1, 1), INFINITY), edge(vertex(-2, 1), INFINITY), edge(vertex(-3, 1), INFINITY)]
    assert shares_complementary_triangle(ms[0], edge(INFINITY, ZERO))
    with pytest.raises(TurningTooSmall):
        separating_edges(FareyPath((vertex(-2, 1), INFINITY, ZERO)), 1)


def test_separation_chain():
    rng = random.Random(5)
    for _ in range(50):
        turns = [rng.choice([-1, 1]) * rng.randint(3, 6) for _ in range(5)]
        path = path_from_turnings(INFINITY, vertex(rng.randint(-3, 3), 1), turns)
        vs = path.vertices
        ms = [separating_edges(path, i)[0] for i in range(1, len(vs) - 1)]
        for i, m in enumerate(ms):
            assert shares_complementary_triangle(m, edge(vs[i + 1], vs[i + 2]))
            for other in ms[i + 1:]:
                assert not edges_cross(m, other) and m != other
            if vs[0] not in m.endpoints and vs[-1] not in m.endpoints:
                assert edge_separates(m, vs[0], vs[-1])


def test_geodesic_verdicts():
    assert is_geodesic_by_turning(one_orbit_of(Mat2(0, -1, 1, 4), INFINITY).window) is GeodesicVerdict.UNIQUE_GEODESIC
    assert is_geodesic_by_turning(one_orbit_of(Mat2(0, -1, 1, 3), INFINITY).window) is GeodesicVerdict.GEODESIC
    assert is_geodesic_by_turning(FareyPath((INFINITY, ZERO, vertex(1, 1)))) is GeodesicVerdict.INCONCLUSIVE


def test_paths_reject_backtracking():
    with pytest.raises(DegenerateTurn):
        FareyPath((INFINITY, ZERO, INFINITY))
    assert FareyPath((INFINITY, ZERO, INFINITY), allow_backtrack=True).length == 2
    with pytest.raises(NotAdjacent):
        FareyPath((ZERO, vertex(2, 5)))


def test_neighbors_within_matches_box():
    for x in (INFINITY, ZERO, vertex(2, 5), vertex(-7, 3)):
        box = {vertex(p, q) for q in range(0, 16) for p in range(-15, 16) if (p, q) != (0, 0)}
        want = {y for y in box if y.height <= 15 and adjacent(x, y)}
        assert set(neighbors_within(x, 15)) == want


def test_link_base_convention():
    for v in (INFINITY, ZERO, vertex(3, 8), vertex(-5, 2)):
        w = link_base(v)
        assert adjacent(v, w)
        assert link_vertex(v, 0) == w
