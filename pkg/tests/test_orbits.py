import random

import pytest
from hypothesis import given, settings, strategies as st

from farey_nielsen.actions import standard_form
from farey_nielsen.errors import CentralInput, NotInSA, NotTwoGenerated
from farey_nielsen.exact import INFINITY, ZERO, Mat2, vertex
from farey_nielsen.oracles import orbit_by_iteration, random_unimodular
from farey_nielsen.orbits import (
    act,
    centralizer_index,
    commutant_basis,
    count_one_orbits,
    in_s_a,
    one_orbit_of,
    one_orbit_representatives,
    orbit_contains,
    orbit_partition,
    s_a_members,
    same_one_orbit,
)

GOLDEN = Mat2(0, -1, 1, 3)


def _two_generated(rng, bound):
    while True:
        A = random_unimodular(rng, bound)
        if not A.is_central() and standard_form(A) is not None:
            return A


def test_s_a_examples():
    members = set(s_a_members(GOLDEN, 3))
    assert {INFINITY, ZERO, vertex(-1, 1), vertex(-2, 1), vertex(-3, 1)} <= members
    assert s_a_members(Mat2.identity(), 10) == [] and s_a_members(-Mat2.identity(), 10) == []
    assert {INFINITY, ZERO} <= set(s_a_members(Mat2(2, 1, 1, 1), 1))


@settings(max_examples=100)
@given(st.integers(0, 10**9))
def test_s_a_invariant(seed):
    A = random_unimodular(random.Random(seed), 15)
    for v in s_a_members(A, 12):
        assert in_s_a(A, act(A, v)) and in_s_a(A, act(A.inverse(), v))


def test_orbit_windows():
    orbit = one_orbit_of(GOLDEN, INFINITY)
    vs = orbit.window.vertices
    i = vs.index(INFINITY)
    assert vs[i - 1: i + 3] == (vertex(-3, 1), INFINITY, ZERO, vertex(-1, 3))
    assert set(orbit.turning_signature) == {3}
    orbit = one_orbit_of(Mat2(0, 1, 1, 1), INFINITY)
    vs = orbit.window.vertices
    i = vs.index(INFINITY)
    assert vs[i - 1: i + 4] == (vertex(-1, 1), INFINITY, ZERO, vertex(1, 1), vertex(1, 2))
    ts = orbit.turning_signature
    assert all(abs(t) == 1 for t in ts) and all(a == -b for a, b in zip(ts, ts[1:]))
    edge = one_orbit_of(Mat2(0, 1, 1, 0), INFINITY)
    assert edge.period == 2 and set(edge.window.vertices) == {INFINITY, ZERO}
    with pytest.raises(NotInSA):
        one_orbit_of(GOLDEN, vertex(1, 1))


def test_same_one_orbit_examples():
    assert same_one_orbit(GOLDEN, INFINITY, ZERO)
    assert not same_one_orbit(GOLDEN, INFINITY, vertex(-1, 1))
    assert same_one_orbit(GOLDEN, vertex(-2, 5), vertex(-2, 5))
    with pytest.raises(NotInSA):
        same_one_orbit(GOLDEN, INFINITY, vertex(1, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_orbit_membership_matches_iteration(seed):
    rng = random.Random(seed)
    A = _two_generated(rng, 10)
    members = s_a_members(A, 15)
    u = rng.choice(members)
    seen = orbit_by_iteration(A, u, 15, steps=80)
    for v in members:
        assert orbit_contains(A, u, v) == (v in seen)


def test_count_examples():
    assert count_one_orbits(Mat2(2, 1, 1, 1)) == 2
    assert count_one_orbits(Mat2(0, 1, 1, 1)) == 1
    assert count_one_orbits(Mat2(0, -1, 1, 4)) == 1
    with pytest.raises(NotTwoGenerated):
        count_one_orbits(Mat2(1, 0, 0, -1))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_count_invariances(seed):
    rng = random.Random(seed)
    A, P = _two_generated(rng, 20), random_unimodular(rng, 5)
    k = count_one_orbits(A)
    assert k == count_one_orbits(P @ A @ P.inverse()) == count_one_orbits(-A) == count_one_orbits(A.inverse())
    assert k == centralizer_index(A)


def test_representatives():
    assert one_orbit_representatives(GOLDEN) == [INFINITY, vertex(-1, 1)]
    assert one_orbit_representatives(Mat2(0, -1, 1, -3)) == [INFINITY, vertex(1, 1)]
    assert one_orbit_representatives(Mat2(0, -1, 1, 4)) == [INFINITY]
    parts = orbit_partition(Mat2(0, -1, 1, -3), s_a_members(Mat2(0, -1, 1, -3), 20))
    assert sorted(min(p, key=lambda v: v.sort_key()).vector for p in parts) == [(1, 0), (1, 1)]


def test_equal_turning_magnitudes():
    for A in (GOLDEN, Mat2(0, -1, 1, -3), Mat2(2, 1, 1, 1), -Mat2(2, 1, 1, 1)):
        mags = {abs(t) for rep in one_orbit_representatives(A) for t in one_orbit_of(A, rep).turning_signature}
        assert mags == {3}


def test_centralizer_examples():
    assert centralizer_index(Mat2(2, 1, 1, 1)) == 2
    assert centralizer_index(Mat2(0, -1, 1, 4)) == 1
    assert centralizer_index(Mat2(0, 1, 1, 1)) == 1
    with pytest.raises(CentralInput):
        centralizer_index(-Mat2.identity())
    with pytest.raises(NotTwoGenerated):
        centralizer_index(Mat2(1, 0, 0, -1))


def _box_centralizer(A, bound):
    r = range(-bound, bound + 1)
    return {
        M
        for a in r for b in r for c in r for d in r
        for M in [Mat2(a, b, c, d)]
        if M.is_unimodular() and M @ A == A @ M
    }


@pytest.mark.parametrize("A", [Mat2(2, 1, 1, 1), Mat2(0, 1, 1, 1), Mat2(0, -1, 1, 4), Mat2(1, 1, 1, 2), Mat2(0, 1, 1, 3), Mat2(0, -1, 1, 1)])
def test_centralizer_by_box_search(A):
    r, g, B = commutant_basis(A)
    assert A == Mat2.identity().scale(r) + B.scale(g)
    found = _box_centralizer(A, 7)
    powers, x = set(), Mat2.identity()
    for _ in range(10):
        for y in (x, x.inverse()):
            powers |= {y, -y}
        x = x @ A
    # small centralizer elements all lie in <A, -I> exactly when the index is 1
    assert (found <= powers) == (centralizer_index(A) == 1)
