import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from farey_nielsen.actions import (
    IsometryType,
    Orientation,
    StandardForm,
    classify_matrix,
    fixed_points,
    moebius_apply,
    parabolic_fixed_point,
    standard_form,
    standard_forms_conjugate,
)
from farey_nielsen.errors import NonUnimodular, NotHyperbolic
from farey_nielsen.exact import INFINITY, ZERO, Mat2, qi_compare, quadratic_point, vertex
from farey_nielsen.forms import form_of_matrix, represents_unit
from farey_nielsen.oracles import random_unimodular


def test_moebius_examples():
    A = Mat2(0, -1, 1, 3)
    assert moebius_apply(A, INFINITY) == ZERO
    lam_minus, lam_plus = fixed_points(A)
    assert moebius_apply(A, lam_plus) == lam_plus
    assert moebius_apply(Mat2(0, 1, 1, 1), ZERO) == vertex(1, 1)


def test_classification_examples():
    c = classify_matrix(Mat2(0, -1, 1, 1))
    assert c.isometry_type is IsometryType.ELLIPTIC and c.elliptic_order == 3
    assert c.orientation is Orientation.PRESERVING
    assert classify_matrix(Mat2(0, -1, 1, 2)).isometry_type is IsometryType.PARABOLIC
    c = classify_matrix(Mat2(0, 1, 1, 1))
    assert (c.isometry_type, c.orientation) == (IsometryType.HYPERBOLIC, Orientation.REVERSING)
    assert classify_matrix(Mat2(0, -1, 1, 0)).elliptic_order == 2
    assert classify_matrix(Mat2(1, -1, 1, 0)).elliptic_order == 3
    assert classify_matrix(Mat2(0, 1, 1, 0)).elliptic_order == 2
    assert classify_matrix(-Mat2.identity()).isometry_type is IsometryType.CENTRAL
    with pytest.raises(NonUnimodular):
        classify_matrix(Mat2(2, 0, 0, 1))


def test_standard_form_examples():
    sf = standard_form(Mat2(2, 1, 1, 1))
    assert (sf.epsilon, sf.x) == (-1, 3)
    for eps, x in [(-1, 3), (1, 1), (-1, 4), (1, 0)]:
        A = Mat2(0, eps, 1, x)
        assert standard_form(A).conjugator == Mat2.identity()
    assert standard_form(Mat2(1, 0, 0, -1)) is None


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_standard_form_identity(seed):
    A = random_unimodular(random.Random(seed), 25)
    sf = standard_form(A)
    assert (sf is None) == (represents_unit(form_of_matrix(A)) is None)
    if sf is not None:
        P = sf.conjugator
        assert P.is_unimodular()
        assert P @ A @ P.inverse() == sf.matrix
        assert (sf.epsilon, sf.x) == (-A.det, A.trace)


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_classification_conjugation_invariant(seed):
    rng = random.Random(seed)
    A, P = random_unimodular(rng, 20), random_unimodular(rng, 6)
    c = classify_matrix(A)
    for B in (P @ A @ P.inverse(), -A):
        d = classify_matrix(B)
        assert (d.isometry_type, d.orientation) == (c.isometry_type, c.orientation)


@given(st.integers(0, 10**9), st.integers(-40, 40), st.integers(1, 40))
def test_moebius_matches_vector_action(seed, p, q):
    A = random_unimodular(random.Random(seed), 20)
    v = vertex(p, q)
    num, den = A.a * Fraction(p, q) + A.b, A.c * Fraction(p, q) + A.d
    image = moebius_apply(A, v)
    if den == 0:
        assert image == INFINITY
    else:
        value = num / den
        assert image == vertex(value.numerator, value.denominator)


def test_standard_forms_conjugate():
    assert standard_forms_conjugate(StandardForm(-1, 3, Mat2.identity()), StandardForm(-1, -3, Mat2.identity()))
    assert not standard_forms_conjugate(StandardForm(-1, 3, Mat2.identity()), StandardForm(1, 3, Mat2.identity()))
    assert standard_forms_conjugate(StandardForm(1, 1, Mat2.identity()), StandardForm(1, 1, Mat2.identity()))


def _conjugate_by_search(A, B, bound):
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    P = Mat2(a, b, c, d)
                    if abs(P.det) == 1:
                        PA = P @ A
                        if PA == B @ P or PA == (-B) @ P:
                            return True
    return False


@pytest.mark.parametrize("s1,s2", [((-1, 3), (-1, -3)), ((1, 2), (1, -2)), ((-1, 4), (-1, 5)), ((1, 1), (-1, 1)), ((1, 3), (-1, 3))])
def test_conjugacy_criterion_by_search(s1, s2):
    # PGL2 conjugacy between standard forms, by searching small conjugators
    A, B = Mat2(0, s1[0], 1, s1[1]), Mat2(0, s2[0], 1, s2[1])
    expected = standard_forms_conjugate(StandardForm(*s1, Mat2.identity()), StandardForm(*s2, Mat2.identity()))
    assert _conjugate_by_search(A, B, 3) == expected


def test_fixed_points_examples():
    assert fixed_points(Mat2(0, -1, 1, 3)) == (quadratic_point(-3, -1, 2, 5), quadratic_point(-3, 1, 2, 5))
    lam_minus, lam_plus = fixed_points(Mat2(0, -1, 1, 4))
    assert lam_plus == quadratic_point(-2, 1, 1, 3)
    assert lam_minus == quadratic_point(-2, -1, 1, 3)
    with pytest.raises(NotHyperbolic):
        fixed_points(Mat2(1, 1, 0, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_forward_orbits_converge_to_attracting_point(seed):
    rng = random.Random(seed)
    while True:
        A = random_unimodular(rng, 6)
        if classify_matrix(A).isometry_type is IsometryType.HYPERBOLIC:
            break
    lam_minus, lam_plus = fixed_points(A)
    assert moebius_apply(A, lam_minus) == lam_minus and moebius_apply(A, lam_plus) == lam_plus
    window = Fraction(1, 1000)
    for _ in range(20):
        x = vertex(rng.randint(-30, 30), rng.randint(1, 30))
        if x in (lam_plus, lam_minus):
            continue
        for _ in range(60):
            x = moebius_apply(A, x)
            if not x.is_infinity:
                lo = quadratic_point(x.p * window.denominator - x.q, 0, x.q * window.denominator, 2)
                hi = quadratic_point(x.p * window.denominator + x.q, 0, x.q * window.denominator, 2)
                if qi_compare(lo, lam_plus) < 0 < qi_compare(hi, lam_plus):
                    break
        else:
            pytest.fail(f"{A}: orbit does not approach {lam_plus}")


def test_parabolic_fixed_point():
    assert parabolic_fixed_point(Mat2(1, 1, 0, 1)) == INFINITY
    # z = -1 / (z + 2) has the double root -1
    assert parabolic_fixed_point(Mat2(0, -1, 1, 2)) == vertex(-1, 1)
    assert parabolic_fixed_point(Mat2(0, -1, 1, -2)) == vertex(1, 1)
