"""GL2(Z) acting on the boundary circle: classification, standard form, fixed points."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import NonUnimodular, NotHyperbolic
from .exact import FareyVertex, BoundaryPoint, Mat2, moebius_point, qi_compare, quadratic_point, vertex
from .forms import form_of_matrix, represents_unit


class IsometryType(enum.Enum):
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    CENTRAL = "Central"


class Orientation(enum.Enum):
    PRESERVING = "Preserving"
    REVERSING = "Reversing"


@dataclass(frozen=True)
class MatrixClassification:
    det: int
    trace: int
    isometry_type: IsometryType
    orientation: Orientation
    elliptic_order: Optional[int] = None


@dataclass(frozen=True)
class StandardForm:
    """``conjugator @ A @ conjugator^-1 == [[0, epsilon], [1, x]]``."""

    epsilon: int
    x: int
    conjugator: Mat2

    @property
    def matrix(self) -> Mat2:
        return Mat2(0, self.epsilon, 1, self.x)


def moebius_apply(A: Mat2, x: BoundaryPoint) -> BoundaryPoint:
    if not A.is_unimodular():
        raise NonUnimodular(f"{A} is not in GL2(Z)")
    return moebius_point(A, x)


def _require_unimodular(A: Mat2):
    if not A.is_unimodular():
        raise NonUnimodular(f"{A} has determinant {A.det}")


def classify_matrix(A: Mat2) -> MatrixClassification:
    _require_unimodular(A)
    det, tr = A.det, A.trace
    orientation = Orientation.PRESERVING if det == 1 else Orientation.REVERSING
    order = None
    if A.is_central():
        kind = IsometryType.CENTRAL
    elif det == 1 and abs(tr) == 2:
        kind = IsometryType.PARABOLIC
    elif (det == 1 and abs(tr) < 2) or (det == -1 and tr == 0):
        kind = IsometryType.ELLIPTIC
        power = A
        for order in range(1, 7):
            if power.is_central():
                break
            power = power @ A
        else:
            raise AssertionError(f"elliptic {A} has no power in the centre")
    else:
        kind = IsometryType.HYPERBOLIC
    return MatrixClassification(det, tr, kind, orientation, order)


def standard_form(A: Mat2) -> Optional[StandardForm]:
    """Conjugate ``A`` to ``[[0, -det A], [1, tr A]]``, or ``None`` when no 1-orbit exists."""
    _require_unimodular(A)
    v = represents_unit(form_of_matrix(A))
    if v is None:
        return None
    basis = Mat2.from_columns(v, A @ v)
    P = basis.inverse()
    sf = StandardForm(-A.det, A.trace, P)
    assert P @ A @ basis == sf.matrix, (A, sf)
    return sf


def standard_forms_conjugate(s1: StandardForm, s2: StandardForm) -> bool:
    return s1.epsilon == s2.epsilon and abs(s1.x) == abs(s2.x)


def _exceeds_one(x: BoundaryPoint) -> bool:
    # |x| > 1
    return qi_compare(x, vertex(1, 1)) > 0 or qi_compare(x, vertex(-1, 1)) < 0


def fixed_points(A: Mat2) -> Tuple[BoundaryPoint, BoundaryPoint]:
    """``(repelling, attracting)`` fixed points of a hyperbolic matrix, exactly."""
    kind = classify_matrix(A).isometry_type
    if kind is not IsometryType.HYPERBOLIC:
        raise NotHyperbolic(f"{A} is {kind.value}")
    a, b, c, d = A.a, A.b, A.c, A.d
    D = A.trace ** 2 - 4 * A.det
    roots = [quadratic_point(a - d, s, 2 * c, D) for s in (1, -1)]
    # attracting iff |derivative| = 1 / (c z + d)**2 < 1, and c z + d = (tr +- sqrt D) / 2
    attracting = [_exceeds_one(quadratic_point(A.trace, s, 2, D)) for s in (1, -1)]
    assert attracting[0] != attracting[1], A
    plus = roots[0] if attracting[0] else roots[1]
    minus = roots[1] if attracting[0] else roots[0]
    return minus, plus


def parabolic_fixed_point(A: Mat2) -> FareyVertex:
    lam = A.trace // 2
    N = A - Mat2.identity().scale(lam)
    col = (N.a, N.c) if (N.a, N.c) != (0, 0) else (N.b, N.d)
    return vertex(*col)
