"""JSON classification reports; decimals in them are annotations only."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Optional

from .actions import IsometryType, classify_matrix, fixed_points, standard_form
from .exact import BoundaryPoint, FareyVertex, Mat2, QuadraticIrrational
from .orbits import count_one_orbits, one_orbit_representatives

DECIMAL_DIGITS = 12


def exact_point(x: BoundaryPoint) -> Dict[str, Any]:
    """``{p, q, r, D}`` meaning ``(p + q*sqrt(D)) / r``, with a display decimal."""
    if isinstance(x, FareyVertex):
        p, q, r, D = x.p, 0, x.q, 0
        approx = "inf" if x.is_infinity else str(round(x.p / x.q, DECIMAL_DIGITS))
    else:
        p, q, r, D = x.p, x.q, x.r, x.D
        approx = str(x.decimal(DECIMAL_DIGITS))
    return {"p": p, "q": q, "r": r, "D": D, "decimal": approx}


@dataclass(frozen=True)
class ClassificationReport:
    matrix: List[List[int]]
    det: int
    trace: int
    isometry_type: str
    orientation: str
    two_generated: bool
    standard_form: Optional[Dict[str, Any]] = None
    nielsen_classes: Optional[int] = None
    orbit_representatives: Optional[List[List[int]]] = None
    turning_absolute_value: Optional[int] = None
    fixed_points: Optional[Dict[str, Dict[str, Any]]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ClassificationReport":
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


def classification_report(A: Mat2) -> ClassificationReport:
    info = classify_matrix(A)
    sf = standard_form(A)
    base = dict(
        matrix=[list(r) for r in A.rows()],
        det=info.det,
        trace=info.trace,
        isometry_type=info.isometry_type.value,
        orientation=info.orientation.value,
        two_generated=sf is not None,
    )
    if sf is None:
        return ClassificationReport(**base)
    fixed = None
    if info.isometry_type is IsometryType.HYPERBOLIC:
        minus, plus = fixed_points(A)
        fixed = {"repelling": exact_point(minus), "attracting": exact_point(plus)}
    return ClassificationReport(
        **base,
        standard_form={
            "epsilon": sf.epsilon,
            "x": sf.x,
            "conjugator": [list(r) for r in sf.conjugator.rows()],
        },
        nielsen_classes=count_one_orbits(A),
        orbit_representatives=[[v.p, v.q] for v in one_orbit_representatives(A)],
        # the turning at 0 of the standard form is -epsilon*x, and every orbit shares |x|
        turning_absolute_value=abs(sf.x),
        fixed_points=fixed,
    )
