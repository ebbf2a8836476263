"""1-orbits of A acting on the Farey graph and their count."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .actions import IsometryType, classify_matrix, fixed_points, parabolic_fixed_point, standard_form
from .errors import CentralInput, InvariantViolation, NotInSA, NotTwoGenerated
from .exact import INFINITY, FareyVertex, Mat2, orient, vertex, vertex_from_vector
from .farey import FareyPath
from .forms import BinaryQuadraticForm, form_of_matrix, form_unit_group, unit_mul


def in_s_a(A: Mat2, v: FareyVertex) -> bool:
    return abs(form_of_matrix(A)(*v.vector)) == 1


def s_a_members(A: Mat2, height_bound: int) -> List[FareyVertex]:
    """Every vertex ``v`` of height at most ``height_bound`` adjacent to ``A v``."""
    Q = form_of_matrix(A)
    out = []
    for q in range(0, height_bound + 1):
        for p in range(-height_bound, height_bound + 1):
            if q == 0 and p != 1:
                continue
            if gcd(p, q) == 1 and abs(Q(p, q)) == 1:
                out.append(FareyVertex(p, q))
    return sorted(out, key=FareyVertex.sort_key)


def act(A: Mat2, v: FareyVertex) -> FareyVertex:
    return vertex_from_vector(A @ v.vector)


@dataclass(frozen=True)
class OneOrbit:
    """A window ``A^-k v, ..., A^k v`` of a 1-orbit (one period when finite)."""

    representative: FareyVertex
    window: FareyPath
    turning_signature: Tuple[int, ...]
    period: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return self.period is not None


def _period(A: Mat2, v: FareyVertex, limit: int = 12) -> Optional[int]:
    x = v
    for n in range(1, limit + 1):
        x = act(A, x)
        if x == v:
            return n
    return None


def one_orbit_of(A: Mat2, v: FareyVertex, half_width: int = 4) -> OneOrbit:
    if not in_s_a(A, v):
        raise NotInSA(f"{v} is not moved distance 1 by {A}")
    period = _period(A, v)
    if period is not None:
        cycle = [v]
        for _ in range(period - 1):
            cycle.append(act(A, cycle[-1]))
        if period == 2:
            return OneOrbit(v, FareyPath(tuple(cycle)), (), period)
        closed = [cycle[-1]] + cycle + [cycle[0]]
        turnings = tuple(FareyPath(tuple(closed)).turnings())
        return OneOrbit(v, FareyPath(tuple(cycle)), turnings, period)
    Ainv = A.inverse()
    back, fwd = [], []
    x = y = v
    for _ in range(half_width):
        x, y = act(Ainv, x), act(A, y)
        back.append(x)
        fwd.append(y)
    window = FareyPath(tuple(reversed(back)) + (v,) + tuple(fwd))
    return OneOrbit(v, window, tuple(window.turnings()))


def orbit_contains(A: Mat2, u: FareyVertex, v: FareyVertex) -> bool:
    """Exact test of ``v in <A> u`` for vertices (orbits taken up to sign)."""
    if u == v:
        return True
    info = classify_matrix(A)
    kind = info.isometry_type
    if kind in (IsometryType.CENTRAL, IsometryType.ELLIPTIC):
        x = act(A, u)
        while x != u:
            if x == v:
                return True
            x = act(A, x)
        return False
    if kind is IsometryType.PARABOLIC:
        f = parabolic_fixed_point(A)
        return _translate_contains(A, u, v, f, None)
    lam_minus, lam_plus = fixed_points(A)
    if info.det == 1:
        return _translate_contains(A, u, v, lam_minus, lam_plus)
    A2 = A @ A
    return _translate_contains(A2, u, v, lam_minus, lam_plus) or _translate_contains(
        A2, act(A, u), v, lam_minus, lam_plus
    )


def _translate_contains(A, u, v, start, end) -> bool:
    # A translates the arc leaving ``start`` (towards ``end`` when hyperbolic);
    # fold v into the fundamental domain [u, Au) of that arc and compare.
    if u == v:
        return True
    Au = act(A, u)
    direction = orient(start, u, Au)
    if end is not None and orient(start, v, end) != direction:
        return False

    def before(y, z):
        return orient(start, y, z) == direction

    Ainv = A.inverse()
    x = v
    while before(x, u):
        x = act(A, x)
    while not before(x, Au):
        x = act(Ainv, x)
    return x == u


def same_one_orbit(A: Mat2, u: FareyVertex, v: FareyVertex) -> bool:
    for x in (u, v):
        if not in_s_a(A, x):
            raise NotInSA(f"{x} is not moved distance 1 by {A}")
    return orbit_contains(A, u, v)


def count_one_orbits(A: Mat2) -> int:
    if standard_form(A) is None:
        raise NotTwoGenerated(f"G_A is not 2-generated for A = {A}")
    return 2 if A.det == 1 and abs(A.trace) == 3 else 1


def _minimal_on_orbit(A: Mat2, u: FareyVertex) -> FareyVertex:
    # local descent along the orbit, then an exact box scan at that height
    best = u
    for B in (A, A.inverse()):
        x = act(B, u)
        while x.height < best.height or (x.height == best.height and x.sort_key() < best.sort_key()):
            best = x
            x = act(B, x)
    candidates = [w for w in s_a_members(A, best.height) if orbit_contains(A, best, w)]
    return min(candidates, key=FareyVertex.sort_key)


def one_orbit_representatives(A: Mat2) -> List[FareyVertex]:
    """One minimal vertex per 1-orbit; the orbit through ``v`` from the standard form first."""
    sf = standard_form(A)
    if sf is None:
        raise NotTwoGenerated(f"G_A is not 2-generated for A = {A}")
    back = sf.conjugator.inverse()
    standard = [INFINITY]
    if sf.epsilon == -1 and sf.x == 3:
        standard.append(vertex(-1, 1))
    elif sf.epsilon == -1 and sf.x == -3:
        standard.append(vertex(1, 1))
    reps = [_minimal_on_orbit(A, vertex_from_vector(back @ s.vector)) for s in standard]
    if len(reps) == 2 and orbit_contains(A, reps[0], reps[1]):
        raise InvariantViolation(f"representatives of {A} share an orbit")
    return reps


def orbit_partition(A: Mat2, members: Sequence[FareyVertex]) -> List[List[FareyVertex]]:
    """Group vertices of S_A into 1-orbits by exact orbit membership."""
    parts: List[List[FareyVertex]] = []
    for v in members:
        for part in parts:
            if orbit_contains(A, part[0], v):
                part.append(v)
                break
        else:
            parts.append([v])
    return parts


def commutant_basis(A: Mat2) -> Tuple[int, int, Mat2]:
    """``(r, g, B)`` with ``A = r I + g B`` and ``Z I + Z B`` the integral commutant of ``A``."""
    g = gcd(gcd(A.b, A.c), A.d - A.a)
    r = A.a % g
    B = Mat2((A.a - r) // g, A.b // g, A.c // g, (A.d - r) // g)
    return r, g, B


def _unit_inverse(Q: BinaryQuadraticForm, x):
    m, k = x
    n = Q(m, k)
    return ((m + Q.b * k) * n, -k * n)


def centralizer_index(A: Mat2) -> int:
    """Index of ``<A, -I>`` in the centralizer of ``A`` in GL2(Z)."""
    if A.is_central():
        raise CentralInput(f"{A} is central")
    if standard_form(A) is None:
        raise NotTwoGenerated(f"G_A is not 2-generated for A = {A}")
    r, g, B = commutant_basis(A)
    Q = BinaryQuadraticForm(1, B.trace, B.det)
    units = form_unit_group(Q)
    a_coords = (r, g)
    if units.kind == "finite":
        group = set(units.torsion)
        sub = {(1, 0)}
        frontier = [(1, 0)]
        while frontier:
            x = frontier.pop()
            for gen in (a_coords, (-1, 0)):
                y = unit_mul(Q, x, gen)
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        assert sub <= group, (A, sub, group)
        return len(group) // len(sub)
    eps = units.fundamental
    targets = {a_coords, (-a_coords[0], -a_coords[1])}
    size = max(abs(r), abs(g))
    for gen in (eps, _unit_inverse(Q, eps)):
        x, j = gen, 1
        while max(abs(x[0]), abs(x[1])) <= 4 * size + 4 or j <= 2:
            if x in targets:
                return j
            x, j = unit_mul(Q, x, gen), j + 1
    raise InvariantViolation(f"{A} is not a power of the fundamental unit {eps}")
