"""Binary quadratic forms: the form det(v, Av), unit representation, unit groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import List, Optional, Tuple

from .errors import UnsupportedForm
from .exact import Mat2, Vector, ext_gcd, is_square, quadratic_point, qi_compare, ONE_POINT, sign

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """``a*p**2 + b*p*q + c*q**2``."""

    a: int
    b: int
    c: int

    def __call__(self, p: int, q: int) -> int:
        return self.a * p * p + self.b * p * q + self.c * q * q

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __neg__(self) -> "BinaryQuadraticForm":
        return BinaryQuadraticForm(-self.a, -self.b, -self.c)

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def transform(self, M: Mat2) -> "BinaryQuadraticForm":
        """The form ``v -> self(M v)``."""
        a, b, c = self
        return BinaryQuadraticForm(
            self(M.a, M.c),
            2 * a * M.a * M.b + b * (M.a * M.d + M.b * M.c) + 2 * c * M.c * M.d,
            self(M.b, M.d),
        )

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def form_of_matrix(A: Mat2) -> BinaryQuadraticForm:
    """Q(v) = det(v, Av), which is (c, d - a, -b) for A = [[a, b], [c, d]]."""
    return BinaryQuadraticForm(A.c, A.d - A.a, -A.b)


def represents_unit(Q: BinaryQuadraticForm) -> Optional[Vector]:
    """A primitive vector ``v`` with ``Q(v) = +-1``, or ``None`` if there is none."""
    a, b, c = Q
    if abs(a) == 1:
        return (1, 0)
    if abs(c) == 1:
        return (0, 1)
    if Q.is_zero():
        return None
    D = Q.discriminant
    if D < 0:
        v = _unit_definite(Q)
    elif D == 0:
        v = _unit_degenerate(Q)
    elif is_square(D):
        v = _unit_split(Q)
    else:
        v = _unit_indefinite(Q)
    if v is not None:
        assert abs(Q(*v)) == 1, (Q, v)
    return v


def _definite_solutions(Q: BinaryQuadraticForm, target: int) -> List[Vector]:
    """All integer solutions of Q(v) = target for a definite form, target != 0."""
    a, b, c = Q
    if a < 0:
        a, b, c, target = -a, -b, -c, -target
    if target <= 0:
        return []
    # 4a*Q = (2ap + bq)**2 + |D| q**2
    absD = -(b * b - 4 * a * c)
    out = []
    qmax = isqrt(4 * a * target // absD)
    for q in range(-qmax, qmax + 1):
        rest = 4 * a * target - absD * q * q
        if rest < 0:
            continue
        s = isqrt(rest)
        if s * s != rest:
            continue
        for root in {s, -s}:
            num = root - b * q
            if num % (2 * a) == 0:
                out.append((num // (2 * a), q))
    return sorted(set(out))


def _unit_definite(Q: BinaryQuadraticForm) -> Optional[Vector]:
    sols = _definite_solutions(Q, 1) + _definite_solutions(Q, -1)
    return sols[0] if sols else None


def _degenerate_root(Q: BinaryQuadraticForm) -> Tuple[int, int, int]:
    """Write a discriminant-zero form with content 1 as ``s*(alpha*p + beta*q)**2``."""
    a, b, c = Q
    s = sign(a) if a else sign(c)
    alpha, beta = isqrt(abs(a)), isqrt(abs(c))
    if b * s < 0:
        beta = -beta
    assert (s * alpha * alpha, 2 * s * alpha * beta, s * beta * beta) == (a, b, c), Q
    return s, alpha, beta


def _unit_degenerate(Q: BinaryQuadraticForm) -> Optional[Vector]:
    if Q.content != 1:
        return None
    _, alpha, beta = _degenerate_root(Q)
    _, x, y = ext_gcd(alpha, beta)
    return (x, y)


def linear_factors(Q: BinaryQuadraticForm) -> Tuple[Pair, Pair]:
    """Factor a form with square discriminant as ``(m1 p + n1 q)(m2 p + n2 q)``."""
    a, b, c = Q
    if a == 0:
        return (0, 1), (b, c)
    root = Fraction(-b + isqrt(Q.discriminant), 2 * a)
    m1, n1 = root.denominator, -root.numerator
    m2, r = divmod(a, m1)
    n2, r2 = divmod(b - n1 * m2, m1)
    assert r == 0 and r2 == 0 and n1 * n2 == c, Q
    return (m1, n1), (m2, n2)


def _split_solutions(Q: BinaryQuadraticForm) -> List[Vector]:
    (m1, n1), (m2, n2) = linear_factors(Q)
    delta = m1 * n2 - n1 * m2
    out = []
    for e1 in (1, -1):
        for e2 in (1, -1):
            p, rp = divmod(n2 * e1 - n1 * e2, delta)
            q, rq = divmod(m1 * e2 - m2 * e1, delta)
            if rp == 0 and rq == 0:
                out.append((p, q))
    return sorted(set(out))


def _unit_split(Q: BinaryQuadraticForm) -> Optional[Vector]:
    sols = _split_solutions(Q)
    return sols[0] if sols else None


def _is_reduced(Q: BinaryQuadraticForm, s: int) -> bool:
    # |sqrt(D) - 2|a|| < b < sqrt(D) with s = isqrt(D), D non-square
    a, b, _ = Q
    return 0 < b <= s and 2 * abs(a) - b <= s and 2 * abs(a) + b >= s + 1


def rho(Q: BinaryQuadraticForm, s: int) -> Tuple[BinaryQuadraticForm, Mat2]:
    """One reduction step ``(a, b, c) -> (c, b', c')`` and its transformation matrix."""
    a, b, c = Q
    two_c = 2 * abs(c)
    if abs(c) > s:
        b2 = (-b) % two_c
        if b2 > abs(c):
            b2 -= two_c
    else:
        b2 = s - ((s + b) % two_c)
    t = (b2 + b) // (2 * c)
    M = Mat2(0, -1, 1, t)
    new = BinaryQuadraticForm(c, b2, (b2 * b2 - Q.discriminant) // (4 * c))
    return new, M


def reduce_indefinite(Q: BinaryQuadraticForm) -> Tuple[BinaryQuadraticForm, Mat2]:
    """Properly equivalent reduced form ``R`` and ``M`` in SL2(Z) with ``Q(M v) = R(v)``."""
    s = isqrt(Q.discriminant)
    M = Mat2.identity()
    steps = 0
    while not _is_reduced(Q, s):
        Q, step = rho(Q, s)
        M = M @ step
        steps += 1
        if steps > 100_000:
            raise RuntimeError(f"reduction did not terminate for {Q}")
    return Q, M


def reduced_cycle(Q: BinaryQuadraticForm) -> List[Tuple[BinaryQuadraticForm, Mat2]]:
    """The cycle of reduced forms equivalent to ``Q`` with transformations from ``Q``."""
    s = isqrt(Q.discriminant)
    start, M = reduce_indefinite(Q)
    cycle = [(start, M)]
    form = start
    while True:
        form, step = rho(form, s)
        M = M @ step
        if form == start:
            return cycle
        cycle.append((form, M))


def _unit_indefinite(Q: BinaryQuadraticForm) -> Optional[Vector]:
    for form in (Q, -Q):
        for reduced, M in reduced_cycle(form):
            if abs(reduced.a) == 1:
                return (M.a, M.c)
    return None


@dataclass(frozen=True)
class UnitGroupDescription:
    """Solutions of ``|Q(m, k)| = 1`` for a norm form ``Q = (1, t, n)``.

    Pairs ``(m, k)`` stand for ``m + k*beta`` where ``beta**2 = t*beta - n``.
    ``kind`` is ``"finite"`` (all units listed in ``torsion``), ``"parabolic"``
    (``+-1`` times powers of ``fundamental``) or ``"infinite"`` (``+-1`` times
    powers of ``fundamental``, the least unit above 1 under the embedding
    ``beta = (t + sqrt(t**2 - 4n)) / 2``).
    """

    form: BinaryQuadraticForm
    kind: str
    torsion: Tuple[Pair, ...]
    fundamental: Optional[Pair] = None


def unit_mul(Q: BinaryQuadraticForm, x: Pair, y: Pair) -> Pair:
    _, t, n = Q
    m1, k1 = x
    m2, k2 = y
    return (m1 * m2 - n * k1 * k2, m1 * k2 + k1 * m2 + t * k1 * k2)


def unit_value(Q: BinaryQuadraticForm, x: Pair):
    """Boundary point ``m + k*beta`` under the embedding with the larger root."""
    _, t, n = Q
    m, k = x
    return quadratic_point(2 * m + k * t, k, 2, t * t - 4 * n)


def _fundamental_unit(Q: BinaryQuadraticForm) -> Pair:
    # Periodic continued fraction of (P0 + sqrt(D)) / 2; the last two
    # convergent denominators of one period give the fundamental unit.
    _, t, _ = Q
    D = Q.discriminant
    s = isqrt(D)
    P0 = s if (s - D) % 2 == 0 else s - 1
    P, R = P0, 2
    q_prev, q_cur = 1, 0
    while True:
        digit = (P + s) // R
        q_prev, q_cur = q_cur, digit * q_cur + q_prev
        P = digit * R - P
        R = (D - P * P) // R
        if (P, R) == (P0, 2):
            break
    k = q_cur
    m = (2 * q_prev + k * (P0 - t)) // 2
    return (m, k)


def form_unit_group(Q: BinaryQuadraticForm) -> UnitGroupDescription:
    """Group of solutions of ``|Q| = 1`` for a norm form with leading coefficient 1."""
    if Q.is_zero():
        raise UnsupportedForm("the zero form has no unit group")
    if Q.a != 1:
        raise UnsupportedForm(f"{Q} is not a norm form (1, t, n)")
    D = Q.discriminant
    if D < 0:
        return UnitGroupDescription(Q, "finite", tuple(_definite_solutions(Q, 1)))
    if D == 0:
        half = Q.b // 2
        return UnitGroupDescription(Q, "parabolic", ((1, 0), (-1, 0)), (1 - half, 1))
    if is_square(D):
        return UnitGroupDescription(Q, "finite", tuple(_split_solutions(Q)))
    eps = _fundamental_unit(Q)
    assert abs(Q(*eps)) == 1 and qi_compare(unit_value(Q, eps), ONE_POINT) > 0, (Q, eps)
    return UnitGroupDescription(Q, "infinite", ((1, 0), (-1, 0)), eps)
