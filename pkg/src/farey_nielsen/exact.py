"""Exact integer linear algebra and points of the compactified real line.

Everything here is Python ``int`` arithmetic.  Boundary points are either
rational (stored as a :class:`FareyVertex`, with ``(1, 0)`` standing for
infinity) or real quadratic irrationals ``(p + q*sqrt(D)) / r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import gcd, isqrt
from typing import Tuple, Union

from .errors import NonUnimodular, ZeroVector

Vector = Tuple[int, int]


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def from_columns(cls, u: Vector, v: Vector) -> "Mat2":
        return cls(u[0], v[0], u[1], v[1])

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def is_unimodular(self) -> bool:
        return abs(self.det) == 1

    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        p, q = other
        return (self.a * p + self.b * q, self.c * p + self.d * q)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return self + (-other)

    def scale(self, k: int) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def inverse(self) -> "Mat2":
        det = self.det
        if det not in (1, -1):
            raise NonUnimodular(f"determinant {det} is not a unit: {self}")
        # det is its own inverse
        return Mat2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Mat2.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def max_abs(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return A @ B


def mat_inv(A: Mat2) -> Mat2:
    return A.inverse()


def mat_apply(A: Mat2, v: Vector) -> Vector:
    return A @ v


def det2(u: Vector, v: Vector) -> int:
    """Determinant of the matrix with columns ``u`` and ``v``."""
    return u[0] * v[1] - u[1] * v[0]


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def sign(n) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True)
class FareyVertex:
    """A primitive integer vector up to sign, i.e. a point of Q u {oo}.

    Canonical representative: ``q > 0``, or ``(p, q) == (1, 0)`` for infinity.
    Construct through :func:`vertex` unless the pair is already canonical.
    """

    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1 or self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"non-canonical vertex ({self.p},{self.q})")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    @property
    def vector(self) -> Vector:
        return (self.p, self.q)

    @property
    def height(self) -> int:
        return max(abs(self.p), abs(self.q))

    def sort_key(self):
        return (self.height, self.q, self.p)

    def __str__(self) -> str:
        if self.q == 0:
            return "oo"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __float__(self) -> float:
        return float("inf") if self.q == 0 else self.p / self.q


def vertex(p: int, q: int) -> FareyVertex:
    """Normalize a nonzero integer vector to its canonical Farey vertex."""
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise ZeroVector("the zero vector is not a Farey vertex")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return FareyVertex(p, q)


def vertex_from_vector(v: Vector) -> FareyVertex:
    return vertex(v[0], v[1])


INFINITY = FareyVertex(1, 0)
ZERO = FareyVertex(0, 1)
ONE_POINT = FareyVertex(1, 1)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class QuadraticIrrational:
    """The real number ``(p + q*sqrt(D)) / r`` with ``D`` a positive non-square.

    Canonical form: ``r > 0``, ``gcd(p, q, r) == 1`` and ``q != 0``.  Build
    through :func:`quadratic_point`, which also collapses rational values.
    """

    p: int
    q: int
    r: int
    D: int

    def __post_init__(self):
        if self.r <= 0 or self.q == 0 or gcd(gcd(self.p, self.q), self.r) != 1:
            raise ValueError(f"non-canonical quadratic irrational {self!r}")
        if self.D <= 0 or is_square(self.D):
            raise ValueError(f"D={self.D} must be a positive non-square")

    def __neg__(self) -> "QuadraticIrrational":
        return QuadraticIrrational(-self.p, -self.q, self.r, self.D)

    def conjugate(self) -> "QuadraticIrrational":
        return QuadraticIrrational(self.p, -self.q, self.r, self.D)

    def decimal(self, digits: int = 12) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            value = (Decimal(self.p) + Decimal(self.q) * Decimal(self.D).sqrt()) / Decimal(self.r)
            return round(value, digits)

    def __float__(self) -> float:
        return float(self.decimal(20))

    def __str__(self) -> str:
        op = "+" if self.q > 0 else "-"
        coeff = "" if abs(self.q) == 1 else f"{abs(self.q)}*"
        return f"({self.p}{op}{coeff}sqrt({self.D}))/{self.r}"


BoundaryPoint = Union[FareyVertex, QuadraticIrrational]


def quadratic_point(p: int, q: int, r: int, D: int) -> BoundaryPoint:
    """Canonical boundary point for ``(p + q*sqrt(D)) / r``; ``r == 0`` is infinity."""
    if r == 0:
        if p == 0 and q == 0:
            raise ZeroVector("0/0 is not a boundary point")
        return INFINITY
    if q != 0 and is_square(D):
        p, q = p + q * isqrt(D), 0
    if q == 0:
        return vertex(p, r)
    if r < 0:
        p, q, r = -p, -q, -r
    root, D = _square_part(D)
    q *= root
    g = gcd(gcd(p, q), r)
    return QuadraticIrrational(p // g, q // g, r // g, D)


def _square_part(D: int) -> Tuple[int, int]:
    """Split ``D = f**2 * D0`` removing square factors of primes below 1000."""
    f = 1
    for prime in _SMALL_PRIMES:
        if prime * prime > D:
            break
        while D % (prime * prime) == 0:
            D //= prime * prime
            f *= prime
    if is_square(D):
        return f * isqrt(D), 1
    return f, D


_SMALL_PRIMES = [n for n in range(2, 1000) if all(n % d for d in range(2, isqrt(n) + 1))]


def surd_sign(alpha: int, beta: int, D: int) -> int:
    """Sign of ``alpha + beta*sqrt(D)`` for ``D >= 0``."""
    sa, sb = sign(alpha), sign(beta)
    if sb == 0 or D == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sign(alpha * alpha - beta * beta * D) * sa


def _sign3(a: int, b: int, D1: int, c: int, D2: int) -> int:
    """Sign of ``a + b*sqrt(D1) + c*sqrt(D2)``."""
    if c == 0 or D2 == 0:
        return surd_sign(a, b, D1)
    if b == 0 or D1 == 0 or D1 == D2:
        return surd_sign(a, b + c if D1 == D2 else c, D2)
    su = surd_sign(a, b, D1)
    sv = -sign(c)
    if su != sv:
        return sign(su - sv)
    if su == 0:
        return 0
    return su * surd_sign(a * a + b * b * D1 - c * c * D2, 2 * a * b, D1)


def _parts(x: BoundaryPoint):
    if isinstance(x, FareyVertex):
        return x.p, 0, x.q, 0
    return x.p, x.q, x.r, x.D


def qi_compare(x: BoundaryPoint, y: BoundaryPoint) -> int:
    """Exact comparison on R u {oo}, infinity being the largest element.

    Returns -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``.
    """
    x_inf = isinstance(x, FareyVertex) and x.is_infinity
    y_inf = isinstance(y, FareyVertex) and y.is_infinity
    if x_inf or y_inf:
        return int(x_inf) - int(y_inf)
    p1, q1, r1, D1 = _parts(x)
    p2, q2, r2, D2 = _parts(y)
    return _sign3(p1 * r2 - p2 * r1, q1 * r2, D1, -q2 * r1, D2)


def orient(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint) -> int:
    """Cyclic orientation of three boundary points.

    +1 when travelling in the increasing direction from ``x`` one meets ``y``
    before ``z``, -1 for the opposite order, 0 if two points coincide.
    """
    return qi_compare(y, x) * qi_compare(z, y) * qi_compare(z, x)


def moebius_point(A: Mat2, x: BoundaryPoint) -> BoundaryPoint:
    """Fractional linear action ``x -> (a x + b) / (c x + d)`` on the boundary."""
    if isinstance(x, FareyVertex):
        return vertex_from_vector(A @ x.vector)
    p, q, r, D = x.p, x.q, x.r, x.D
    n1, n2 = A.a * p + A.b * r, A.a * q
    m1, m2 = A.c * p + A.d * r, A.c * q
    den = m1 * m1 - m2 * m2 * D
    return quadratic_point(n1 * m1 - n2 * m2 * D, n2 * m1 - n1 * m2, den, D)
