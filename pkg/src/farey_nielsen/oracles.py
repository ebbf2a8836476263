"""Brute-force oracles and the consistency suites behind ``selftest``.

Each oracle takes a route independent of the library function it checks:
box enumeration instead of reduction theory, breadth-first search on a height
box instead of the ladder, orbit iteration instead of fundamental domains.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

from .errors import InvariantViolation
from .exact import FareyVertex, Mat2, ext_gcd, vertex
from .farey import farey_distance, neighbors_within
from .forms import BinaryQuadraticForm, represents_unit
from .nielsen import nielsen_class_count, nielsen_class_of, pair_of, apply_move, BASIC_MOVES
from .orbits import act, centralizer_index, count_one_orbits, one_orbit_representatives, orbit_partition, s_a_members
from .actions import standard_form


def box_unit_search(Q: BinaryQuadraticForm, bound: int) -> Optional[Tuple[int, int]]:
    """First primitive ``(p, q)`` with ``|p|, |q| <= bound`` and ``Q(p, q) = +-1``."""
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if (p, q) != (0, 0) and abs(Q(p, q)) == 1:
                return (p, q)
    return None


def box_distance(u: FareyVertex, v: FareyVertex, height: int) -> Optional[int]:
    """Farey distance inside the subgraph of vertices of height at most ``height``."""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return dist[x]
        for y in neighbors_within(x, height):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def orbit_by_iteration(A: Mat2, u: FareyVertex, height: int, steps: int = 200) -> set:
    """Orbit points of height at most ``height`` met within ``steps`` iterations each way."""
    out = {u} if u.height <= height else set()
    for B in (A, A.inverse()):
        x = u
        for _ in range(steps):
            x = act(B, x)
            if x.height <= height:
                out.add(x)
    return out


def random_unimodular(rng: random.Random, bound: int) -> Mat2:
    """A random matrix of determinant +-1 with entries in ``[-bound, bound]``.

    Picks a primitive first row, then a uniformly random admissible second row
    ``(c0, d0) + t (a, b)`` for a random determinant sign.
    """
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if gcd(a, b) != 1:
            continue
        det = rng.choice((1, -1))
        _, x, y = ext_gcd(a, b)  # a x + b y = 1, so (c, d) = det * (-y, x) works
        c0, d0 = -det * y, det * x
        ts = [t for t in range(-2 * bound - 2, 2 * bound + 3)
              if abs(c0 + t * a) <= bound and abs(d0 + t * b) <= bound]
        if ts:
            t = rng.choice(ts)
            return Mat2(a, b, c0 + t * a, d0 + t * b)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int


def _fail(message: str):
    raise InvariantViolation(message)


def check_unit_solver(bound: int, box: int) -> SuiteResult:
    n = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                Q = BinaryQuadraticForm(a, b, c)
                found = represents_unit(Q)
                if found is not None and (abs(Q(*found)) != 1 or gcd(*found) != 1):
                    _fail(f"bad certificate {found} for {Q}")
                if found is None and box_unit_search(Q, box) is not None:
                    _fail(f"solver missed a unit of {Q}")
                n += 1
    return SuiteResult("unit solver vs box search", n)


def check_distance(samples: int, height: int, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    pool = [vertex(p, q) for q in range(1, height + 1) for p in range(-height, height + 1) if gcd(p, q) == 1]
    for _ in range(samples):
        u, v = rng.choice(pool), rng.choice(pool)
        got, want = farey_distance(u, v), box_distance(u, v, height)
        if got != want:
            _fail(f"distance {u} -> {v}: ladder {got}, box {want}")
    return SuiteResult("ladder distance vs box BFS", samples)


def check_orbits(samples: int, bound: int, height: int, seed: int = 1) -> SuiteResult:
    rng = random.Random(seed)
    done = 0
    while done < samples:
        A = random_unimodular(rng, bound)
        if A.is_central() or standard_form(A) is None:
            continue
        k = count_one_orbits(A)
        if not (k == nielsen_class_count(A) == centralizer_index(A)):
            _fail(f"consistency triangle fails for {A}")
        members = s_a_members(A, height)
        parts = orbit_partition(A, members)
        reps = one_orbit_representatives(A)
        if len(reps) != k:
            _fail(f"{A}: {len(reps)} representatives for {k} orbits")
        for part in parts:
            seen = orbit_by_iteration(A, part[0], height)
            if not set(part) <= seen:
                _fail(f"{A}: partition part through {part[0]} is not one orbit")
        done += 1
    return SuiteResult("orbit count, centralizer index, partition", samples)


def random_walk(A: Mat2, p, rng: random.Random, steps: int, norm_bound: int = 10**4):
    """Apply ``steps`` random basic moves, skipping any that leave the norm bound."""
    for _ in range(steps):
        q = apply_move(A, p, rng.choice(BASIC_MOVES))
        if q.max_coefficient() <= norm_bound:
            p = q
    return p


def check_nielsen(samples: int, seed: int = 2) -> SuiteResult:
    rng = random.Random(seed)
    for A in (Mat2(2, 1, 1, 1), Mat2(0, -1, 1, 3), Mat2(0, 1, 1, 1), Mat2(0, -1, 1, 4)):
        for cls, rep in enumerate(one_orbit_representatives(A)):
            p = pair_of(rep.vector)
            for _ in range(samples):
                p = random_walk(A, p, rng, 1, norm_bound=1000)
                if nielsen_class_of(A, p) != cls:
                    _fail(f"{A}: a Nielsen move changed the class of {p}")
    return SuiteResult("Nielsen class invariance", samples)


SUITES: Dict[str, List[Callable[[], SuiteResult]]] = {
    "quick": [
        lambda: check_unit_solver(4, 30),
        lambda: check_distance(60, 12),
        lambda: check_orbits(20, 6, 20),
        lambda: check_nielsen(50),
    ],
    "full": [
        lambda: check_unit_solver(8, 60),
        lambda: check_distance(400, 20),
        lambda: check_orbits(150, 20, 30),
        lambda: check_nielsen(1000),
    ],
}


def run_selftest(level: str = "quick") -> List[SuiteResult]:
    return [suite() for suite in SUITES[level]]
