"""The Farey graph: vertices, links, turning numbers, separation and distance.

Link convention: for a vertex ``v`` and a neighbour ``w`` with
``det(v, w) = +1`` every neighbour of ``v`` is ``+-(w + k v)`` for a unique
integer ``k``, its link index.  The turning number of a path ``a, v, b`` is the
difference of link indices ``k(b) - k(a)``.  With this convention the turning
at infinity along an orbit is ``A(oo) - A^-1(oo)`` and the turning at 0 for
``[[0, e], [1, x]]`` is ``-e*x``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import BudgetExceeded, DegenerateTurn, NotAdjacent, PointOnEdge, TurningTooSmall
from .exact import (
    INFINITY,
    BoundaryPoint,
    FareyVertex,
    Mat2,
    det2,
    ext_gcd,
    qi_compare,
    sign,
    vertex,
    vertex_from_vector,
)

__all__ = [
    "FareyVertex",
    "FareyEdge",
    "FareyPath",
    "GeodesicVerdict",
    "vertex",
    "vertex_from_vector",
    "adjacent",
    "edge",
    "link_base",
    "link_vertex",
    "link_index",
    "turning_number",
    "edge_separates",
    "edges_cross",
    "shares_complementary_triangle",
    "separating_edges",
    "is_geodesic_by_turning",
    "ladder",
    "farey_distance",
    "all_geodesics",
    "neighbors_within",
    "path_from_turnings",
]


def adjacent(u: FareyVertex, v: FareyVertex) -> bool:
    return abs(det2(u.vector, v.vector)) == 1


@dataclass(frozen=True)
class FareyEdge:
    """Unordered Farey edge stored as ``(lo, hi)`` with ``lo < hi``, infinity last."""

    lo: FareyVertex
    hi: FareyVertex

    @property
    def endpoints(self) -> Tuple[FareyVertex, FareyVertex]:
        return (self.lo, self.hi)

    def other(self, v: FareyVertex) -> FareyVertex:
        if v == self.lo:
            return self.hi
        if v == self.hi:
            return self.lo
        raise ValueError(f"{v} is not an endpoint of {self}")

    def __contains__(self, v) -> bool:
        return v == self.lo or v == self.hi

    def __str__(self) -> str:
        return f"{{{self.lo},{self.hi}}}"


def edge(u: FareyVertex, v: FareyVertex) -> FareyEdge:
    if not adjacent(u, v):
        raise NotAdjacent(f"{u} and {v} are not adjacent")
    if qi_compare(u, v) > 0:
        u, v = v, u
    return FareyEdge(u, v)


def link_base(v: FareyVertex) -> FareyVertex:
    """A fixed neighbour of ``v``, the base point of its link indices."""
    _, x, y = ext_gcd(v.p, v.q)
    return vertex(-y, x)


def _unit_rep(v: FareyVertex, u: FareyVertex):
    d = det2(v.vector, u.vector)
    if abs(d) != 1:
        raise NotAdjacent(f"{u} is not adjacent to {v}")
    return (d * u.p, d * u.q)


def link_vertex(v: FareyVertex, k: int, base: Optional[FareyVertex] = None) -> FareyVertex:
    """The neighbour of ``v`` with link index ``k`` relative to ``base``."""
    w = _unit_rep(v, base if base is not None else link_base(v))
    return vertex(w[0] + k * v.p, w[1] + k * v.q)


def link_index(v: FareyVertex, base: FareyVertex, u: FareyVertex) -> int:
    """The integer ``k`` with ``u = +-(w + k v)`` where ``w`` represents ``base``."""
    w = _unit_rep(v, base)
    x = _unit_rep(v, u)
    if v.p != 0:
        k, r = divmod(x[0] - w[0], v.p)
    else:
        k, r = divmod(x[1] - w[1], v.q)
    assert r == 0
    return k


def turning_number(a: FareyVertex, v: FareyVertex, b: FareyVertex) -> int:
    if a == b:
        raise DegenerateTurn(f"path backtracks at {v}")
    w = link_base(v)
    return link_index(v, w, b) - link_index(v, w, a)


def edge_separates(e: FareyEdge, x: BoundaryPoint, y: BoundaryPoint) -> bool:
    """True when the edge ``e`` separates the boundary points ``x`` and ``y``."""
    for z in (x, y):
        if qi_compare(z, e.lo) == 0 or qi_compare(z, e.hi) == 0:
            raise PointOnEdge(f"{z} is an endpoint of {e}")

    # infinity is the largest point, so (lo, hi) is the interval not containing it
    def inside(z):
        return qi_compare(e.lo, z) < 0 and qi_compare(z, e.hi) < 0

    return inside(x) != inside(y)


def edges_cross(e1: FareyEdge, e2: FareyEdge) -> bool:
    """Whether two edges with four distinct endpoints interleave on the boundary."""
    if set(e1.endpoints) & set(e2.endpoints):
        return False
    return edge_separates(e1, e2.lo, e2.hi)


def shares_complementary_triangle(e1: FareyEdge, e2: FareyEdge) -> bool:
    common = set(e1.endpoints) & set(e2.endpoints)
    if len(common) != 1:
        return False
    (c,) = common
    return adjacent(e1.other(c), e2.other(c))


@dataclass(frozen=True)
class FareyPath:
    """A finite window of a path in the Farey graph."""

    vertices: Tuple[FareyVertex, ...]
    allow_backtrack: bool = False

    def __post_init__(self):
        vs = self.vertices
        for u, v in zip(vs, vs[1:]):
            if not adjacent(u, v):
                raise NotAdjacent(f"consecutive vertices {u}, {v} are not adjacent")
        if not self.allow_backtrack:
            for i in range(1, len(vs) - 1):
                if vs[i - 1] == vs[i + 1]:
                    raise DegenerateTurn(f"path backtracks at index {i}")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def turning(self, i: int) -> int:
        vs = self.vertices
        return turning_number(vs[i - 1], vs[i], vs[i + 1])

    def turnings(self) -> List[int]:
        return [self.turning(i) for i in range(1, len(self.vertices) - 1)]


def separating_edges(path: FareyPath, i: int) -> List[FareyEdge]:
    """The edges ``m_i`` (and ``n_i``, ``o_i`` when they exist) at vertex ``i``.

    They are the link edges of ``v_i`` strictly between the entry and exit
    edges, taken from the exit side inward; ``m_i`` shares a complementary
    triangle with the exit edge ``[v_i, v_{i+1}]``.
    """
    vs = path.vertices
    if not 0 < i < len(vs) - 1:
        raise IndexError(f"index {i} is not interior")
    v = vs[i]
    w = link_base(v)
    k_in = link_index(v, w, vs[i - 1])
    k_out = link_index(v, w, vs[i + 1])
    turn = k_out - k_in
    if abs(turn) < 3:
        raise TurningTooSmall(f"|turning| = {abs(turn)} < 3 at index {i}")
    step = sign(turn)
    count = 3 if abs(turn) >= 4 else 1
    return [edge(v, link_vertex(v, k_out - j * step, w)) for j in range(1, count + 1)]


class GeodesicVerdict(enum.Enum):
    UNIQUE_GEODESIC = "UniqueGeodesic"
    GEODESIC = "Geodesic"
    INCONCLUSIVE = "Inconclusive"


def is_geodesic_by_turning(path: FareyPath) -> GeodesicVerdict:
    """Sufficient turning-number criteria for geodesics and unique geodesics."""
    if len(path) < 3:
        raise ValueError("need at least three vertices")
    smallest = min(abs(t) for t in path.turnings())
    if smallest >= 4:
        return GeodesicVerdict.UNIQUE_GEODESIC
    if smallest >= 3:
        return GeodesicVerdict.GEODESIC
    return GeodesicVerdict.INCONCLUSIVE


Graph = Dict[FareyVertex, Set[FareyVertex]]


def ladder(u: FareyVertex, t: FareyVertex) -> Graph:
    """The Farey triangles crossed by the hyperbolic geodesic from ``u`` to ``t``.

    Returned as an adjacency map on their vertices.  Every Farey geodesic
    between ``u`` and ``t`` stays inside this finite subgraph: a path leaving
    it must cross a boundary edge twice, and replacing the excursion by that
    edge shortens the path.
    """
    graph: Graph = {u: set(), t: set()}
    if u == t:
        return graph
    w = link_base(u)
    M = Mat2.from_columns(u.vector, _unit_rep(u, w))  # M(oo) = u
    r, s = vertex_from_vector(M.inverse() @ t.vector).vector

    def add(*tri):
        images = [vertex_from_vector(M @ x) for x in tri]
        for a in images:
            graph.setdefault(a, set())
        for a in images:
            for b in images:
                if a != b:
                    graph[a].add(b)

    if s == 1:
        add((1, 0), (r, 1))
        return graph
    n = r // s
    left, right = (n, 1), (n + 1, 1)
    add((1, 0), left, right)
    while True:
        med = (left[0] + right[0], left[1] + right[1])
        add(left, right, med)
        if med == (r, s):
            return graph
        if r * med[1] < med[0] * s:
            right = med
        else:
            left = med


def _bfs_layers(graph: Graph, source: FareyVertex, limit: int) -> Dict[FareyVertex, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if dist[x] >= limit:
            continue
        for y in graph[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def farey_distance(u: FareyVertex, v: FareyVertex, budget: int = 64) -> int:
    """Graph distance in the Farey graph by bidirectional BFS on the ladder of ``u, v``."""
    if u == v:
        return 0
    graph = ladder(u, v)
    seen = ({u: 0}, {v: 0})
    frontiers = ([u], [v])
    radius = [0, 0]
    while frontiers[0] and frontiers[1]:
        if radius[0] + radius[1] >= budget:
            break
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = seen[side], seen[1 - side]
        radius[side] += 1
        nxt = []
        best = None
        for x in frontiers[side]:
            for y in graph[x]:
                if y in theirs:
                    total = radius[side] + theirs[y]
                    best = total if best is None else min(best, total)
                if y not in mine:
                    mine[y] = radius[side]
                    nxt.append(y)
        if best is not None:
            if best > budget:
                break
            return best
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    raise BudgetExceeded(f"distance from {u} to {v} exceeds {budget}")


def all_geodesics(u: FareyVertex, v: FareyVertex, limit: int = 10_000) -> List[Tuple[FareyVertex, ...]]:
    """Every geodesic path from ``u`` to ``v`` (at most ``limit`` of them)."""
    graph = ladder(u, v)
    from_u = _bfs_layers(graph, u, len(graph))
    from_v = _bfs_layers(graph, v, len(graph))
    n = from_u[v]
    paths: List[Tuple[FareyVertex, ...]] = []

    def extend(prefix):
        if len(paths) >= limit:
            return
        x = prefix[-1]
        if x == v:
            paths.append(tuple(prefix))
            return
        step = len(prefix)
        for y in sorted(graph[x], key=FareyVertex.sort_key):
            if from_u.get(y) == step and from_v.get(y) == n - step:
                extend(prefix + [y])

    extend([u])
    return paths


def neighbors_within(x: FareyVertex, height: int) -> Iterable[FareyVertex]:
    """All Farey neighbours of ``x`` whose height is at most ``height``."""
    w = _unit_rep(x, link_base(x))
    i = 0 if abs(x.p) >= abs(x.q) else 1
    xi, wi = x.vector[i], w[i]
    lo = (-height - wi) // abs(xi) - 1
    hi = (height - wi) // abs(xi) + 1
    for k in range(lo, hi + 1):
        kk = k if xi > 0 else -k
        y = vertex(w[0] + kk * x.p, w[1] + kk * x.q)
        if y.height <= height:
            yield y


def path_from_turnings(start: FareyVertex, first: FareyVertex, turnings: Sequence[int]) -> FareyPath:
    """Build the path starting with the edge ``start -> first`` with prescribed turnings."""
    vs = [start, first]
    for t in turnings:
        prev, cur = vs[-2], vs[-1]
        w = link_base(cur)
        vs.append(link_vertex(cur, link_index(cur, w, prev) + t, w))
    return FareyPath(tuple(vs))
