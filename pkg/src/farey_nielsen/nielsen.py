"""The group Z^2 x|_A Z, Nielsen moves on generating pairs, and their classes.

Multiplication is ``(v, n) * (w, m) = (v + A^n w, n + m)``, so conjugating
``(u, 0)`` by ``(0, 1)`` gives ``(A u, 0)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Tuple

from .errors import InvariantViolation, NotGenerating, NotTwoGenerated
from .exact import FareyVertex, Mat2, Vector, vertex_from_vector
from .forms import form_of_matrix
from .orbits import count_one_orbits, one_orbit_representatives, orbit_contains


@dataclass(frozen=True)
class GroupElement:
    vec: Vector
    exp: int

    def __str__(self) -> str:
        return f"({self.vec[0]},{self.vec[1]})@{self.exp}"


IDENTITY = GroupElement((0, 0), 0)


def g_mul(A: Mat2, g: GroupElement, h: GroupElement) -> GroupElement:
    w = (A ** g.exp) @ h.vec
    return GroupElement((g.vec[0] + w[0], g.vec[1] + w[1]), g.exp + h.exp)


def g_inv(A: Mat2, g: GroupElement) -> GroupElement:
    w = (A ** -g.exp) @ g.vec
    return GroupElement((-w[0], -w[1]), -g.exp)


def g_pow(A: Mat2, g: GroupElement, k: int) -> GroupElement:
    base = g if k >= 0 else g_inv(A, g)
    result = IDENTITY
    k = abs(k)
    while k:
        if k & 1:
            result = g_mul(A, result, base)
        base = g_mul(A, base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class GeneratingPair:
    first: GroupElement
    second: GroupElement

    def __getitem__(self, i: int) -> GroupElement:
        return (self.first, self.second)[i - 1]

    def replace(self, i: int, g: GroupElement) -> "GeneratingPair":
        return GeneratingPair(g, self.second) if i == 1 else GeneratingPair(self.first, g)

    def max_coefficient(self) -> int:
        return max(abs(c) for g in (self.first, self.second) for c in (*g.vec, g.exp))

    def __str__(self) -> str:
        return f"{self.first},{self.second}"


def pair_of(v: Vector, w: Vector = (0, 0), m: int = 1, n: int = 0) -> GeneratingPair:
    """The pair ``((v, n), (w, m))``; the defaults give ``((v, 0), (0, 1))``."""
    return GeneratingPair(GroupElement(tuple(v), n), GroupElement(tuple(w), m))


class MoveKind(enum.Enum):
    RIGHT_MULTIPLY = "multiply"
    SWAP = "swap"
    INVERT = "invert"
    LEFT_MULTIPLY = "left-multiply"


@dataclass(frozen=True)
class NielsenMove:
    """One move on an ordered pair.

    ``RIGHT_MULTIPLY`` replaces ``a`` (at ``target``) by ``a b**power`` and
    ``LEFT_MULTIPLY`` by ``b**power a``, where ``b`` is the other generator.
    Only ``RIGHT_MULTIPLY`` with power 1, ``SWAP`` and ``INVERT`` are basic;
    :meth:`expand` rewrites any move into basic ones.
    """

    kind: MoveKind
    target: int = 1
    power: int = 1

    @property
    def other(self) -> int:
        return 3 - self.target

    def is_basic(self) -> bool:
        return self.kind is not MoveKind.LEFT_MULTIPLY and (
            self.kind is not MoveKind.RIGHT_MULTIPLY or self.power == 1
        )

    def inverse(self) -> "NielsenMove":
        if self.kind in (MoveKind.RIGHT_MULTIPLY, MoveKind.LEFT_MULTIPLY):
            return NielsenMove(self.kind, self.target, -self.power)
        return self

    def expand(self) -> List["NielsenMove"]:
        if self.kind is MoveKind.RIGHT_MULTIPLY:
            step = [NielsenMove(MoveKind.RIGHT_MULTIPLY, self.target)] * abs(self.power)
            if self.power >= 0:
                return step
            flip = NielsenMove(MoveKind.INVERT, self.other)
            return [flip] + step + [flip]
        if self.kind is MoveKind.LEFT_MULTIPLY:
            flip = NielsenMove(MoveKind.INVERT, self.target)
            inner = NielsenMove(MoveKind.RIGHT_MULTIPLY, self.target, -self.power).expand()
            return [flip] + inner + [flip]
        return [self]

    def __str__(self) -> str:
        if self.kind is MoveKind.SWAP:
            return "swap"
        if self.kind is MoveKind.INVERT:
            return f"invert({self.target})"
        return f"{self.kind.value}({self.target},{self.power})"


SWAP = NielsenMove(MoveKind.SWAP)
BASIC_MOVES = (
    NielsenMove(MoveKind.RIGHT_MULTIPLY, 1),
    NielsenMove(MoveKind.RIGHT_MULTIPLY, 2),
    SWAP,
    NielsenMove(MoveKind.INVERT, 1),
    NielsenMove(MoveKind.INVERT, 2),
)
SEARCH_MOVES = BASIC_MOVES + (
    NielsenMove(MoveKind.RIGHT_MULTIPLY, 1, -1),
    NielsenMove(MoveKind.RIGHT_MULTIPLY, 2, -1),
)


def apply_move(A: Mat2, p: GeneratingPair, m: NielsenMove) -> GeneratingPair:
    if m.kind is MoveKind.SWAP:
        return GeneratingPair(p.second, p.first)
    a = p[m.target]
    if m.kind is MoveKind.INVERT:
        return p.replace(m.target, g_inv(A, a))
    b = g_pow(A, p[m.other], m.power)
    if m.kind is MoveKind.RIGHT_MULTIPLY:
        return p.replace(m.target, g_mul(A, a, b))
    return p.replace(m.target, g_mul(A, b, a))


def replay(A: Mat2, p: GeneratingPair, moves) -> GeneratingPair:
    for m in moves:
        p = apply_move(A, p, m)
    return p


def _reduce_exponents(A: Mat2, p: GeneratingPair):
    """Euclid on the exponents; returns a pair ``((u, 0), (w, 1))`` and its moves."""
    moves: List[NielsenMove] = []

    def do(m):
        nonlocal p
        p = apply_move(A, p, m)
        moves.append(m)

    if gcd(p.first.exp, p.second.exp) != 1:
        return None, moves
    while p.first.exp and p.second.exp:
        n1, n2 = p.first.exp, p.second.exp
        if abs(n1) >= abs(n2):
            do(NielsenMove(MoveKind.RIGHT_MULTIPLY, 1, -_trunc_div(n1, n2)))
        else:
            do(NielsenMove(MoveKind.RIGHT_MULTIPLY, 2, -_trunc_div(n2, n1)))
    if p.second.exp == 0:
        do(SWAP)
    if p.second.exp == -1:
        do(NielsenMove(MoveKind.INVERT, 2))
    return p, moves


def _trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


def is_generating_pair(A: Mat2, p: GeneratingPair) -> bool:
    reduced, _ = _reduce_exponents(A, p)
    if reduced is None:
        return False
    return abs(form_of_matrix(A)(*reduced.first.vec)) == 1


def reduce_pair(A: Mat2, p: GeneratingPair) -> Tuple[FareyVertex, List[NielsenMove]]:
    """Reduce to ``((u, 0), (0, 1))``; returns ``u`` as a vertex and the replayable moves."""
    reduced, moves = _reduce_exponents(A, p)
    if reduced is None or abs(form_of_matrix(A)(*reduced.first.vec)) != 1:
        raise NotGenerating(f"{p} does not generate G_A")
    u, w = reduced.first.vec, reduced.second.vec
    if w != (0, 0):
        Au = A @ u
        alpha, beta = Mat2.from_columns(u, Au).inverse() @ w
        tail = [
            NielsenMove(MoveKind.LEFT_MULTIPLY, 2, -alpha),
            NielsenMove(MoveKind.RIGHT_MULTIPLY, 1, -1),
            NielsenMove(MoveKind.LEFT_MULTIPLY, 1, 1),
            NielsenMove(MoveKind.LEFT_MULTIPLY, 2, -beta),
            NielsenMove(MoveKind.LEFT_MULTIPLY, 1, -1),
            NielsenMove(MoveKind.RIGHT_MULTIPLY, 1, 1),
        ]
        moves += [m for m in tail if m.power != 0]
    final = replay(A, p, moves)
    assert final == pair_of(u), (p, final, u)
    return vertex_from_vector(u), moves


@lru_cache(maxsize=1024)
def _representatives(A: Mat2) -> Tuple[FareyVertex, ...]:
    return tuple(one_orbit_representatives(A))


def nielsen_class_of(A: Mat2, p: GeneratingPair) -> int:
    """Index into ``one_orbit_representatives(A)`` of the Nielsen class of ``p``."""
    u, _ = reduce_pair(A, p)
    hits = [i for i, rep in enumerate(_representatives(A)) if orbit_contains(A, rep, u)]
    if len(hits) != 1:
        raise InvariantViolation(f"{p} matches classes {hits} for A = {A}")
    return hits[0]


def nielsen_class_count(A: Mat2) -> int:
    return count_one_orbits(A)


def nielsen_bfs_search(
    A: Mat2, p: GeneratingPair, q: GeneratingPair, depth: int = 10, norm_bound: int = 10**6
) -> Optional[List[NielsenMove]]:
    """Bidirectional BFS for a move sequence taking ``p`` to ``q``.

    Returns the certificate, or ``None`` when the bounded search is exhausted
    (which says nothing about inequivalence).
    """
    for pair in (p, q):
        if not is_generating_pair(A, pair):
            raise NotGenerating(f"{pair} does not generate G_A")
    if p == q:
        return []
    # parent maps: state -> (neighbour closer to the root, move between them)
    parents: Tuple[Dict, Dict] = ({p: None}, {q: None})
    frontiers = ([p], [q])
    radius = [0, 0]
    while radius[0] + radius[1] < depth and (frontiers[0] or frontiers[1]):
        side = 0 if (len(frontiers[0]) <= len(frontiers[1]) and frontiers[0]) or not frontiers[1] else 1
        mine, theirs = parents[side], parents[1 - side]
        nxt = []
        for state in frontiers[side]:
            for m in SEARCH_MOVES:
                # the backward tree stores states s with apply(s, m) == parent
                new = apply_move(A, state, m if side == 0 else m.inverse())
                if new in mine or new.max_coefficient() > norm_bound:
                    continue
                mine[new] = (state, m)
                if new in theirs:
                    return _splice(parents, new)
                nxt.append(new)
        radius[side] += 1
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    return None


def _splice(parents, meet) -> List[NielsenMove]:
    forward, backward = parents
    head: List[NielsenMove] = []
    state = meet
    while forward[state] is not None:
        state, m = forward[state]
        head.append(m)
    head.reverse()
    state = meet
    while backward[state] is not None:
        state, m = backward[state]
        head.append(m)
    return head
