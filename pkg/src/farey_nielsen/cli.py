"""Command line: ``farey-nielsen classify|orbits|pair-class|distance|render|selftest``.

Exit codes are 0 on success, 2 for bad input and 3 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from .errors import FareyNielsenError, InvariantViolation, NonUnimodular
from .exact import FareyVertex, Mat2, vertex
from .farey import farey_distance
from .nielsen import GeneratingPair, GroupElement, is_generating_pair, nielsen_class_of, reduce_pair
from .oracles import run_selftest
from .orbits import one_orbit_of, one_orbit_representatives, orbit_partition, s_a_members, same_one_orbit
from .render import max_depth, parse_range, render_matrix
from .report import classification_report

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3

_INT = r"\s*(-?\d+)\s*"
_ELEMENT = re.compile(r"\s*\(" + _INT + "," + _INT + r"\)\s*@" + _INT)


class InputError(ValueError):
    pass


def parse_matrix(text: str) -> Mat2:
    """``"a,b;c,d"`` as a matrix with rows ``(a, b)`` and ``(c, d)``."""
    rows = text.split(";")
    try:
        entries = [[int(x) for x in row.split(",")] for row in rows]
    except ValueError:
        raise InputError(f"cannot parse matrix {text!r}") from None
    if len(entries) != 2 or any(len(r) != 2 for r in entries):
        raise InputError(f"matrix {text!r} is not 2x2")
    return Mat2.from_rows(entries)


def parse_pair(text: str) -> GeneratingPair:
    """``"(p,q)@n,(p,q)@n"`` as an ordered pair of group elements."""
    elements = []
    pos = 0
    for _ in range(2):
        m = _ELEMENT.match(text, pos)
        if m is None:
            raise InputError(f"cannot parse pair {text!r}")
        p, q, n = map(int, m.groups())
        elements.append(GroupElement((p, q), n))
        pos = m.end()
        if len(elements) == 1:
            if not text[pos:].lstrip().startswith(","):
                raise InputError(f"cannot parse pair {text!r}")
            pos = text.index(",", pos) + 1
    if text[pos:].strip():
        raise InputError(f"trailing input in pair {text!r}")
    return GeneratingPair(*elements)


def parse_vertex(text: str) -> FareyVertex:
    """``"p,q"`` (a vector) or ``"p/q"`` or ``"oo"``."""
    text = text.strip()
    try:
        if text in ("oo", "inf", "infinity"):
            return vertex(1, 0)
        if "," in text:
            p, q = (int(x) for x in text.split(","))
        elif "/" in text:
            p, q = (int(x) for x in text.split("/"))
        else:
            p, q = int(text), 1
        return vertex(p, q)
    except ValueError as exc:
        raise InputError(f"cannot parse vertex {text!r}: {exc}") from None


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True, ensure_ascii=False) + "\n")


def _limit(value: int, what: str) -> int:
    cap = max_depth() if what == "depth" else None
    if cap is not None and value > cap:
        raise InputError(f"{what} {value} exceeds FAREY_NIELSEN_MAX_DEPTH={cap}")
    return value


def cmd_classify(args) -> int:
    A = parse_matrix(args.matrix)
    sys.stdout.write(classification_report(A).to_json() + "\n")
    return EXIT_OK


def _unimodular(text: str) -> Mat2:
    A = parse_matrix(text)
    if not A.is_unimodular():
        raise NonUnimodular(f"{A} has determinant {A.det}")
    return A


def cmd_orbits(args) -> int:
    A = _unimodular(args.matrix)
    members = s_a_members(A, args.bound)
    parts = orbit_partition(A, members) if members else []
    reps = one_orbit_representatives(A) if members else []
    out = []
    for part in parts:
        for x in part[1:]:
            if not same_one_orbit(A, part[0], x):
                raise InvariantViolation(f"partition of S_A for {A} is inconsistent")
        orbit = one_orbit_of(A, part[0])
        class_id = next((i for i, r in enumerate(reps) if same_one_orbit(A, r, part[0])), None)
        out.append({
            "class_id": class_id,
            "members": [str(v) for v in part],
            "turning_signature": list(orbit.turning_signature),
        })
    out.sort(key=lambda d: (d["class_id"] is None, d["class_id"] or 0, d["members"][0]))
    _emit({"matrix": [list(r) for r in A.rows()], "bound": args.bound, "orbits": out})
    return EXIT_OK


def cmd_pair_class(args) -> int:
    A = _unimodular(args.matrix)
    p = parse_pair(args.pair)
    if not is_generating_pair(A, p):
        _emit({"generating": False})
        return EXIT_OK
    u, moves = reduce_pair(A, p)
    class_id = nielsen_class_of(A, p)
    rep = one_orbit_representatives(A)[class_id]
    _emit({
        "generating": True,
        "class_id": class_id,
        "representative": [rep.p, rep.q],
        "reduced_vertex": [u.p, u.q],
        "certificate": [str(m) for m in moves],
    })
    return EXIT_OK


def cmd_distance(args) -> int:
    u, v = parse_vertex(args.u), parse_vertex(args.v)
    _emit({"u": str(u), "v": str(v), "distance": farey_distance(u, v, budget=args.budget)})
    return EXIT_OK


def cmd_render(args) -> int:
    A = _unimodular(args.matrix)
    try:
        x_range = parse_range(args.range)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    svg = render_matrix(A, x_range, depth=_limit(args.depth, "depth"), width=args.width, height=args.height)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        _emit({"out": args.out, "bytes": len(svg.encode("utf-8"))})
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(args.level)
    _emit({"level": args.level, "suites": [{"name": r.name, "checked": r.checked, "ok": True} for r in results]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farey-nielsen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=["json"], default="json")
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "full report for a matrix")
    p.add_argument("matrix")
    p = add("orbits", cmd_orbits, "S_A up to a height bound, split into 1-orbits")
    p.add_argument("matrix")
    p.add_argument("--bound", type=int, default=10)
    p = add("pair-class", cmd_pair_class, "Nielsen class of a generating pair")
    p.add_argument("matrix")
    p.add_argument("pair")
    p = add("distance", cmd_distance, "Farey distance between two vertices")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--budget", type=int, default=64)
    p = add("render", cmd_render, "SVG of the Farey graph with the 1-orbits highlighted")
    p.add_argument("matrix")
    p.add_argument("--range", default="-2:2")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--width", type=int, default=960)
    p.add_argument("--height", type=int, default=480)
    p.add_argument("--out")
    p = add("selftest", cmd_selftest, "run the brute-force oracle suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    return parser


def _glue_ranges(argv: List[str]) -> List[str]:
    # argparse reads "--range -4:1" as two options; glue the value on
    out = []
    it = iter(argv)
    for a in it:
        if a == "--range":
            a = "--range=" + next(it, "")
        out.append(a)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_ranges(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InvariantViolation, AssertionError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INVARIANT
    except (FareyNielsenError, InputError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
