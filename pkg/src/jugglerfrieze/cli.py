"""Command line front end.

Subcommands: siteswap, check, construct, transform, solve, render,
enumerate.  JSON is the only interchange format; the ASCII renderer is
presentation-only.  Exit codes: 0 success, 1 a mathematical check
failed, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from .juggling import JugglingFunction, SiteswapError, parse_siteswap, \
    format_siteswap, residue
from .matrices import Matrix
from .frieze import PeriodicFrieze, check_frieze, dual_frieze, is_frieze, \
    is_positive, enumerate_sl2_positive
from .construct import build_frieze_det, build_frieze_twist, twist, \
    inverse_twist, positive_complement, frieze_to_matrix
from .recurrence import solution_matrix


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_matrix(path: str) -> Matrix:
    try:
        return Matrix.from_json(_load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad matrix file {path}: {exc}") from None


def _load_frieze(path: str) -> PeriodicFrieze:
    try:
        return PeriodicFrieze.from_json(_load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad frieze file {path}: {exc}") from None


def _parse_pattern(text: str) -> JugglingFunction:
    try:
        return parse_siteswap(text)
    except SiteswapError as exc:
        raise InputError(str(exc)) from None


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_siteswap(args) -> int:
    pi = _parse_pattern(args.pattern)
    info = pi.classify()
    print(f"pattern   {format_siteswap(pi)}")
    print(f"period    {pi.period}")
    print(f"values    {' '.join(str(v) for v in pi.values)}")
    print(f"balls     {pi.balls}")
    print(f"dual      {format_siteswap(pi.dual())}")
    print(f"loops     {sorted(info['loops']) or '-'}")
    print(f"coloops   {sorted(info['coloops']) or '-'}")
    print(f"uniform   {'yes' if info['uniform'] else 'no'}")
    print("necklace")
    for a, sched in enumerate(pi.necklace(), start=1):
        print(f"  L{a}: {' '.join(str(b) for b in sched)}")
    return 0


def cmd_check(args) -> int:
    c = _load_frieze(args.frieze)
    report = check_frieze(c)
    payload = report.to_json()
    payload["positive"] = is_positive(c)
    _emit(payload, args.output)
    return 0 if report.ok else 1


def cmd_construct(args) -> int:
    m = _load_matrix(args.matrix)
    pi = _parse_pattern(args.siteswap)
    try:
        build = build_frieze_det if args.method == "det" else build_frieze_twist
        result = build(m, pi)
        if args.verify:
            other = build_frieze_twist if args.method == "det" else build_frieze_det
            if other(m, pi) != result or not is_frieze(result):
                print("verification failed", file=sys.stderr)
                return 1
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(result.to_json(), args.output)
    return 0


def cmd_transform(args) -> int:
    try:
        if args.op in ("twist", "inverse-twist", "complement"):
            m = _load_matrix(args.input)
            if args.op == "complement":
                out = positive_complement(m)
            else:
                pi = _parse_pattern(args.siteswap or "")
                out = (twist if args.op == "twist" else inverse_twist)(m, pi)
            _emit(out.to_json(), args.output)
        elif args.op == "dual":
            c = _load_frieze(args.input)
            _emit(dual_frieze(c).to_json(), args.output)
        elif args.op == "invert-F":
            c = _load_frieze(args.input)
            _emit(frieze_to_matrix(c).to_json(), args.output)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return 0


def cmd_solve(args) -> int:
    c = _load_frieze(args.frieze)
    try:
        window = solution_matrix(c)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    payload = window.to_json()
    if args.basis is not None:
        n = c.shape.period
        sched = c.shape.landing_schedule(args.basis)
        payload["schedule"] = [residue(b, n) for b in sched]
        payload["basis_columns"] = {
            str(residue(b, n)): payload["columns"][str(residue(b, n))]
            for b in sched}
    _emit(payload, args.output)
    return 0


def render_frieze(c: PeriodicFrieze, periods: int = 1) -> str:
    """Fixed-width diamond strip; G marks the diagonal, B the boundary."""
    pi = c.shape
    n = pi.period
    depth = max(pi(b) - b for b in range(1, n + 1))
    cells = {}
    for b in range(1, periods * n + 1):
        top = pi(b) - b
        for d in range(0, top + 1):
            a = b + d
            marker = ("G" if a == b else "") + ("B" if a == pi(b) else "")
            free = pi.inverse(a) < b < a < pi(b)
            if marker or free:
                cells[(d, 2 * b + d)] = marker + str(c.entry(a, b))
    width = max(len(t) for t in cells.values()) + 1
    slots = range(2, 2 * periods * n + depth + 1)
    lines = []
    for d in range(depth + 1):
        line = "".join(cells.get((d, s), "").rjust(width) for s in slots)
        lines.append(line.rstrip())
    return "\n".join(lines)


def cmd_render(args) -> int:
    if args.periods < 1:
        raise InputError("--periods must be positive")
    c = _load_frieze(args.frieze)
    print(render_frieze(c, args.periods))
    return 0


def cmd_enumerate(args) -> int:
    if args.height < 1 or args.bound < 1:
        raise InputError("height and bound must be positive")
    friezes = enumerate_sl2_positive(args.height, args.bound)
    print(f"count {len(friezes)}")
    if args.dump:
        for f in friezes:
            print(json.dumps(f.to_json(), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jugglerfrieze",
        description="Exact arithmetic for juggler's friezes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("siteswap", help="inspect a juggling pattern")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_siteswap)

    p = sub.add_parser("check", help="verify the frieze conditions")
    p.add_argument("frieze")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build the frieze of a matrix")
    p.add_argument("matrix")
    p.add_argument("--siteswap", required=True)
    p.add_argument("--method", choices=("det", "twist"), default="det")
    p.add_argument("--verify", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("transform", help="apply a matrix or frieze transform")
    p.add_argument("input")
    p.add_argument("--op", required=True,
                   choices=("twist", "inverse-twist", "complement", "dual",
                            "invert-F"))
    p.add_argument("--siteswap")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("solve", help="solution window of the recurrence")
    p.add_argument("frieze")
    p.add_argument("--basis", type=int, default=None,
                   help="also list the basis columns indexed by this schedule")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="print the frieze as a diamond strip")
    p.add_argument("frieze")
    p.add_argument("--periods", type=int, default=1)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="positive integral friezes, k = 2")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--dump", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
