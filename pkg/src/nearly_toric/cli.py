"""Command-line entry point: ``nearly-toric <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a disagreement, and 2
for bad input (unparseable text, or a permutation outside the class an
operation needs).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import bk, classify as cls, enumeration as enum_, psi as psi_mod
from .dyck import DyckPath, InvalidPathError, is_spherical_dyck
from .perm import InvalidPermutationError, SearchExhaustedError, format_perm, parse_perm

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2

BOX = {"v": "│", "h": "─", "up_right": "┌", "right_up": "┘", "diag": "\\", "dot": "·"}
ASCII = {"v": "|", "h": "-", "up_right": "+", "right_up": "+", "diag": "\\", "dot": "."}


class UsageError(Exception):
    pass


def render(p: DyckPath, ascii_only: bool = False) -> str:
    """Draw ``p`` on a character grid, top row first.

    Lattice point (x, y) sits at column 2x of line n - y; the column between
    two points carries horizontal strokes.  Points of the main diagonal that
    the path misses show as a backslash.
    """
    glyph = ASCII if ascii_only else BOX
    n = p.n
    grid = [[" "] * (2 * n + 1) for _ in range(n + 1)]
    pts, steps = p.points, p.steps
    rightmost = {}
    for x, y in pts:
        rightmost[y] = max(x, rightmost.get(y, x))
    for y in range(n + 1):
        for x in range(rightmost[y] + 1, y):
            grid[n - y][2 * x] = glyph["dot"]
        grid[n - y][2 * y] = glyph["diag"]
    for j, (x, y) in enumerate(pts):
        came = steps[j - 1] if j > 0 else None
        goes = steps[j] if j < len(steps) else None
        if came == "N" and goes == "E":
            ch = glyph["up_right"]
        elif came == "E" and goes == "N":
            ch = glyph["right_up"]
        elif "N" in (came, goes):
            ch = glyph["v"]
        elif "E" in (came, goes):
            ch = glyph["h"]
        else:
            continue
        grid[n - y][2 * x] = ch
        if goes == "E":
            grid[n - y][2 * x + 1] = glyph["h"]
    return "\n".join("".join(row).rstrip() for row in grid)


# -- output helpers -------------------------------------------------------------

def _emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(obj))
        writer.writerow([_scalar(v) for v in obj.values()])
    else:
        width = max(len(k) for k in obj)
        for k, v in obj.items():
            out.write(f"{k:<{width}}  {_scalar(v)}\n")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return "" if v is None else str(v)


def _perm(text: str):
    try:
        return parse_perm(text)
    except InvalidPermutationError as exc:
        raise UsageError(str(exc)) from exc


def _path(text: str) -> DyckPath:
    try:
        return DyckPath.parse(text)
    except InvalidPathError as exc:
        raise UsageError(str(exc)) from exc


# -- commands --------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    w = _perm(args.perm)
    record = cls.classify(w)
    _emit({"permutation": format_perm(w), **record.to_dict()}, args.format, out)
    return EXIT_OK


def cmd_dyck(args, out) -> int:
    if args.action == "to-perm":
        p = _path(args.payload)
        _emit({"path": p.steps, "permutation": format_perm(bk.path_to_perm(p))}, args.format, out)
    elif args.action == "from-perm":
        w = _perm(args.payload)
        try:
            p = bk.perm_to_path(w)
        except bk.NotAvoiding312Error as exc:
            raise UsageError(str(exc)) from exc
        _emit({"permutation": format_perm(w), "path": p.steps}, args.format, out)
    elif args.action == "render":
        out.write(render(_path(args.payload), ascii_only=args.ascii) + "\n")
    else:
        p = _path(args.payload)
        _emit({"path": p.steps, "spherical": is_spherical_dyck(p)}, args.format, out)
    return EXIT_OK


def cmd_psi(args, out) -> int:
    w = _perm(args.perm)
    variant = psi_mod.Variant(args.variant)
    try:
        if args.direction == "forward":
            image, witness = psi_mod.psi_with_witness(w, variant)
            payload = {
                "input": format_perm(w),
                "output": format_perm(image),
                "variant": variant.value,
                "case": int(witness.case),
                "witness": list(witness.word),
                "pivot_i": witness.pivot_i,
                "factor_position": witness.factor_position,
                "d": witness.d,
            }
        else:
            word, m, i = psi_mod.find_b_witness(w)
            image = psi_mod.psi_inverse(w, variant)
            payload = {
                "input": format_perm(w),
                "output": format_perm(image),
                "variant": variant.value,
                "witness": list(word),
                "pivot_i": i,
                "factor_position": m + 1,
            }
    except psi_mod.NotInClassError as exc:
        raise UsageError(str(exc)) from exc
    _emit(payload, args.format, out)
    return EXIT_OK


def _size(args) -> None:
    try:
        enum_.check_size(args.n_max, args.max_n_override)
    except enum_.SizeLimitError as exc:
        raise UsageError(f"{exc} (pass --max-n-override to allow up to {enum_.HARD_N_CAP})") from exc


def cmd_enumerate(args, out) -> int:
    _size(args)
    rows = []
    for n in range(args.n_max + 1):
        counts = enum_.brute_counts(n, args.threads, args.max_n_override)
        rows.append({"n": n, **{c: counts[c] for c in enum_.CLASSES}})
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow(list(row.values()))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    _size(args)
    f0, f1 = args.fib_seeds
    result = enum_.verify(args.n_max, args.threads, args.max_n_override, f0=f0, f1=f1)
    if args.format == "json":
        out.write(json.dumps({"reports": [r.to_dict() for r in result.reports],
                              "identities": [c.to_dict() for c in result.identities],
                              "ok": result.ok}, indent=2) + "\n")
    elif args.format == "csv":
        out.write(result.to_csv())
    else:
        out.write(result.to_csv())
        bad = [c for c in result.identities if not c.holds]
        out.write(f"# identities checked: {len(result.identities)}, failing: {len(bad)}\n")
        for c in bad:
            out.write(f"# FAIL {c.name} at n={c.n}: {c.lhs} != {c.rhs}\n")
    return EXIT_OK if result.ok else EXIT_DISAGREE


def _seeds(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers like 0,1, got {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("--n-max", type=int, default=6)
    sizes.add_argument("--threads", type=int, default=None,
                       help=f"worker processes (default: ${enum_.THREADS_ENV} or 1)")
    sizes.add_argument("--max-n-override", action="store_true",
                       help=f"allow n up to {enum_.HARD_N_CAP}")

    parser = argparse.ArgumentParser(prog="nearly-toric", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="all flags for one permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dyck", parents=[common], help="Dyck path conversions and rendering")
    p.add_argument("action", choices=("to-perm", "from-perm", "render", "is-spherical"))
    p.add_argument("payload", help="a path (NNEE or 1,1,0,0) or a permutation")
    p.add_argument("--ascii", action="store_true", help="render without box-drawing characters")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("psi", parents=[common], help="the map from M_{n+1} to B_n")
    p.add_argument("direction", choices=("forward", "inverse"))
    p.add_argument("perm")
    p.add_argument("--variant", choices=[v.value for v in psi_mod.Variant],
                   default=psi_mod.Variant.SHIFT.value)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("enumerate", parents=[common, sizes], help="brute-force class counts")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, sizes],
                       help="brute force vs closed forms vs series")
    p.add_argument("--fib-seeds", type=_seeds, default=(0, 1), metavar="F0,F1",
                   help="Fibonacci seeds for the closed forms (debugging; 1,1 must fail)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
