"""Command-line front end.

Exit codes: 0 success, 2 invalid triplet, 3 solver degeneracy
(over/underdetermined system), 64 usage errors.  Output is deterministic;
`--json` switches every subcommand to the documented JSON schemas.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import classical
from .core import HomologyTriplet, enumerate_triplets, validate_triplet
from .errors import DegenerateSystem, TripletError
from .solver import betti, solve_alpha
from .squarefree import triplet_betti
from .tables import full_table, render

USAGE_EXIT = 64


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated integer list, got %r" % text)


def _window(text):
    pair = _int_list(text)
    if len(pair) != 2:
        raise argparse.ArgumentTypeError("expected lo,hi")
    return pair


def _add_triplet_args(p):
    p.add_argument("--n", type=int)
    p.add_argument("--B", type=_int_list)
    p.add_argument("--H", type=_int_list)
    p.add_argument("--C", type=_int_list)
    p.add_argument("--stdin", action="store_true", help="read JSON triplets, one per line, from stdin")
    p.add_argument("--json", action="store_true")


def _triplets_from(args, parser):
    if args.stdin:
        return [HomologyTriplet.from_json(line) for line in sys.stdin if line.strip()]
    if args.n is None or args.B is None or args.H is None or args.C is None:
        parser.error("--n, --B, --H, --C are required (or use --stdin)")
    return [validate_triplet(args.n, args.B, args.H, args.C)]


def build_parser():
    parser = Parser(prog="triplets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    for name in ("validate", "solve", "betti", "triplet", "rotate", "dual"):
        _add_triplet_args(sub.add_parser(name))
    p = sub.add_parser("table")
    _add_triplet_args(p)
    p.add_argument("--window", type=_window)

    p = sub.add_parser("enumerate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("zip")
    p.add_argument("--roots", type=_int_list, required=True)
    p.add_argument("--scale", type=Fraction, default=Fraction(1))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classical")
    csub = p.add_subparsers(dest="family", required=True, parser_class=Parser)
    q = csub.add_parser("en")
    q.add_argument("--w", type=int, required=True)
    q = csub.add_parser("br")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = csub.add_parser("schur")
    q.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    q = csub.add_parser("tensor")
    q.add_argument("--dims", type=_int_list, required=True)
    q.add_argument("--weights", type=_int_list, required=True)
    for q in csub.choices.values():
        q.add_argument("--n", type=int)
        q.add_argument("--json", action="store_true")
    return parser


def _emit_report(report, roots, args):
    if args.json:
        print(json.dumps({
            "roots": list(roots.roots),
            "scale": str(roots.scale),
            "n": report.n,
            "degrees": list(report.degrees),
            "ranks": list(report.ranks),
            "is_resolution": report.is_resolution,
            "is_cm": report.is_cm,
        }))
    else:
        print("degrees:", ",".join(map(str, report.degrees)))
        print("ranks:", ",".join(map(str, report.ranks)))
        print("resolution:", report.is_resolution)
        print("cohen-macaulay:", report.is_cm)


def _run(args, parser):
    cmd = args.command
    if cmd == "enumerate":
        for t in enumerate_triplets(args.n):
            print(t.to_json())
        return 0
    if cmd == "zip":
        roots = classical.RootSequence(args.roots, args.scale)
        _emit_report(classical.pure_zip(roots, args.n), roots, args)
        return 0
    if cmd == "classical":
        if args.family == "en":
            roots = classical.eagon_northcott(args.w)
        elif args.family == "br":
            roots = classical.buchsbaum_rim(args.r, args.m)
        elif args.family == "schur":
            roots = classical.schur_roots(args.lam)
        else:
            roots = classical.tensor_roots(args.dims, args.weights)
        if args.n is not None:
            _emit_report(classical.pure_zip(roots, args.n), roots, args)
        elif args.json:
            print(json.dumps({"roots": list(roots.roots), "scale": str(roots.scale)}))
        else:
            print("roots:", ",".join(map(str, roots.roots)))
        return 0

    for t in _triplets_from(args, parser):
        if cmd == "validate":
            print(t.to_json())
        elif cmd == "rotate":
            print(t.rotate().to_json())
        elif cmd == "dual":
            print(t.dual().to_json())
        elif cmd == "solve":
            alpha = solve_alpha(t)
            if args.json:
                print(alpha.to_json())
            else:
                print("support:", ",".join(map(str, alpha.support)))
                print("alpha:", ",".join(map(str, alpha.on_support())))
                print("P(d) =", alpha.hilbert_poly())
        elif cmd == "betti":
            diagram = betti(t)
            print(diagram.to_json() if args.json else diagram.render())
        elif cmd == "triplet":
            diagrams = triplet_betti(t)
            if args.json:
                print(json.dumps({"diagrams": [json.loads(d.to_json()) for d in diagrams]}))
            else:
                for label, d in zip(("T", "rotate(T)", "rotate^2(T)"), diagrams):
                    print(label + ":")
                    print(d.render())
        elif cmd == "table":
            table = full_table(t, window=args.window)
            print(table.to_json() if args.json else render(table))
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, parser)
    except TripletError as exc:
        print("invalid triplet (%s)" % exc, file=sys.stderr)
        return 2
    except DegenerateSystem as exc:
        print("solver degeneracy: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
