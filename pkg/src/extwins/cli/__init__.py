"""Command-line front end: ``extwins <group> <command> [options]``."""
from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from ..textformat import ParseError
from . import commands
from .report import Report


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--digits", type=int, default=12, help="decimal digits for irrational values")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")


def _surface(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s", type=_frac, help="base scalar s (F_n has s = 2/n)")
    p.add_argument("--genus", type=int)
    p.add_argument("--n", type=int, help="twist of the ruled surface")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extwins",
                                     description="Extremal twins: exact checks and scans.")
    groups = parser.add_subparsers(dest="group", required=True)

    hz = groups.add_parser("hirzebruch", help="admissible metrics on Hirzebruch surfaces")
    hz_cmds = hz.add_subparsers(dest="command", required=True)
    for name, fn, needs_a in (("twin", commands.hirzebruch_twin, True),
                              ("conic", commands.hirzebruch_conic, False),
                              ("em", commands.hirzebruch_em, False),
                              ("cscs", commands.hirzebruch_cscs, False)):
        p = hz_cmds.add_parser(name)
        _surface(p)
        p.add_argument("--x", type=_frac, required=True)
        if needs_a:
            p.add_argument("--a", type=_frac, required=True)
        _common(p)
        p.set_defaults(run=fn)
    p = hz_cmds.add_parser("scan", help="twin pairs over a grid of Kahler classes")
    _surface(p)
    p.add_argument("--range", default="1/10:9/10", help="x range lo:hi")
    p.add_argument("--step", type=_frac, default=Fraction(1, 10))
    p.add_argument("--a-range", default="-3/4:3/4")
    p.add_argument("--a-step", type=_frac, default=Fraction(1, 4))
    _common(p)
    p.set_defaults(run=commands.hirzebruch_scan)

    gn = groups.add_parser("genus", help="ruled surfaces over higher-genus curves")
    gn_cmds = gn.add_subparsers(dest="command", required=True)
    p = gn_cmds.add_parser("twin")
    p.add_argument("--genus", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--x", type=_frac, required=True)
    _common(p)
    p.set_defaults(run=commands.genus_twin_cmd)
    p = gn_cmds.add_parser("join", help="class and twist of a join from its weights")
    p.add_argument("--genus", type=int)
    for name in ("w1", "w2", "l1"):
        p.add_argument(f"--{name}", type=int)
    _common(p)
    p.set_defaults(run=commands.genus_join_cmd)

    pt = groups.add_parser("polytope", help="twin vertex systems on moment polytopes")
    pt_cmds = pt.add_subparsers(dest="command", required=True)
    p = pt_cmds.add_parser("check")
    p.add_argument("file", type=Path)
    _common(p)
    p.set_defaults(run=commands.polytope_check)

    qd = groups.add_parser("quad", help="toric quadrilaterals")
    qd_cmds = qd.add_subparsers(dest="command", required=True)
    for name, fn in (("fit", commands.quad_fit), ("twin", commands.quad_twin)):
        p = qd_cmds.add_parser(name)
        p.add_argument("file", type=Path)
        _common(p)
        p.set_defaults(run=fn)
    p = qd_cmds.add_parser("cscs-family")
    for name in ("alpha1", "alpha2", "C"):
        p.add_argument(f"--{name}", type=_frac)
    _common(p)
    p.set_defaults(run=commands.quad_cscs_family)
    p = qd_cmds.add_parser("lebrun")
    p.add_argument("--alpha", type=_frac)
    p.add_argument("--beta", type=_frac)
    p.add_argument("--c", type=_frac)
    _common(p)
    p.set_defaults(run=commands.quad_lebrun)

    vf = groups.add_parser("verify", help="run the acceptance checks")
    vf.add_argument("selector", nargs="?", default="all",
                    help="all, s3, s4, s5, s6 or a single item number")
    _common(vf)
    vf.set_defaults(run=commands.verify_cmd)
    return parser


_NEGATIVE = re.compile(r"^-\d+(/\d+)?(:-?\d+(/\d+)?)?$")


def _glue_negatives(argv: list[str]) -> list[str]:
    """argparse reads "-1/4" as an option; bind it to the preceding flag."""
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negatives(sys.argv[1:] if argv is None else list(argv)))
    if args.digits < 1:
        parser.error("--digits must be at least 1")
    start = time.perf_counter()
    try:
        result = args.run(args, args.digits)
    except (ParseError, ValueError, ArithmeticError, OSError) as exc:
        print(f"extwins: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if not isinstance(result, Report):
        result, code = result
    text = result.render(args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code
