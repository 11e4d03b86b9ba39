"""Command-line entry point: ``ffoc <subcommand> ...``.

Exit status: 0 on success, 1 when ``verify`` finds discrepancies, 2 on
usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import cobweb
from .exactring import XPoly, parse_rational
from .families import (
    FAMILIES,
    PolySequence,
    basic_sequence,
    closed_sequence,
    sheffer_sequence,
    verify_families,
)
from .fibnum import f_factorial, f_falling, fib, fibonomial
from .operators import DEFAULT_TRUNC, parse_operator


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2) itself
        raise UsageError(message)


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _positive(text: str) -> int:
    v = _natural(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _param(text: str):
    name, sep, value = text.partition("=")
    if name.strip() != "a" or not sep:
        raise argparse.ArgumentTypeError(f"expected a=<rational>, got {text!r}")
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=None)

    p = _Parser(prog="ffoc", description="Finite fibonomial operator calculus toolkit.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    for name, nargs in (("fib", 1), ("ffact", 1), ("falling", 2), ("binom", 2)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("args", type=_natural, nargs=nargs)

    fam = sub.add_parser("family", parents=[common],
                         help="polynomial table for a family name or operator literal")
    fam.add_argument("name")
    basic = sub.add_parser("basic", parents=[common])
    basic.add_argument("op")
    sheffer = sub.add_parser("sheffer", parents=[common])
    sheffer.add_argument("q")
    sheffer.add_argument("s")
    for sp in (fam, basic, sheffer):
        sp.add_argument("--upto", type=_natural, default=8)
        sp.add_argument("--trunc", type=_natural, default=DEFAULT_TRUNC)
        sp.add_argument("--param", type=_param, default=None)
        sp.add_argument("--alpha", type=_natural, default=1)

    for name in ("zeta", "mobius"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--size", type=_positive, default=21)
        sp.add_argument("--style", choices=("full", "paper"), default="full")
        if name == "mobius":
            sp.add_argument("--method", choices=tuple(cobweb.MOBIUS_METHODS), default="recurrence")

    ch = sub.add_parser("chains", parents=[common])
    mode = ch.add_mutually_exclusive_group(required=True)
    mode.add_argument("--root", type=_positive, metavar="N")
    mode.add_argument("--from-level", type=_positive, metavar="K")
    mode.add_argument("--subposets", type=_positive, nargs=2, metavar=("K", "M"))
    ch.add_argument("--to-level", type=_positive, metavar="N")
    ch.add_argument("--cap", type=_positive, default=cobweb.DEFAULT_CHAIN_CAP)

    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("--families", default="all")
    ver.add_argument("--upto", type=_natural, default=8)
    ver.add_argument("--trunc", type=_natural, default=None)
    return p


def _sequence(args) -> PolySequence:
    name = getattr(args, "name", None)
    if args.cmd == "basic":
        name = "basic:" + args.op
    elif args.cmd == "sheffer":
        name = f"sheffer:{args.q}:{args.s}"
    if args.upto > args.trunc:
        raise UsageError(f"--upto {args.upto} exceeds --trunc {args.trunc}")
    if name in FAMILIES:
        return closed_sequence(name, args.upto, args.alpha)
    if name.startswith("basic:"):
        lit = name[len("basic:"):]
        return basic_sequence(parse_operator(lit, args.trunc), args.upto, lit)
    if name.startswith("sheffer:"):
        rest = name[len("sheffer:"):]
        # operator literals may contain ':', so try every split point
        for i, ch in enumerate(rest):
            if ch != ":":
                continue
            try:
                Q = parse_operator(rest[:i], args.trunc)
                S = parse_operator(rest[i + 1:], args.trunc)
            except ValueError:
                continue
            return sheffer_sequence(Q, S, args.upto, rest)
        raise ValueError(f"cannot split sheffer literal {rest!r} into Q:S")
    raise ValueError(f"unknown family {name!r}")


def _emit_sequence(seq: PolySequence, fmt: str, a0) -> str:
    polys: list[XPoly] = [p.subs_a(a0) if a0 is not None else p for p in seq]
    if fmt == "json":
        return json.dumps([{"n": n, "poly": str(p)} for n, p in enumerate(polys)], indent=2)
    if fmt == "csv":
        return "\n".join(f"{n},{p}" for n, p in enumerate(polys))
    return "\n".join(f"{n}: {p}" for n, p in enumerate(polys))


def _emit_matrix(kind: str, m: cobweb.IncidenceFn, style: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "kind": kind,
            "size": m.n,
            "entries": [[cobweb._cell(v) for v in row] for row in m.entries],
        })
    return cobweb.render_matrix(m, style, fmt)


def _emit_number(label: str, value: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({label: str(value)})
    return str(value)


def _dispatch(args) -> tuple[int, str]:
    fmt = args.format
    cmd = args.cmd
    if cmd in ("fib", "ffact", "falling", "binom"):
        a = args.args
        if cmd in ("falling", "binom") and a[1] > a[0]:
            raise UsageError(f"{cmd} needs k <= n, got n={a[0]}, k={a[1]}")
        fn = {"fib": fib, "ffact": f_factorial, "falling": f_falling, "binom": fibonomial}[cmd]
        return 0, _emit_number(cmd, fn(*a), fmt or "text")
    if cmd in ("family", "basic", "sheffer"):
        return 0, _emit_sequence(_sequence(args), fmt or "text", args.param)
    if cmd == "zeta":
        return 0, _emit_matrix("zeta", cobweb.zeta_matrix(args.size), args.style, fmt or "text")
    if cmd == "mobius":
        m = cobweb.mobius(args.size, args.method)
        return 0, _emit_matrix("mobius", m, args.style, fmt or "text")
    if cmd == "chains":
        if args.root is not None:
            return 0, _emit_number("chains", cobweb.count_max_chains_root(args.root, args.cap), fmt or "text")
        if args.from_level is not None:
            if args.to_level is None:
                raise UsageError("--from-level needs --to-level")
            if args.to_level < args.from_level:
                raise UsageError("--to-level must be >= --from-level")
            n = cobweb.count_chains_between(args.from_level, args.to_level, args.cap)
            return 0, _emit_number("chains", n, fmt or "text")
        k, m = args.subposets
        return 0, _emit_number("subposets", cobweb.count_subposets(k, m, args.cap), fmt or "text")
    if cmd == "verify":
        fams = FAMILIES if args.families == "all" else tuple(
            f.strip() for f in args.families.split(",") if f.strip())
        report = verify_families(args.upto, fams, args.trunc)
        fmt = fmt or "json"
        if fmt == "json":
            out = report.to_json()
        else:
            sep = "," if fmt == "csv" else " | "
            out = "\n".join(
                sep.join([e.family, str(e.n), "/".join(e.source_pair), str(e.lhs), str(e.rhs), str(e.diff)])
                for e in report.entries
            )
        return (1 if report else 0), out
    raise UsageError(f"unknown command {cmd!r}")


def run_command(argv: Sequence[str], err: TextIO | None = None) -> tuple[int, str]:
    """Parse and run one command; diagnostics go to ``err`` (stderr)."""
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        return _dispatch(args)
    except (UsageError, ValueError) as exc:
        print(f"ffoc: error: {exc}", file=err)
        return 2, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
