"""Command-line front end: ``gaussalg eval|sample|norms|check-laws|dft``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import mpmath

from . import expr, laws, numeric, periodic
from . import simple as gs
from .errors import DomainError, GenerationExhaustedError, ParseError

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_LAW, EXIT_IO = 0, 1, 2, 3, 4

UNITS_NOTE = (
    "Time is t; signals are written in u = sqrt(pi)*t.  translate(k, x) shifts by "
    "k/sqrt(pi) in t and modulate(k, x) multiplies by exp(2*pi*i*(k/sqrt(pi))*t), "
    "so both amounts are in units of pi^(-1/2)."
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gaussalg",
        description="Exact signal algebra on Gaussian mixtures. " + UNITS_NOTE,
    )
    p.add_argument("--precision", type=int, default=128, metavar="BITS",
                   help="working precision for numeric output (default 128)")
    p.add_argument("--tolerance", type=float, default=1e-12, metavar="T",
                   help="tolerance for numeric evaluation (default 1e-12)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="print the canonical exact form of an expression",
                       description=UNITS_NOTE)
    e.add_argument("expr")

    s = sub.add_parser("sample", help="sample a signal on a uniform grid as CSV (t,re,im)")
    s.add_argument("expr")
    s.add_argument("--from", dest="start", type=_rational, required=True)
    s.add_argument("--to", dest="stop", type=_rational, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--out", help="output file (default: stdout)")

    n = sub.add_parser("norms", help="print the 1, 2, 3 and inf norms and the variance")
    n.add_argument("expr")

    c = sub.add_parser("check-laws", help="run the law catalogue on random inputs")
    c.add_argument("--law", action="append", help="law name (repeatable; default: all)")
    c.add_argument("--cases", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true", help="print a JSON report")
    c.add_argument("--list", action="store_true", help="list law names and exit")

    d = sub.add_parser("dft", help="transform a periodic signal CSV ('# rate=p/q', index,re,im)")
    d.add_argument("file")
    d.add_argument("--synthesis", action="store_true", help="use the +i kernel")
    d.add_argument("--out", help="output file (default: stdout)")
    return p


def _write(text: str, path, stdout):
    if path is None:
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_eval(args, out):
    with mpmath.workprec(args.precision):
        value = expr.evaluate_text(args.expr, args.precision)
        out.write(expr.render_value(value) + "\n")


def _cmd_sample(args, out):
    value = expr.evaluate_text(args.expr, args.precision)
    if not isinstance(value, expr.GaussMix):
        raise DomainError("sample needs a signal expression")
    cfg = numeric.EvalConfig(args.precision, args.tolerance)
    try:
        table = numeric.sample(value, args.start, args.stop, args.count, cfg)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    _write(table.to_csv(), args.out, out)


def _cmd_norms(args, out):
    value = expr.evaluate_text(args.expr, args.precision)
    if not isinstance(value, expr.GaussMix):
        raise DomainError("norms needs a signal expression")
    x = expr.as_simple(value)
    rows = [(f"norm{p}", gs.norm(p, x)) for p in (1, 2, 3, gs.INF)]
    rows.append(("variance", gs.variance(x)))
    with mpmath.workprec(args.precision):
        for label, v in rows:
            out.write(f"{label} = {v} = {mpmath.nstr(v.value(), 20)}\n")


def _cmd_check_laws(args, out):
    if args.list:
        for law in laws.catalogue():
            tag = " (derived)" if law.derived else ""
            out.write(f"{law.name}: {law.statement}{tag}\n")
        return EXIT_OK
    if args.cases < 1:
        raise DomainError("--cases must be at least 1")
    names = args.law
    if names:
        known = {law.name for law in laws.catalogue()}
        unknown = [n for n in names if n not in known]
        if unknown:
            raise DomainError(f"unknown law(s): {', '.join(unknown)}")
    reports = laws.check_all(args.cases, args.seed, names)
    if args.json:
        out.write(laws.reports_json(reports) + "\n")
    else:
        for r in reports:
            out.write(r.line() + "\n")
            for f in r.failures[:3]:
                out.write(f"  case {f.case}: {f.inputs}\n    lhs = {f.lhs}\n    rhs = {f.rhs}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW


def _cmd_dft(args, out):
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    try:
        x = periodic.from_csv(text)
    except ValueError as exc:
        raise DomainError(f"malformed periodic CSV: {exc}") from exc
    y = periodic.dft_synthesis(x) if args.synthesis else periodic.dft_analysis(x)
    _write(periodic.to_csv(y), args.out, out)


COMMANDS = {
    "eval": _cmd_eval,
    "sample": _cmd_sample,
    "norms": _cmd_norms,
    "check-laws": _cmd_check_laws,
    "dft": _cmd_dft,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.precision < 64:
            raise DomainError("--precision must be at least 64 bits")
        if args.tolerance <= 0:
            raise DomainError("--tolerance must be positive")
        code = COMMANDS[args.command](args, stdout)
        return EXIT_OK if code is None else code
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (DomainError, GenerationExhaustedError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
