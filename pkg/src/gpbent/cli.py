"""Command-line front end.

Exit codes:

    0  success
    2  bad command-line usage
    3  input file could not be parsed
    4  function is not generalized partially bent (decompose)
    5  enumeration cap exceeded (census)
    6  internal invariant failure, including engine disagreement
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import zn
from .analysis import (
    InvariantViolation,
    NotGPB,
    SubgroupViolation,
    analyze,
    tables,
)
from .corpus import DEFAULT_CAP, CapExceeded, census
from .decompose import decompose, prime_case_check, verify_decomposition, is_prime
from .fileformat import ParseError, cyc_to_json, dumps_report, parse_function_file
from .transforms import chrestenson_spectrum, fast_chrestenson

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NOT_GPB = 4
EXIT_CAP = 5
EXIT_INTERNAL = 6


class EngineMismatch(InvariantViolation):
    pass


def _load(path: str):
    with open(path) as fh:
        return parse_function_file(fh.read()).function()


def _spectrum(f, args):
    spec = chrestenson_spectrum(f) if args.engine == "naive" else fast_chrestenson(f)
    if args.cross_check:
        other = fast_chrestenson(f) if args.engine == "naive" else chrestenson_spectrum(f)
        if other != spec:
            raise EngineMismatch("naive and fast spectra disagree")
    return spec


def _vec(i, N, n):
    return list(zn.idx_to_vec(i, N, n))


def _table_json(table, scale):
    return [
        {"index": i, "point": _vec(i, table.N, table.n), **cyc_to_json(v, scale)}
        for i, v in enumerate(table)
    ]


def cmd_spectrum(f, args) -> dict:
    spec = _spectrum(f, args)
    return {
        "command": "spectrum",
        "N": f.N,
        "n": f.n,
        "engine": args.engine,
        "cross_checked": bool(args.cross_check),
        "spectrum": _table_json(spec, f.size),
    }


def _level_text(level, N, n) -> str | None:
    if level is None or not level.is_integer():
        return None
    return str(Fraction(level.coeffs[0], N ** (2 * n)))


def cmd_analyze(f, args) -> dict:
    report = analyze(f, args.engine)
    if args.cross_check:
        other = "naive" if args.engine == "fast" else "fast"
        if analyze(f, other) != report:
            raise EngineMismatch("naive and fast analyses disagree")
    spec, auto = tables(f, args.engine)
    N, n = f.N, f.n
    return {
        "command": "analyze",
        "N": N,
        "n": n,
        "N_C": report.N_C,
        "N_S": report.N_S,
        "product": report.product,
        "is_gbent": report.is_gbent,
        "is_gpb": report.is_gpb,
        "is_pure": report.is_pure if report.is_gpb else None,
        "t": list(report.t) if report.t is not None else None,
        "E": [_vec(i, N, n) for i in report.E] if report.is_gpb else None,
        "E_perp": [_vec(i, N, n) for i in report.E_perp] if report.is_gpb else None,
        "m": list(report.m) if report.is_gpb else None,
        "spectral_level": list(report.spectral_level.coeffs) if report.spectral_level else None,
        "spectral_level_normalized": _level_text(report.spectral_level, N, n),
        "spectrum": _table_json(spec, f.size),
        "autocorrelation": _table_json(auto, 1),
    }


def cmd_decompose(f, args) -> dict:
    D = decompose(f, args.engine)
    verified = verify_decomposition(f, D)
    if not verified:
        raise InvariantViolation("decomposition failed verification")
    return {
        "command": "decompose",
        "N": f.N,
        "n": f.n,
        "A_total": [list(r) for r in D.A_total],
        "m": D.m,
        "affine_coeffs": list(D.affine_coeffs),
        "constant": D.constant,
        "residual": {"n": D.residual.n, "table": D.residual.table.tolist()},
        "verified": verified,
        "residual_gbent": prime_case_check(D) if is_prime(f.N) else None,
    }


def cmd_census(N, n, args) -> dict:
    c = census(N, n, cap=args.cap)
    return {"command": "census", **c.as_dict()}


# -- human rendering -----------------------------------------------------------


def _fmt_approx(a):
    re_, im = a
    return f"{re_:+.6g}{im:+.6g}i"


def _render_table(rows, title, out):
    out.append(f"{title}:")
    out.append(f"  {'point':<16} {'exact coeffs':<24} {'/scale':>8}  approx (normalized)")
    for r in rows:
        out.append(
            f"  {str(tuple(r['point'])):<16} {str(r['exact']):<24} {r['scale']:>8}  "
            f"{_fmt_approx(r['approx'])}"
        )


def render_human(rep: dict, show_tables: bool = False) -> str:
    out = []
    cmd = rep["command"]
    if cmd == "census":
        out.append(f"census over all functions Z_{rep['N']}^{rep['n']} -> Z_{rep['N']}")
        for key in ("total", "gbent", "gpb", "pure_gpb", "affine", "other", "inequality_violations"):
            out.append(f"  {key:<22} {rep[key]}")
        return "\n".join(out) + "\n"
    out.append(f"N={rep['N']} n={rep['n']}")
    if cmd == "spectrum":
        _render_table(rep["spectrum"], "spectrum N^n*S(w)", out)
    elif cmd == "analyze":
        for key in ("N_C", "N_S", "product", "is_gbent", "is_gpb", "is_pure", "t", "m",
                    "spectral_level_normalized"):
            out.append(f"  {key:<26} {rep[key]}")
        if rep["E"] is not None:
            out.append(f"  {'E':<26} {[tuple(v) for v in rep['E']]}")
        if show_tables:
            _render_table(rep["spectrum"], "spectrum N^n*S(w)", out)
            _render_table(rep["autocorrelation"], "autocorrelation C(s)", out)
    elif cmd == "decompose":
        out.append(f"  peeled coordinates m       {rep['m']}")
        out.append(f"  A_total                    {rep['A_total']}")
        out.append(f"  affine coefficients        {rep['affine_coeffs']}")
        out.append(f"  constant                   {rep['constant']}")
        out.append(f"  residual (n={rep['residual']['n']})            {rep['residual']['table']}")
        out.append(f"  verified                   {rep['verified']}")
        if rep["residual_gbent"] is not None:
            out.append(f"  residual generalized bent  {rep['residual_gbent']}")
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpbent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--engine", choices=("fast", "naive"), default="fast")
        p.add_argument("--cross-check", action="store_true",
                       help="also run the other engine and fail on disagreement")

    for name, helptext in (("spectrum", "Chrestenson spectrum"),
                           ("analyze", "classification report"),
                           ("decompose", "affine + pure decomposition")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        common(p)
        if name == "analyze":
            p.add_argument("--tables", action="store_true", help="print full tables")

    p = sub.add_parser("census", help="classify every function on Z_N^n")
    p.add_argument("N", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of functions")
    common(p)
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Run the CLI; returns ``(exit_code, stdout, stderr)``."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "census":
            if args.N < 2 or args.n < 0:
                return EXIT_USAGE, "", "error: need N >= 2 and n >= 0\n"
            rep = cmd_census(args.N, args.n, args)
        else:
            f = _load(args.file)
            rep = {"spectrum": cmd_spectrum, "analyze": cmd_analyze,
                   "decompose": cmd_decompose}[args.command](f, args)
    except ParseError as exc:
        return EXIT_PARSE, "", f"parse error: {exc}\n"
    except OSError as exc:
        return EXIT_PARSE, "", f"cannot read input: {exc}\n"
    except NotGPB as exc:
        return EXIT_NOT_GPB, "", f"not generalized partially bent: {exc}\n"
    except CapExceeded as exc:
        return EXIT_CAP, "", f"cap exceeded: {exc}; raise --cap or pick a smaller N, n\n"
    except (InvariantViolation, SubgroupViolation, ArithmeticError) as exc:
        return EXIT_INTERNAL, "", f"internal error: {exc}\n"
    if args.json:
        return EXIT_OK, dumps_report(rep), ""
    return EXIT_OK, render_human(rep, getattr(args, "tables", False)), ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
