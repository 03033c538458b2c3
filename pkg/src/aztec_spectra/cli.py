"""Command-line interface: ``aztec-spectra <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from functools import reduce
from math import gcd

from .algebra import CharPoly
from .bipoly import BiPoly
from .cyclotomic import AZTEC_CAP, factor_aztec_count, factor_integer
from .graphs import PARITIES, checkerboard, checkerboard_charpoly
from .spectral import checkerboard_product_spectrum, verify_eq5
from .trees import (
    SweepReport,
    cotree_genfun,
    count_trees,
    tree_genfun,
    verify_corollary2,
    verify_corollary3,
    verify_eq6,
    verify_theorem2,
)

FORMATS = ("json", "csv", "latex", "plain")
SWEEP_CSV_COLUMNS = ("identity", "m", "n", "parity", "method", "count", "pass")
LATEX_PREAMBLE = "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n"
LATEX_END = "\\end{document}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aztec-spectra",
        description="Exact spectra and spanning trees of checkerboard graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    board = argparse.ArgumentParser(add_help=False)
    board.add_argument("-m", type=int, required=True)
    board.add_argument("-n", type=int, required=True)

    parity = argparse.ArgumentParser(add_help=False)
    parity.add_argument("--parity", choices=PARITIES, default="odd")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("graph", parents=[common, board, parity], help="emit a checkerboard graph")

    p = sub.add_parser("charpoly", parents=[common, board, parity],
                       help="characteristic polynomial of EC/OC")
    p.add_argument("--weighted", action="store_true", help="u on positive, v on negative edges")

    p = sub.add_parser("spectrum", parents=[common, board],
                       help="cosine-product spectrum of EC u OC and its exact check")
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("trees", parents=[common, board, parity], help="count spanning trees")
    p.add_argument("--method", choices=("kirchhoff", "theorem2", "both", "enumerate"),
                   default="both")

    p = sub.add_parser("gf", parents=[common, board, parity],
                       help="tree or cotree generating function in u, v")
    p.add_argument("--kind", choices=("trees", "cotrees"), default="trees")

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    for flag in ("--corollary2", "--corollary3", "--theorem2", "--eq5", "--eq6"):
        p.add_argument(flag, action="store_true")
    p.add_argument("--max", type=int, default=7, dest="max_size", metavar="K")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("aztec", parents=[common],
                       help="conjugate-orbit factorisation of the Aztec diamond tree count")
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("factor", parents=[common], help="prime factorisation of an integer")
    p.add_argument("value", type=int)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    cmd = args.command
    if cmd in ("graph", "charpoly", "spectrum", "trees", "gf"):
        if args.m < 1 or args.n < 1:
            parser.error("-m and -n must be >= 1")
    if cmd in ("trees", "gf") and (args.m < 2 or args.n < 2):
        if cmd == "gf" or args.method in ("theorem2", "both"):
            parser.error(f"{cmd} needs -m >= 2 and -n >= 2")
    if cmd == "spectrum" and max(args.m, args.n) > 12:
        parser.error("spectrum supports m, n <= 12")
    if cmd == "verify":
        chosen = [k for k in ("corollary2", "corollary3", "theorem2", "eq5", "eq6") if getattr(args, k)]
        if not chosen:
            parser.error("verify needs at least one of --corollary2 --corollary3 --theorem2 --eq5 --eq6")
        if args.jobs < 1:
            parser.error("--jobs must be >= 1")
        k = args.max_size
        if args.corollary2 and (k < 3 or k % 2 == 0):
            parser.error("--corollary2 needs an odd --max >= 3")
        if args.corollary3 and (k < 2 or k % 2 == 1):
            parser.error("--corollary3 needs an even --max >= 2")
        if (args.theorem2 and k < 2) or ((args.eq5 or args.eq6) and k < 1):
            parser.error("--max too small for the chosen sweep")
        if args.eq5 and k > 12:
            parser.error("--eq5 supports --max <= 12")
    if cmd == "aztec" and not 1 <= args.n <= AZTEC_CAP:
        parser.error(f"aztec needs 1 <= -n <= {AZTEC_CAP}")
    if cmd == "factor" and args.value < 1:
        parser.error("factor needs a positive integer")
    if args.format == "csv" and cmd not in ("trees", "verify", "spectrum"):
        parser.error(f"--format csv is not available for {cmd}")


# rendering -------------------------------------------------------------------

def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _latex_charpoly(p: CharPoly) -> str:
    k = p.zero_multiplicity()
    core = CharPoly(p.coeffs[: len(p.coeffs) - k], p.ring)
    terms = []
    for i, c in enumerate(core.coeffs):
        d = core.degree - i
        if not c:
            continue
        xs = "" if d == 0 else ("x" if d == 1 else f"x^{{{d}}}")
        if hasattr(c, "latex") and not c.is_constant():
            terms.append(_latex_coeff(c) + xs)
        else:
            c = c.constant() if hasattr(c, "constant") else c
            mag = abs(c)
            body = xs if (xs and mag == 1) else f"{mag}{xs}"
            terms.append(("-" if c < 0 else "+") + body)
    inner = "".join(terms).lstrip("+") or "1"
    if k == 0:
        return inner
    xk = "x" if k == 1 else f"x^{{{k}}}"
    return xk if core.degree == 0 else f"{xk}\\bigl({inner}\\bigr)"


def _latex_coeff(c: BiPoly) -> str:
    """Signed coefficient with sign and integer content pulled out: -2(u^2+v^2)."""
    lead = c.sorted_terms()[0][1]
    g = reduce(gcd, (abs(t) for _, t in c)) * (1 if lead > 0 else -1)
    inner = BiPoly({mono: t // g for mono, t in c})
    sign = "+" if g > 0 else "-"
    scale = "" if abs(g) == 1 else str(abs(g))
    if len(inner) == 1:
        return sign + scale + inner.latex()
    return f"{sign}{scale}\\bigl({inner.latex()}\\bigr)"


def _latex_doc(body: str) -> str:
    return LATEX_PREAMBLE + body + LATEX_END


def _sweep_table(report: SweepReport) -> list[dict]:
    """Flatten a sweep into rows with the fixed CSV columns."""
    out = []
    ident = report.identity
    for r in report.rows:
        base = {"identity": ident, "m": r["m"], "n": r["n"], "pass": r["pass"]}
        if ident == "corollary2":
            out.append({**base, "parity": "odd", "method": "kirchhoff", "count": str(r["oc"])})
            out.append({**base, "parity": "even", "method": "kirchhoff", "count": str(r["ec"])})
        elif ident == "corollary3":
            if "ec" in r:
                out.append({**base, "parity": "even", "method": "kirchhoff", "count": str(r["ec"])})
            else:
                out.append({**base, "parity": "", "method": "path_det_mod2",
                            "count": str(r["path_det_mod2"])})
        elif ident == "theorem2":
            out.append({**base, "parity": r["parity"], "method": "kirchhoff", "count": str(r["kirchhoff"])})
            out.append({**base, "parity": r["parity"], "method": "theorem2", "count": str(r["theorem2"])})
        elif ident == "eq6":
            out.append({**base, "parity": "", "method": "exact", "count": ""})
        else:
            out.append({**base, "parity": "", "method": "mp-float",
                        "count": "", "max_rel_err": r.get("max_rel_err")})
    return out


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "pass": "1" if r["pass"] else "0"})
    return buf.getvalue()


def _render_plain_sweep(report: SweepReport) -> str:
    lines = [f"== {report.identity} (max {report.max_size}) =="]
    for r in report.rows:
        status = "ok  " if r["pass"] else "FAIL"
        if report.identity == "corollary2":
            lines.append(f"{status} m={r['m']:<3} n={r['n']:<3} OC={r['oc']}  EC={r['ec']}  ratio={r['ratio']}")
        elif report.identity == "corollary3":
            if "ec" in r:
                lines.append(f"{status} m={r['m']:<3} n={r['n']:<3} EC={r['ec']}  parity={r['ec'] % 2}")
            else:
                lines.append(f"{status} det(adj P_{r['m']}) mod 2 = {r['path_det_mod2']}")
        elif report.identity == "theorem2":
            lines.append(f"{status} m={r['m']:<3} n={r['n']:<3} {r['parity']:<4} "
                         f"kirchhoff={r['kirchhoff']}  theorem2={r['theorem2']}")
        elif report.identity == "eq5":
            lines.append(f"{status} m={r['m']:<3} n={r['n']:<3} max_rel_err={r['max_rel_err']:.3e}")
        else:
            lines.append(f"{status} m={r['m']:<3} n={r['n']:<3} x-power={r['x_power']}")
    failed = report.failures
    lines.append(f"{len(report.rows) - len(failed)}/{len(report.rows)} rows pass")
    if failed:
        lines.append("failing cells: " + ", ".join(f"({r['m']},{r['n']})" for r in failed))
    return "\n".join(lines) + "\n"


def _render_latex_sweep(report: SweepReport) -> str:
    rows = _sweep_table(report)
    body = [f"% {report.identity}, max {report.max_size}",
            "\\begin{tabular}{rrllrc}", "$m$ & $n$ & parity & method & count & pass\\\\", "\\hline"]
    for r in rows:
        body.append(f"{r['m']} & {r['n']} & {r['parity']} & {r['method']} & {r['count']} & "
                    f"{'yes' if r['pass'] else 'no'}\\\\")
    body.append("\\end{tabular}\n")
    return "\n".join(body)


# commands ----------------------------------------------------------------------

def cmd_graph(args) -> tuple[str, int]:
    g = checkerboard(args.m, args.n, args.parity)
    if args.format == "json":
        return _dumps(g.to_json()), 0
    pos, neg = g.sign_counts()
    if args.format == "latex":
        return _latex_doc(f"${g.kind}_{{{g.m},{g.n}}}$: {g.order} vertices, "
                          f"{len(g.edges)} edges ({pos} positive, {neg} negative)\n\n"), 0
    lines = [f"{g.kind}_{{{g.m},{g.n}}}: {g.order} vertices, {len(g.edges)} edges "
             f"({pos} positive, {neg} negative)"]
    for a, b, s in g.edges:
        lines.append(f"  {g.vertices[a]} -- {g.vertices[b]}  {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n", 0


def cmd_charpoly(args) -> tuple[str, int]:
    weighting = "signed-uv" if args.weighted else "unit"
    p = checkerboard_charpoly(args.m, args.n, args.parity, weighting)
    if args.format == "json":
        return _dumps(p.to_json()), 0
    kind = "EC" if args.parity == "even" else "OC"
    if args.format == "latex":
        return _latex_doc(f"$$P({kind}_{{{args.m},{args.n}}};x)={_latex_charpoly(p)}$$\n"), 0
    return f"P({kind}_{{{args.m},{args.n}}}; x) = {p}\n", 0


def cmd_spectrum(args) -> tuple[str, int]:
    spec = checkerboard_product_spectrum(args.m, args.n)
    report = verify_eq5(args.m, args.n, args.tol)
    code = 0 if report.passed else 1
    values = [str(v) for v in spec.values]
    if args.format == "json":
        return _dumps({"m": args.m, "n": args.n, "spectrum": values, "eq5": report.to_json()}), code
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("index,eigenvalue\n")
        for i, v in enumerate(values):
            buf.write(f"{i},{v}\n")
        return buf.getvalue(), code
    if args.format == "latex":
        body = ",\\ ".join(f"{float(v):.12g}" for v in spec.values)
        return _latex_doc(f"Spectrum of $EC\\cup OC$ for $({args.m},{args.n})$: ${body}$\n\n"), code
    lines = [f"{float(v): .15f}" for v in spec.values]
    lines.append(f"eq5: max_rel_err={report.max_rel_err:.3e} {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n", code


def cmd_trees(args) -> tuple[str, int]:
    methods = ["kirchhoff", "theorem2"] if args.method == "both" else [args.method]
    results = [count_trees(args.m, args.n, args.parity, m) for m in methods]
    code = 0 if len({r.count for r in results}) == 1 else 1
    factored = {r.count: (str(factor_integer(r.count)) if r.count > 0 else "0") for r in results}
    if args.format == "json":
        out = [{"m": r.m, "n": r.n, "parity": r.parity, "method": r.method,
                "count": str(r.count), "factored": factored[r.count]} for r in results]
        return _dumps({"results": out, "agree": code == 0}), code
    if args.format == "csv":
        rows = [{"identity": "trees", "m": r.m, "n": r.n, "parity": r.parity, "method": r.method,
                 "count": str(r.count), "pass": code == 0} for r in results]
        return _render_csv(rows), code
    kind = "EC" if args.parity == "even" else "OC"
    if args.format == "latex":
        body = "".join(f"{r.method}: ${r.count} = {factor_integer(r.count).latex() if r.count else 0}$\n\n"
                       for r in results)
        return _latex_doc(f"Spanning trees of ${kind}_{{{args.m},{args.n}}}$\n\n" + body), code
    lines = [f"{kind}_{{{args.m},{args.n}}} {r.method}: {r.count} = {factored[r.count]}" for r in results]
    if code:
        lines.append("MISMATCH between methods")
    return "\n".join(lines) + "\n", code


def cmd_gf(args) -> tuple[str, int]:
    fn = tree_genfun if args.kind == "trees" else cotree_genfun
    gf = fn(args.m, args.n, args.parity)
    if args.format == "json":
        return _dumps(gf.to_json()), 0
    kind = "EC" if args.parity == "even" else "OC"
    if args.format == "latex":
        return _latex_doc(f"$${args.kind}({kind}_{{{args.m},{args.n}}})={gf.gf.latex()}$$\n"), 0
    return f"{args.kind} GF of {kind}_{{{args.m},{args.n}}}: {gf.gf}\n(at u=v=1: {gf.at_one()})\n", 0


def _eq5_sweep(max_size: int, tol: float) -> SweepReport:
    rows = []
    for m in range(1, max_size + 1):
        for n in range(1, max_size + 1):
            r = verify_eq5(m, n, tol)
            rows.append({"m": m, "n": n, "max_rel_err": r.max_rel_err, "pass": r.passed})
    return SweepReport("eq5", max_size, rows)


def cmd_verify(args) -> tuple[str, int]:
    k = args.max_size
    reports = []
    if args.corollary2:
        reports.append(verify_corollary2(k, args.jobs))
    if args.corollary3:
        reports.append(verify_corollary3(k, args.jobs))
    if args.theorem2:
        reports.append(verify_theorem2(k, args.jobs))
    if args.eq5:
        reports.append(_eq5_sweep(k, args.tol))
    if args.eq6:
        reports.append(verify_eq6(k, args.jobs))
    code = 0 if all(r.passed for r in reports) else 1
    for r in reports:
        if r.failures:
            cells = ", ".join(f"({row['m']},{row['n']})" for row in r.failures)
            print(f"{r.identity}: failing cells {cells}", file=sys.stderr)
    if args.format == "json":
        out = [{"identity": r.identity, "max": r.max_size, "pass": r.passed,
                "rows": [{key: (str(v) if isinstance(v, int) and not isinstance(v, bool)
                                and key not in ("m", "n") else v) for key, v in row.items()}
                         for row in r.rows]} for r in reports]
        return _dumps(out), code
    if args.format == "csv":
        return _render_csv([row for r in reports for row in _sweep_table(r)]), code
    if args.format == "latex":
        return _latex_doc("\n".join(_render_latex_sweep(r) for r in reports)), code
    return "".join(_render_plain_sweep(r) for r in reports), code


def cmd_aztec(args) -> tuple[str, int]:
    res = factor_aztec_count(args.n)
    if args.format == "json":
        return _dumps(res.to_json()), 0
    if args.format == "latex":
        return _latex_doc(f"$$4^{{{res.prefactor_exponent}}}\\cdot "
                          + "\\cdot ".join(str(p) for _, p in res.orbits)
                          + f" = {res.factorization.latex()}$$\n"), 0
    n2 = 2 * args.n + 1
    lines = [f"OC_{{{n2},{n2}}}: prefactor 4^{res.prefactor_exponent}"]
    for idx, p in res.orbits:
        tags = " ".join(f"({j},{k},{'+' if s > 0 else '-'})" for j, k, s in idx)
        lines.append(f"  {p:>12}  <- {tags}")
    lines.append(f"total {res.total} = {res.factorization}")
    return "\n".join(lines) + "\n", 0


def cmd_factor(args) -> tuple[str, int]:
    f = factor_integer(args.value)
    if args.format == "json":
        return _dumps({"value": str(f.value), "primes": [[str(p), e] for p, e in f.primes],
                       "probable": f.probable}), 0
    if args.format == "latex":
        return _latex_doc(f"$${f.value} = {f.latex()}$$\n"), 0
    return f"{f.value} = {f}{' (probable primes)' if f.probable else ''}\n", 0


COMMANDS = {
    "graph": cmd_graph,
    "charpoly": cmd_charpoly,
    "spectrum": cmd_spectrum,
    "trees": cmd_trees,
    "gf": cmd_gf,
    "verify": cmd_verify,
    "aztec": cmd_aztec,
    "factor": cmd_factor,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    text, code = COMMANDS[args.command](args)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        (stdout or sys.stdout).write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
