"""Command-line front end.

Exit codes: 0 success, 1 certificate failed, 2 disconnected graph,
3 unreadable input, 4 Groebner resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from .bei import bounds_report, build_gbei, decompose_verify, height_formula, minimal_primes
from .certificates import (
    CertificateFormatError,
    Certificate,
    builtin_catalog,
    format_certificate,
    get_template,
    instantiate,
    read_certificate,
    verify,
)
from .field_poly import (
    DEFAULT_KMAX,
    GroebnerLimitExceeded,
    Ideal,
    Limits,
    MonomialOrder,
    PolynomialSyntaxError,
    format_polynomial,
    height_oracle,
    initial_ideal,
)
from .field_poly.ring import is_prime
from .graph import (
    DisconnectedGraphError,
    GraphFormatError,
    SimpleGraph,
    complete_bipartite,
    complete_graph,
    cut_sets,
    cycle_graph,
    diamond,
    join,
    null_graph,
    path_graph,
    read_graph,
    star_graph,
    with_pendant_paths,
)

EXIT_OK, EXIT_FAIL, EXIT_DISCONNECTED, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3, 4


class InputError(Exception):
    """Bad command-line input; maps to exit code 3."""


# -- graph families -------------------------------------------------------------------


def _join_2k1(p: int) -> SimpleGraph:
    return join(path_graph(p), null_graph(2))[0]


FAMILIES: dict[str, tuple[Callable[[int], SimpleGraph], int, str]] = {
    "path": (path_graph, 2, "path on n vertices"),
    "cycle": (cycle_graph, 3, "cycle on n vertices"),
    "star": (star_graph, 3, "star on n vertices, centre 1"),
    "complete": (complete_graph, 2, "complete graph K_n"),
    "complete_bipartite": (lambda p: complete_bipartite(2, p), 1, "K_{2,p}"),
    "k4_plus_paths": (lambda n: with_pendant_paths(complete_graph(4), n), 6, "K_4 with paths at two vertices, n vertices"),
    "diamond_plus_paths": (lambda n: with_pendant_paths(diamond(), n), 6, "diamond with paths at two vertices, n vertices"),
    "join_2k1": (_join_2k1, 1, "path on p vertices joined with 2K_1"),
}


def family_graph(family: str, param: int) -> SimpleGraph:
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    build, least, _ = FAMILIES[family]
    if param < least:
        raise InputError(f"family {family} needs parameter >= {least}")
    return build(param)


def load_graph(spec: str) -> SimpleGraph:
    """A graph file path, or ``family:param`` for a built-in family."""
    match = re.fullmatch(r"([a-z0-9_]+):(\d+)", spec)
    if match and not Path(spec).exists():
        return family_graph(match.group(1), int(match.group(2)))
    try:
        return read_graph(spec)
    except OSError as exc:
        raise InputError(f"cannot read graph {spec}: {exc.strerror or exc}") from exc


def load_certificate(spec: str, characteristic: int | None) -> Certificate:
    """A certificate file, or ``builtin:<name>`` for a catalog entry."""
    if spec.startswith("builtin:"):
        try:
            template = get_template(spec[len("builtin:"):])
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
        return instantiate(template, characteristic=characteristic or 0)
    try:
        cert = read_certificate(spec)
    except OSError as exc:
        raise InputError(f"cannot read certificate {spec}: {exc.strerror or exc}") from exc
    if characteristic is not None and characteristic != cert.ring.characteristic:
        raise InputError(f"certificate declares char {cert.ring.characteristic}, --char asks for {characteristic}")
    return cert


# -- shared option handling --------------------------------------------------------------


def _limits(args) -> Limits:
    return Limits(max_seconds=args.max_gb_seconds, max_terms=args.max_gb_terms)


def _order(args, nvars: int) -> MonomialOrder:
    return MonomialOrder.lex(nvars) if args.order == "lex" else MonomialOrder.degrevlex(nvars)


def _emit(args, payload, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    report = bounds_report(args.m, g, args.char, use_certificates=not args.no_certificates)
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_cutsets(args) -> int:
    g = load_graph(args.graph)
    sets = cut_sets(g)
    rows = [{"T": list(T), "c": g.c(T), "height": (args.m - 1) * (g.n - g.c(T)) + len(T)} for T in sets]
    text = "".join(f"{{{','.join(map(str, r['T']))}}}  c={r['c']}  ht(P_T)={r['height']}\n" for r in rows)
    text += f"ht = {height_formula(args.m, g)}\n"
    _emit(args, {"m": args.m, "cut_sets": rows, "ht": height_formula(args.m, g)}, text)
    return EXIT_OK


def cmd_ideal(args) -> int:
    g = load_graph(args.graph)
    gbei = build_gbei(args.m, g, args.char)
    order = _order(args, gbei.ring.nvars)
    ideal = Ideal(gbei.ring, gbei.ideal.generators, order)
    gens = [format_polynomial(f, order) for f in ideal.generators]
    payload = {"m": args.m, "char": args.char, "order": args.order, "mu": gbei.mu, "generators": gens}
    text = f"J_{args.m}(G), char {args.char}, {gbei.mu} generators:\n" + "".join(f"  {s}\n" for s in gens)
    if args.gb:
        limits = _limits(args)
        gb = [format_polynomial(f, order) for f in ideal.groebner(limits)]
        lead = initial_ideal(ideal, limits=limits)
        ht = height_oracle(ideal, limits) if ideal.generators else 0
        payload.update({"groebner_basis": gb, "initial_ideal_size": len(lead), "height": ht})
        text += f"reduced Groebner basis ({args.order}, {len(gb)} elements):\n" + "".join(f"  {s}\n" for s in gb)
        text += f"height from initial ideal: {ht}\n"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph(args.graph)
    result = decompose_verify(args.m, g, args.char, _limits(args))
    primes = minimal_primes(args.m, g, args.char)
    payload = {
        "m": args.m,
        "char": args.char,
        "status": result.status,
        "cut_sets": [list(T) for T in result.cut_sets],
        "heights": [p.height for p in primes],
        "detail": result.detail,
    }
    text = "".join(f"P_{{{','.join(map(str, p.T))}}}  ht {p.height}\n" for p in primes)
    text += f"intersection equals J_{args.m}(G): {result.status}"
    text += f" ({result.detail})\n" if result.detail else "\n"
    _emit(args, payload, text)
    if result.status == "not_attempted":
        return EXIT_CAP
    return EXIT_OK if result.ok else EXIT_FAIL


def _cert_text(report) -> str:
    lines = [f"certificate {report.name}: {report.status} (witness size {report.size})"]
    if report.detail:
        lines.append(f"  {report.detail}")
    for c in report.claims:
        found = "-" if c.found is None else str(c.found)
        lines.append(f"  claim {c.polynomial}  claimed {c.claimed}  found {found}  {'ok' if c.ok else 'FAIL'}")
    lines += [f"  {f}" for f in report.failures() if not f.startswith("claim ")]
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cert = load_certificate(args.certificate, args.char)
    if args.order == "lex":
        target = Ideal(cert.ring, cert.target.generators, MonomialOrder.lex(cert.ring.nvars))
        cert = Certificate(cert.name, cert.ring, target, cert.witness, cert.claims, cert.source, cert.graph)
    report = verify(cert, args.kmax, _limits(args))
    _emit(args, report.to_dict(), _cert_text(report))
    if report.status == "not_attempted":
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    rows = []
    for t in builtin_catalog():
        row = {"name": t.name, "vertices": t.k, "size": t.size, "description": t.description}
        if args.verify:
            row["status"] = verify(instantiate(t, characteristic=args.char or 0), args.kmax, _limits(args)).status
        rows.append(row)
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        for t in builtin_catalog():
            cert = instantiate(t, characteristic=args.char or 0)
            (out / f"{t.name}.cert").write_text(format_certificate(cert), encoding="utf-8")
    text = "".join(
        f"{r['name']:<22} size {r['size']}  {r['description']}" + (f"  [{r['status']}]" if "status" in r else "") + "\n"
        for r in rows
    )
    _emit(args, rows, text)
    if args.verify and any(r["status"] != "pass" for r in rows):
        return EXIT_CAP if any(r["status"] == "not_attempted" for r in rows) else EXIT_FAIL
    return EXIT_OK


SWEEP_COLUMNS = (
    "family", "param", "n", "edges", "m", "char", "ht", "mu",
    "pd_lo", "pd_hi", "cd_lo", "cd_hi", "ara_lo", "ara_hi", "ci", "aci", "cci", "stci",
)


def sweep_row(family: str, param: int, m: int, char: int, decompose: bool = False, limits: Limits | None = None) -> dict:
    g = family_graph(family, param)
    r = bounds_report(m, g, char)
    row = {"family": family, "param": param, "n": g.n, "edges": len(g.edges), "m": m, "char": char,
           "ht": r.ht, "mu": r.mu}
    for k in ("pd", "cd", "ara"):
        row[f"{k}_lo"], row[f"{k}_hi"] = r.bound(k)
    row.update(r.flags)
    if decompose:
        row["decompose"] = decompose_verify(m, g, char, limits or Limits()).status
    return row


def run_sweep(family: str, params: Sequence[int], m: int, char: int, decompose: bool = False,
              limits: Limits | None = None, workers: int = 4) -> list[dict]:
    for p in params:
        family_graph(family, p)  # validate everything before any output
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(lambda p: sweep_row(family, p, m, char, decompose, limits), params))


def format_sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    cols = list(SWEEP_COLUMNS) + (["decompose"] if rows and "decompose" in rows[0] else [])
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args) -> int:
    if args.start > args.stop:
        raise InputError("--from must not exceed --to")
    rows = run_sweep(args.family, range(args.start, args.stop + 1), args.m, args.char, args.decompose,
                     _limits(args), args.workers)
    if args.json:
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    else:
        sys.stdout.write(format_sweep_csv(rows))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _m_value(text: str) -> int:
    m = int(text)
    if m < 2:
        raise argparse.ArgumentTypeError("m must be at least 2")
    return m


def _char_value(text: str) -> int:
    c = int(text)
    if c != 0 and not is_prime(c):
        raise argparse.ArgumentTypeError("char must be 0 or a prime")
    return c


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=_m_value, default=2, help="rows of the variable matrix (default 2)")
    common.add_argument("--char", type=_char_value, default=None, help="field characteristic: 0 or a prime")
    common.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--kmax", type=_positive, default=DEFAULT_KMAX, help="largest exponent tried per claim")
    common.add_argument("--max-gb-seconds", type=float, default=None, help="wall-clock cap per Groebner basis")
    common.add_argument("--max-gb-terms", type=int, default=None, help="cap on basis size and polynomial length")

    parser = _Parser(prog="gbei", description="Generalized binomial edge ideals: bounds, decompositions, certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="bounds report for J_m(G)")
    p.add_argument("graph", help="graph file or family:param (e.g. cycle:4)")
    p.add_argument("--no-certificates", action="store_true", help="skip catalog-composition ara bounds")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cutsets", parents=[common], help="cut sets and prime heights")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cutsets)

    p = sub.add_parser("ideal", parents=[common], help="generators of J_m(G), optionally its Groebner basis")
    p.add_argument("graph")
    p.add_argument("--gb", action="store_true", help="also compute the reduced Groebner basis and height")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("decompose", parents=[common], help="check J_m(G) = intersection of its minimal primes")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="verify a radical certificate")
    p.add_argument("certificate", help="certificate file or builtin:<name>")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list built-in certificates")
    p.add_argument("--verify", action="store_true", help="verify each entry")
    p.add_argument("--write", metavar="DIR", help="write every entry as a certificate file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("sweep", parents=[common], help="one report row per family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--decompose", action="store_true", help="add a decomposition check column")
    p.add_argument("--workers", type=_positive, default=4)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.char is None and args.command != "verify":
        args.char = 0
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (InputError, GraphFormatError, CertificateFormatError, PolynomialSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GroebnerLimitExceeded as exc:
        print(f"not attempted: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
