"""Command-line front end.

Exit status: 0 on success or a passing sweep, 1 when a sweep finds a
mismatch, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .borel import BorelSpec, closure
from .chordal import find_induced_cycle, is_chordal, to_dot
from .classify import predict_freiman
from .fiber import analytic_spread, freiman_report
from .monomial import GenSet, MonomialParseError, format_monomial, ideal_power, parse_monomial_list
from .sorting import is_sortable, sorted_graph
from .verify import THEOREMS, SweepSpec, golden_examples, verify_theorem

GRAPH_COMMANDS = {"sorted-graph", "chordal"}


class UsageError(Exception):
    pass


def _add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gens", required=True,
                   help='comma-separated monomials, e.g. "x1*x3^2,x2^2*x4" or "[1,0,2]"')
    p.add_argument("--n", type=int, default=None, help="number of variables (default: largest index)")
    p.add_argument("--k", type=int, default=None, help="take the k-Borel closure instead of the Borel closure")
    p.add_argument("--as-is", action="store_true",
                   help="use the monomials as the generating set itself, without any closure")


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freiman", description="Freiman tests for Borel-type monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (
        ("closure", "minimal generators of B(...) or B_k(...)"),
        ("mu", "number of minimal generators"),
        ("spread", "analytic spread"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_ideal_args(p)
        _add_format(p, ("text", "json", "dot"))

    p = sub.add_parser("power", help="minimal generators of the ideal's power")
    _add_ideal_args(p)
    p.add_argument("--power", type=int, default=2)
    _add_format(p, ("text", "json", "dot"))

    p = sub.add_parser("freiman", help="brute-force Freiman report")
    _add_ideal_args(p)
    p.add_argument("--ell-override", type=int, default=None)
    _add_format(p, ("text", "json", "dot"))

    for name, help_ in (("sorted-graph", "the sorted graph"), ("chordal", "chordality with witness")):
        p = sub.add_parser(name, help=help_)
        _add_ideal_args(p)
        _add_format(p, ("text", "json", "dot"))

    p = sub.add_parser("classify", help="closed-form prediction")
    _add_ideal_args(p)
    _add_format(p, ("text", "json", "dot"))

    p = sub.add_parser("verify", help="run an exhaustive sweep")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, default=100_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")
    _add_format(p, ("text", "json", "dot"))

    p = sub.add_parser("golden", help="check the fixed worked examples")
    p.add_argument("--no-timing", action="store_true")
    _add_format(p, ("text", "json", "dot"))
    return parser


def _ideal(args) -> tuple[GenSet, BorelSpec | None]:
    try:
        gens = parse_monomial_list(args.gens, args.n)
    except (MonomialParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.as_is:
            if args.k is not None:
                raise UsageError("--as-is and --k are mutually exclusive")
            return GenSet(gens), None
        spec = BorelSpec(tuple(gens), k=args.k, n=args.n)
        return closure(spec), spec
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _strs(G) -> list[str]:
    return [format_monomial(u) for u in G]


def _emit(data: dict, fmt: str, text: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=False)
    return text


def _cmd_closure(args):
    G, spec = _ideal(args)
    data = {"ideal": str(spec) if spec else "as-is", "n": G.n, "mu": len(G), "gens": _strs(G)}
    return 0, _emit(data, args.format, "\n".join(data["gens"]))


def _cmd_mu(args):
    G, _ = _ideal(args)
    return 0, _emit({"mu": len(G)}, args.format, f"mu = {len(G)}")


def _cmd_spread(args):
    G, _ = _ideal(args)
    ell, method = analytic_spread(G)
    return 0, _emit({"ell": ell, "ell_method": method}, args.format, f"ell = {ell} ({method})")


def _cmd_power(args):
    if args.power < 1:
        raise UsageError("--power must be >= 1")
    G, _ = _ideal(args)
    P = ideal_power(G, args.power)
    data = {"power": args.power, "mu": len(P), "gens": _strs(P)}
    return 0, _emit(data, args.format, f"mu(I^{args.power}) = {len(P)}\n" + "\n".join(data["gens"]))


def _cmd_freiman(args):
    G, _ = _ideal(args)
    r = freiman_report(G, args.ell_override)
    data = r.to_dict()
    text = (f"mu = {r.mu}\nell = {r.ell} ({r.ell_method})\nmu_sq = {r.mu_sq}\n"
            f"defect = {r.defect}\nfreiman = {str(r.freiman).lower()}")
    return 0, _emit(data, args.format, text)


def _cmd_sorted_graph(args):
    G, _ = _ideal(args)
    sg = sorted_graph(G)
    g = sg.to_ugraph()
    if args.format == "dot":
        return 0, to_dot(g).rstrip("\n")
    sortable, _ = is_sortable(G)
    data = {"vertices": _strs(G), "edges": [list(e) for e in sorted(sg.edges)], "sortable": sortable}
    text = "\n".join(f"{G[a]} -- {G[b]}" for a, b in sorted(sg.edges))
    return 0, _emit(data, args.format, text)


def _cmd_chordal(args):
    G, _ = _ideal(args)
    g = sorted_graph(G).to_ugraph()
    if args.format == "dot":
        return 0, to_dot(g).rstrip("\n")
    res = is_chordal(g)
    sortable, _ = is_sortable(G)
    witness = None if res.chordal else [str(G[v]) for v in find_induced_cycle(g)]
    data = {
        "chordal": res.chordal,
        "sortable": sortable,
        "order": [str(G[v]) for v in res.order] if res.chordal else None,
        "witness": witness,
    }
    if res.chordal:
        text = "chordal\nelimination order: " + ", ".join(data["order"])
    else:
        text = f"not chordal\ninduced {len(witness)}-cycle: " + " -- ".join(witness)
    return 0, _emit(data, args.format, text)


def _cmd_classify(args):
    try:
        gens = parse_monomial_list(args.gens, args.n)
        spec = BorelSpec(tuple(gens), k=args.k, n=args.n)
    except (MonomialParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.as_is:
        raise UsageError("classify works on Borel generators; --as-is is not supported")
    v = predict_freiman(spec)
    data = dict(v.to_dict(), n=spec.n)
    pred = "unknown" if v.freiman_predicted is None else str(v.freiman_predicted).lower()
    text = f"family = {v.family}\nfreiman_predicted = {pred}\nclause = {v.matched_clause}\nn = {spec.n}"
    return 0, _emit(data, args.format, text)


def _report_out(report, args):
    data = report.to_dict()
    if args.no_timing:
        data["elapsed_ms"] = 0
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.theorem}: {status} ({report.instances_checked} instances, "
             f"{len(report.mismatches)} mismatches, {data['elapsed_ms']} ms)"]
    lines += [f"  mismatch: {json.dumps(m)}" for m in report.mismatches]
    lines += [f"  note: {json.dumps(m)}" for m in report.informational]
    if report.truncated:
        lines.append("  truncated at the instance limit")
    return (0 if report.passed else 1), _emit(data, args.format, "\n".join(lines))


def _cmd_verify(args):
    try:
        spec = SweepSpec(args.theorem, args.n_max, d=args.d, k=args.k, limit=args.limit, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report_out(verify_theorem(spec), args)


def _cmd_golden(args):
    return _report_out(golden_examples(), args)


COMMANDS = {
    "closure": _cmd_closure,
    "mu": _cmd_mu,
    "spread": _cmd_spread,
    "power": _cmd_power,
    "freiman": _cmd_freiman,
    "sorted-graph": _cmd_sorted_graph,
    "chordal": _cmd_chordal,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "golden": _cmd_golden,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format == "dot" and args.command not in GRAPH_COMMANDS:
            raise UsageError(f"--format dot is only available for {', '.join(sorted(GRAPH_COMMANDS))}")
        code, out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"freiman {args.command}: error: {exc}", file=stderr)
        return 2
    stdout.write(out + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
