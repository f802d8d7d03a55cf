"""Command-line entry point: ``sigmax <subcommand> ...``.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections.abc import Iterable

from . import bounds, constructions, enumeration
from .graph import GraphError
from .graph6 import parse_graph6, write_graph6
from .invariants import report
from .transformations import hill_climb

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_USAGE = 0, 1, 2

REPORT_FIELDS = ["order", "size", "cyclomatic", "sigma", "albertson", "total_irregularity",
                 "first_zagreb", "max_degree", "degree_sequence", "connected"]

# CSV schema v1 for `verify`; the third column is `k` for theorem1 and `m` otherwise.
VERIFY_CSV_COLUMNS = ["n", "k", "classes", "bound", "max", "unique", "matches"]


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4..8"`` -> 4..8 inclusive, ``"3"`` -> [3], ``"1,4"`` -> [1, 4]."""
    values: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use e.g. 4..8 or 3 or 1,4") from None
    return values


def _read_lines(path: str | None) -> Iterable[tuple[int, str]]:
    stream = open(path) if path and path != "-" else sys.stdin
    try:
        for lineno, line in enumerate(stream, 1):
            if line.strip():
                yield lineno, line.strip()
    finally:
        if stream is not sys.stdin:
            stream.close()


def _parse_line(lineno: int, text: str):
    try:
        return parse_graph6(text)
    except GraphError as exc:
        raise UsageError(f"line {lineno}: {exc}") from None


def _emit_reports(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for row in rows:
            writer.writerow([" ".join(map(str, row[f])) if f == "degree_sequence" else row.get(f, "")
                             for f in REPORT_FIELDS])
    else:
        for row in rows:
            out.write(" ".join(f"{key}={value}" for key, value in row.items()) + "\n")


def cmd_invariants(args, out) -> int:
    rows = [report(_parse_line(lineno, text)).to_dict() for lineno, text in _read_lines(args.input)]
    _emit_reports(rows, args.format, out)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    family = constructions.Family(args.family)
    spec = constructions.ExtremalFamilySpec(family, args.n, args.param)
    g = spec.build()
    text = write_graph6(g)
    if args.format == "json":
        doc = {"family": family.value, "n": args.n, "graph6": text}
        if args.param is not None:
            doc["param"] = args.param
        if args.report:
            doc["report"] = report(g).to_dict()
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(text + "\n")
        if args.report:
            _emit_reports([report(g).to_dict()], args.format, out)
    return EXIT_OK


def cmd_bound(args, out) -> int:
    try:
        spec = bounds.lookup_bound(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if len(args.params) != len(spec.parameters):
        raise UsageError(f"{spec.name.value} takes parameters {', '.join(spec.parameters)}")
    value = spec.evaluate(*args.params)
    if args.format == "json":
        out.write(json.dumps({"name": spec.name.name,
                              "parameters": dict(zip(spec.parameters, args.params)),
                              "value": value}) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["name", *spec.parameters, "value"])
        writer.writerow([spec.name.name, *args.params, value])
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _verify_jobs(args) -> list[tuple[int, int]]:
    claim = enumeration.Claim(args.claim)
    second = args.k if claim is enumeration.Claim.THEOREM1 else args.m
    jobs = []
    for n in args.n:
        if not 1 <= n <= args.cap or args.cap > enumeration.HARD_CAP:
            raise UsageError(f"order {n} exceeds the enumeration cap {args.cap}")
        if claim is enumeration.Claim.THEOREM1:
            default = range(0, n - 1) if n >= 4 else range(0)
        elif claim is enumeration.Claim.LEMMA1:
            default = range(0, n)
        else:
            default = range(1, n)
        values = default if second is None else second
        for p in values:
            if p not in default:
                raise UsageError(f"parameter {p} is outside the domain of {claim.value} at n={n}")
            jobs.append((n, p))
    return jobs


def cmd_verify(args, out) -> int:
    if args.claim == "theorem1" and args.m is not None or args.claim != "theorem1" and args.k is not None:
        raise UsageError("use --k with theorem1 and --m with lemma1/lemma3")
    run = {"theorem1": enumeration.verify_theorem1,
           "lemma1": enumeration.verify_lemma1,
           "lemma3": enumeration.verify_lemma3}[args.claim]
    certs = [run(n, p, cap=args.cap, workers=args.workers) for n, p in _verify_jobs(args)]
    if args.format == "json":
        json.dump([c.to_dict(stable=args.stable) for c in certs], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        header = list(VERIFY_CSV_COLUMNS)
        if args.claim != "theorem1":
            header[1] = "m"
        writer.writerow(header)
        for c in certs:
            n, p = c.parameters.values()
            writer.writerow([n, p, c.graphs_examined, c.bound_value, c.max_found,
                             str(c.unique).lower(), str(c.matches_paper).lower()])
    else:
        for c in certs:
            params = " ".join(f"{k}={v}" for k, v in c.parameters.items())
            out.write(f"{c.claim.value} {params} classes={c.graphs_examined} bound={c.bound_value} "
                      f"max={c.max_found} unique={c.unique} matches={c.matches_paper}\n")
    return EXIT_OK if all(c.matches_paper for c in certs) else EXIT_CLAIM_FAILED


def cmd_hillclimb(args, out) -> int:
    traces = []
    for lineno, text in _read_lines(args.input):
        g = _parse_line(lineno, text)
        try:
            traces.append(hill_climb(g))
        except GraphError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    for trace in traces:
        if args.format == "json":
            out.write(json.dumps(trace.to_dict()) + "\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["step", "graph6", "sigma", "v", "vp", "moved"])
            for i, s in enumerate(trace.steps, 1):
                writer.writerow([i, s.graph6, s.sigma, s.v, s.vp, " ".join(map(str, s.moved))])
        else:
            for s in trace.steps:
                out.write(f"{s.graph6} sigma={s.sigma} v={s.v} vp={s.vp} moved={list(s.moved)}\n")
            out.write(f"final {write_graph6(trace.final_graph)} max_degree={trace.final.max_degree}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cap", type=int, default=enumeration.DEFAULT_CAP)
    common.add_argument("--seed", type=int, default=0,
                        help="reserved; every subcommand is deterministic")
    common.add_argument("--report", action="store_true")
    common.add_argument("--stable", action="store_true",
                        help="drop wall-clock fields so output is byte-reproducible")

    parser = argparse.ArgumentParser(prog="sigmax", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="index report per graph6 line")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", parents=[common], help="build a named graph")
    p.add_argument("family", choices=[f.value for f in constructions.Family])
    p.add_argument("n", type=int)
    p.add_argument("param", type=int, nargs="?", help="k for h-graph, m for star-plus-isolated")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("name", help="lemma1 (m), lemma3 (m) or theorem1 (n k)")
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="exhaustive certification sweep")
    p.add_argument("claim", choices=[c.value for c in enumeration.Claim])
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--m", type=parse_range)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hillclimb", parents=[common], help="climb to a dominating vertex")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.set_defaults(func=cmd_hillclimb)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"sigmax {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
