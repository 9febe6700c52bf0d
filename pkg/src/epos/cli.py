"""Command-line entry point: ``epos {csf,classify,catalog,verify,epos}``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from . import __version__
from .catalog import FAMILIES, NAMES, build
from .csf import (
    CsfResult,
    chromatic_poly,
    csf_e,
    csf_p_oracle,
    forbidden_witness,
    strong_e_positivity,
)
from .enumeration import DEFAULT_CAP, CapError
from .graph import Graph, GraphError, edge_text_decode, edge_text_encode, g6_decode
from .recognition import PreconditionError, class_report, residual_2k2_by_vertex
from .symfunc import DegreeError, e_to_p, eval_at_ones, partitions
from .verify import CONJECTURE_MODES, SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- input and output helpers -----------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", action="append", metavar="CODE", help="graph6 string (repeatable)")
    src.add_argument("--edges", metavar="TEXT", help='edge-list text, e.g. "4; 0 1; 0 2; 0 3"')
    src.add_argument("--name", metavar="NAME", help="catalog name or family:args (e.g. k_chain:3,4)")
    src.add_argument("--input", metavar="PATH", help="file of graph6 lines ('-' for stdin)")
    p.add_argument("--format", choices=("json", "text"), default="json")


def _read_graphs(args) -> Iterator[Graph]:
    if args.graph6:
        for code in args.graph6:
            yield g6_decode(code)
    elif args.edges:
        yield edge_text_decode(args.edges)
    elif args.name:
        yield build(args.name)
    else:
        fh = sys.stdin if args.input in (None, "-") else open(args.input)
        try:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    yield g6_decode(line)
        finally:
            if fh is not sys.stdin:
                fh.close()


def _text(obj, indent: str = "") -> Iterable[str]:
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                yield f"{indent}{k}:"
                yield from _text(v, indent + "  ")
            else:
                yield f"{indent}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}"
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                yield f"{indent}-"
                yield from _text(item, indent + "  ")
            else:
                yield f"{indent}- {item}"
    else:
        yield f"{indent}{obj}"


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "text":
        sys.stdout.write("\n".join(_text(obj)) + "\n\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# --- subcommands --------------------------------------------------------------------------------

def _oracle_check(g: Graph) -> dict:
    e = csf_e(g)
    chi_ok = all(eval_at_ones(e, k) == chromatic_poly(g, k) for k in range(1, len(partitions(g.n)) + 2))
    try:
        p_ok = e_to_p(e) == csf_p_oracle(g)
    except ValueError:
        p_ok = None
    return {"chromatic_polynomial": chi_ok, "power_sum": p_ok}


def cmd_csf(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args):
        out = CsfResult.of(g).to_json(args.basis)
        if args.check_oracles:
            checks = _oracle_check(g)
            out["oracles"] = checks
            if False in checks.values():
                status = EXIT_VIOLATION
        _emit(out, args.format)
    return status


def cmd_classify(args) -> int:
    for g in _read_graphs(args):
        out = class_report(g).to_json()
        if args.verbose:
            try:
                out["residual_2k2_by_vertex"] = {str(w): ok for w, ok in residual_2k2_by_vertex(g).items()}
            except PreconditionError:
                out["residual_2k2_by_vertex"] = None
        _emit(out, args.format)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.list:
        for name in NAMES:
            print(name)
        for fam in FAMILIES:
            print(f"{fam}:<args>")
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog needs --name or --list")
    g = build(args.name)
    if args.format == "g6":
        print(g.to_g6())
    elif args.format == "edges":
        print(edge_text_encode(g))
    else:
        _emit({"name": args.name, "n": g.n, "graph6": g.to_g6(), "edges": [list(e) for e in g.edges()]}, "json")
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def cmd_verify(args) -> int:
    try:
        orders = _parse_range(args.n)
    except ValueError:
        raise UsageError(f"bad --n value {args.n!r}; use N, A..B or A,B,C") from None
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    status = EXIT_OK
    counterexamples: list[str] = []
    for n in orders:
        progress = None
        if args.progress:
            def progress(done, total, n=n):
                print(f"\rn={n}: {done}/{total} parents", end="", file=sys.stderr, flush=True)
        report = run_suite(
            args.suite, n, mode=args.mode, jobs=args.jobs, extended=args.extended,
            cap=args.cap, checkpoint=args.checkpoint, progress=progress,
        )
        if args.progress:
            print(file=sys.stderr)
        _emit(report.to_json(timing=args.timing), args.format)
        print(
            f"suite={args.suite} n={n} total={report.total} violations={report.violation_count} "
            f"time={report.wall_time:.2f}s",
            file=sys.stderr,
        )
        counterexamples.extend(report.counterexamples)
        if not report.ok:
            status = EXIT_VIOLATION
    if args.counterexamples:
        with open(args.counterexamples, "w") as fh:
            fh.writelines(code + "\n" for code in counterexamples)
    return status


def cmd_epos(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args):
        res = CsfResult.of(g)
        strong = strong_e_positivity(g)
        fw = forbidden_witness(g)
        out = {
            "graph6": g.to_g6(),
            "n": g.n,
            "e_positive": res.e_positive,
            "negative_terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in res.negative_terms],
            "strongly_e_positive": strong.ok,
            "strong_witness": None if strong.ok else {
                "graph6": strong.witness.to_g6(), "vertices": list(strong.vertices),
            },
            "forbidden_witness": None if fw is None else {"pattern": fw[0], "vertices": list(fw[1])},
        }
        if args.strict and not res.e_positive:
            status = EXIT_VIOLATION
        _emit(out, args.format)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epos",
        description="Chromatic symmetric functions, e-positivity and graph-class checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="{csf,classify,catalog,verify,epos}")

    p = sub.add_parser("csf", help="chromatic symmetric function of each input graph")
    _add_input(p)
    p.add_argument("--basis", choices=("m", "e", "p"), default="e")
    p.add_argument("--check-oracles", action="store_true",
                   help="re-check against the chromatic-polynomial and power-sum oracles")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("classify", help="graph-class flags and structure case")
    _add_input(p)
    p.add_argument("--verbose", action="store_true", help="add per-vertex residual-family results")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="print a named or parameterized graph")
    p.add_argument("--name", metavar="NAME", help="e.g. net, F1, generalized_bull:2,1,1")
    p.add_argument("--format", choices=("g6", "edges", "json"), default="g6")
    p.add_argument("--list", action="store_true", help="list known names and families")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="exhaustive sweep over connected graphs")
    p.add_argument("--suite", choices=SUITES, default="counts")
    p.add_argument("--n", required=True, help="order: N, A..B or A,B,C")
    p.add_argument("--mode", choices=CONJECTURE_MODES, help="conjecture suite mode")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--extended", action="store_true", help="allow n = 9 (and up to --cap)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest order allowed with --extended")
    p.add_argument("--checkpoint", metavar="PATH", help="resumable progress file")
    p.add_argument("--counterexamples", metavar="PATH", help="write violating graphs as graph6")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("epos", help="e-positivity, strong e-positivity and claw/net witness")
    _add_input(p)
    p.add_argument("--strict", action="store_true", help="exit 1 when some graph is not e-positive")
    p.set_defaults(func=cmd_epos)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, CapError, DegreeError, PreconditionError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"epos {args.command}: error: {msg}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
