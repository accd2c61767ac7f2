"""Command-line front end.

Exit codes: 0 success/verified, 1 verification failed or graph not
saturated, 2 usage error, 3 input/format error.  Wall time goes to stderr
so that standard output is byte-identical across runs and ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import constructions as cons
from . import enumeration as enum
from . import sweeps
from .graph import GraphFormatError, graph6_decode, graph6_encode, to_edge_list
from .saturation import is_k4_minus_saturated, naive_is_saturated

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 as well
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def _run_report(command: str, params: dict, ok: bool, payload) -> dict:
    return {"command": command, "params": params, "outcome": "pass" if ok else "fail", "payload": payload}


# -- construct -------------------------------------------------------------------


def cmd_construct(args) -> int:
    labels = None
    if args.family == "f":
        if args.a is None or args.b is None:
            raise UsageError("family f needs --a and --b")
        G, labels = cons.construct_f(args.n, args.a, args.b)
    elif args.family == "star-matching":
        G = cons.construct_star_matching(args.n)
    else:
        if args.i is None:
            raise UsageError("family complete-bipartite needs --i")
        G = cons.construct_complete_bipartite(args.n, args.i)

    if args.format == "graph6":
        sys.stdout.write(graph6_encode(G).decode() + "\n")
    elif args.format == "edges":
        sys.stdout.write(to_edge_list(G))
    else:
        out = {"n": G.n, "m": G.num_edges, "graph6": graph6_encode(G).decode(), "edges": [list(e) for e in G.edges()]}
        if labels is not None:
            out["parts"] = labels.to_dict()
        _emit(out)
    return EXIT_OK


# -- check -----------------------------------------------------------------------


def _read_graph6(source: str) -> bytes:
    if source == "-":
        data = sys.stdin.buffer.read()
    elif Path(source).is_file():
        data = Path(source).read_bytes()
    else:
        data = source.encode("utf-8", errors="replace")
    lines = [line for line in data.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("no graph6 input")
    return lines[0]


def cmd_check(args) -> int:
    G = graph6_decode(_read_graph6(args.input))
    if args.mode == "naive":
        verdict = naive_is_saturated(G)
    else:
        verdict = is_k4_minus_saturated(G)
    if args.mode == "both":
        slow = naive_is_saturated(G)
        if not verdict.agrees_with(slow):
            _emit({"agree": False, "fast": verdict.to_dict(), "naive": slow.to_dict()})
            return EXIT_FAIL
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.saturated else EXIT_FAIL


# -- spectrum --------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    if args.sub == "formula":
        _emit(cons.spectrum_formula(args.n).to_dict())
    elif args.sub == "coverage":
        _emit(cons.coverage_set(args.n).to_dict())
    else:
        if args.n > enum.MAX_ENUM_N:
            raise UsageError(f"enumerate is limited to n <= {enum.MAX_ENUM_N}")
        report = enum.enumerate_saturated(
            args.n, dedup=not args.no_dedup, cert_cap=args.cert_cap, workers=args.jobs, checker=args.mode
        )
        sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK


# -- verify ----------------------------------------------------------------------

_RANGE_TARGETS = {
    "lemma1": sweeps.sweep_edge_formula,
    "lemma2": sweeps.sweep_family_saturation,
    "lemma3": sweeps.sweep_coverage,
    "overlap": sweeps.sweep_overlap,
}
_RANGE_DEFAULTS = {"lemma1": (10, 60), "lemma2": (10, 60), "lemma3": (10, 500), "overlap": (11, 500)}


def cmd_verify(args) -> int:
    target, jobs = args.target, args.jobs
    if target in _RANGE_TARGETS:
        lo, hi = _RANGE_DEFAULTS[target]
        lo = args.n_min if args.n_min is not None else lo
        hi = args.n_max if args.n_max is not None else hi
        if lo > hi:
            raise UsageError("--n-min exceeds --n-max")
        if target in ("lemma1", "lemma2") and lo < 5:
            raise UsageError("the family needs n >= 5")
        if target == "lemma3" and lo < cons.SPECTRUM_MIN_N:
            raise UsageError(f"coverage needs n >= {cons.SPECTRUM_MIN_N}")
        params = {"n_min": lo, "n_max": hi}
        check = _RANGE_TARGETS[target](lo, hi, workers=jobs)
    elif target in ("theorem-a", "proof-bound"):
        n = args.n if args.n is not None else enum.MAX_ENUM_N
        if not 1 <= n <= enum.MAX_ENUM_N:
            raise UsageError(f"--n must lie in 1..{enum.MAX_ENUM_N}")
        params = {"n": n}
        fn = enum.verify_bipartite_threshold if target == "theorem-a" else enum.verify_proof_bound
        check = fn(n, workers=jobs)
    else:
        n = args.n if args.n is not None else 6
        if not 1 <= n <= 6:
            raise UsageError("exhaustive checker comparison needs 1 <= --n <= 6")
        params = {"n": n, "samples": args.samples, "seed": args.seed}
        exhaustive = sweeps.exhaustive_checker_equivalence(n, workers=jobs)
        randomized = sweeps.random_checker_equivalence(args.samples, seed=args.seed, workers=jobs)
        check = enum.Check(
            exhaustive.ok and randomized.ok,
            exhaustive.counterexamples + randomized.counterexamples,
            {"exhaustive_graphs": exhaustive.details["graphs"], "random_graphs": randomized.details["graphs"]},
        )
    payload = {"counterexamples": check.counterexamples, "details": check.details}
    _emit(_run_report(f"verify {target}", params, check.ok, payload))
    return EXIT_OK if check.ok else EXIT_FAIL


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_jobs = enum.env_workers()
    parser = _Parser(prog="k4sat", description="K4-minus saturated graphs: constructions, checks, spectra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="emit a graph from one of the families")
    p.add_argument("family", choices=["f", "star-matching", "complete-bipartite"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--format", choices=["graph6", "edges", "json"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="decide K4-minus saturation of a graph6 graph")
    p.add_argument("input", help="graph6 string, a file holding one, or - for stdin")
    p.add_argument("--mode", choices=["fast", "naive", "both"], default="fast")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="closed-form, coverage, or enumerated edge spectrum")
    p.add_argument("sub", choices=["formula", "coverage", "enumerate"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["fast", "naive", "both"], default="fast")
    p.add_argument("--cert-cap", type=int, default=enum.DEFAULT_CERT_CAP)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser(
        "verify",
        help="run a verification sweep",
        description=(
            "lemma1: edge-count formula; lemma2: saturation of the family; "
            "lemma3: interval coverage plus overlap; overlap: overlap inequality only; "
            "theorem-a: bipartite threshold by enumeration; proof-bound: odd-cycle bounds; "
            "checker-equiv: fast vs naive saturation checker"
        ),
    )
    p.add_argument(
        "target", choices=["lemma1", "lemma2", "lemma3", "overlap", "theorem-a", "proof-bound", "checker-equiv"]
    )
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    start = time.perf_counter()
    try:
        code = args.func(args)
    except GraphFormatError as exc:
        print(f"k4sat: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (UsageError, ValueError) as exc:
        print(f"k4sat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wall time: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
