"""Command-line harness: generate / solve / verify / sweep.

All randomness flows from one 64-bit seed (flag, or RAINBOW_SEED when the
flag is absent).  Reports embed a run manifest; with SOURCE_DATE_EPOCH set
the output bytes are a pure function of the command line and input files.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import re
import sys
import time
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .errors import RainbowError
from .generators import Family, GeneratorSpec
from .graph import (ColorClassKind, ColoredMultigraph, RainbowMatching,
                    load_instance, save_instance)
from .seeding import derive_seed
from .solvers import (AugmentConfig, SamplingConfig, SolveReport,
                      alspach_solve, augment, exact_max_rainbow,
                      expander_matching, greedy_maximal, sampling_solve)
from .verification import SWEEP_FAMILIES, THEOREM_IDS, check, sweep_surplus

_DURATION_RE = re.compile(r"^(\d+)(s|ms)$")

# instance-file kind tag per family
_FAMILY_KIND = {
    Family.LATIN_CAYLEY: ColorClassKind.MATCHING,
    Family.LATIN_RANDOM: ColorClassKind.MATCHING,
    Family.AB_BIPARTITE: ColorClassKind.MATCHING,
    Family.AB_GENERAL: ColorClassKind.MATCHING,
    Family.TWO_K4: ColorClassKind.MATCHING,
    Family.GRINBLAT: ColorClassKind.CLIQUE_UNION,
    Family.TRIANGLE_LB: ColorClassKind.CLIQUE_UNION,
    Family.MULTIPLICITY_LB: ColorClassKind.CLIQUE_UNION,
    Family.CIRCULANT_TWO_FACTOR: ColorClassKind.TWO_FACTOR,
    Family.SYMMETRIC_LATIN_TWO_FACTOR: ColorClassKind.TWO_FACTOR,
}


def parse_duration(text: str) -> float:
    """`<int><s|ms>` to seconds."""
    m = _DURATION_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"duration {text!r} must match <int>s or <int>ms")
    value = int(m.group(1))
    return value / 1000.0 if m.group(2) == "ms" else float(value)


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = (datetime.fromtimestamp(int(epoch), tz=timezone.utc)
            if epoch else datetime.now(tz=timezone.utc))
    return when.isoformat(timespec="seconds")


def _deterministic_run() -> bool:
    return "SOURCE_DATE_EPOCH" in os.environ


def build_manifest(argv: list[str], seed: int,
                   input_path: Optional[str] = None) -> dict:
    digest = None
    if input_path is not None:
        with open(input_path, "rb") as f:
            digest = hashlib.sha256(f.read()).hexdigest()
    return {
        "command_line": " ".join(argv),
        "tool_version": __version__,
        "global_seed": seed,
        "timestamp": _timestamp(),
        "input_digest": digest,
    }


def _csv_rows(doc: dict) -> tuple[list[str], list[list]]:
    if "cells" in doc:  # theorem check
        header = ["n", "trial", "pass", "margin", "instance_seed", "solver_seed"]
        return header, [[c[k] for k in header] for c in doc["cells"]]
    if "rows" in doc:  # sweep table
        header = ["family", "n", "surplus", "trials", "success_fraction"]
        return header, [[r[k] for k in header] for r in doc["rows"]]
    header = ["size", "defect", "seed", "elapsed_ms", "optimal"]
    return header, [[doc[k] for k in header]]


def emit(doc: dict, fmt: str, path: Optional[str]) -> None:
    """Serialize a report deterministically; files end with a newline."""
    if fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header, rows = _csv_rows(doc)
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("RAINBOW_SEED")
    if env is not None:
        return int(env)
    return 0


def _resolve_p(token: str, graph: ColoredMultigraph) -> float:
    if token == "auto":
        return min(0.5, 2.0 * graph.n_colors ** -0.25)
    p = float(token)
    if not (0 < p < 1):
        raise ValueError("p must lie strictly between 0 and 1 (or be 'auto')")
    return p


def _report_from_matching(matching: RainbowMatching, graph: ColoredMultigraph,
                          phase: str, seed: int, elapsed: float,
                          optimal: Optional[bool] = None) -> SolveReport:
    return SolveReport(matching=matching, n_colors=graph.n_colors,
                       phase_log=[(phase, 0, len(matching))], elapsed=elapsed,
                       seeds_used=[seed], optimal=optimal)


def _cmd_generate(args: argparse.Namespace, argv: list[str]) -> int:
    family = Family(args.family)
    spec = GeneratorSpec(family=family, n=args.n, v=args.v, extra=args.extra,
                         m=args.m, d=args.d, seed=_resolve_seed(args))
    graph = spec.generate()
    save_instance(graph, args.out, _FAMILY_KIND[family])
    return 0


def _cmd_solve(args: argparse.Namespace, argv: list[str]) -> int:
    seed = _resolve_seed(args)
    graph, _ = load_instance(args.instance)
    start = time.perf_counter()

    if args.solver == "greedy":
        matching = greedy_maximal(graph, "rare_color_first", derive_seed(seed, "greedy"))
        report = _report_from_matching(matching, graph, "greedy", seed,
                                       time.perf_counter() - start)
    elif args.solver == "augment":
        matching = greedy_maximal(graph, "rare_color_first", derive_seed(seed, "greedy"))
        cfg = AugmentConfig(max_depth=args.depth, seed=derive_seed(seed, "augment"))
        matching = augment(graph, matching, cfg)
        report = _report_from_matching(matching, graph, "greedy+augment", seed,
                                       time.perf_counter() - start)
    elif args.solver == "sampling":
        cfg = SamplingConfig(p=_resolve_p(args.p, graph), seed=seed,
                             max_resamples=args.resamples,
                             augment=AugmentConfig(max_depth=args.depth))
        report = sampling_solve(graph, cfg)
    elif args.solver == "alspach":
        report = alspach_solve(graph, seed=seed, max_resamples=args.resamples)
    elif args.solver == "lemma41":
        ids = expander_matching(graph)
        matching = RainbowMatching(pairs=[(eid, graph.edges[eid][2]) for eid in ids])
        report = _report_from_matching(matching, graph, "expander", seed,
                                       time.perf_counter() - start)
    else:  # exact
        limit = args.time_limit
        size, matching, certified = exact_max_rainbow(graph, limit)
        report = _report_from_matching(matching, graph, "exact", seed,
                                       time.perf_counter() - start,
                                       optimal=certified)

    doc = report.to_json_dict(graph)
    doc["seed"] = seed
    if _deterministic_run():
        doc["elapsed_ms"] = 0
    doc["manifest"] = build_manifest(argv, seed, args.instance)
    emit(doc, args.format, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace, argv: list[str]) -> int:
    seed = _resolve_seed(args)
    result = check(args.theorem, args.n, args.trials, seed)
    doc = result.to_json_dict()
    doc["manifest"] = build_manifest(argv, seed)
    emit(doc, args.format, args.out)
    return 0 if result.passed else 1


def _cmd_sweep(args: argparse.Namespace, argv: list[str]) -> int:
    seed = _resolve_seed(args)
    rows = sweep_surplus(args.family, args.n, args.surplus, args.trials, seed)
    doc = {"family": args.family, "n": args.n, "trials": args.trials,
           "rows": rows, "manifest": build_manifest(argv, seed)}
    emit(doc, args.format, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowmatch",
        description="Rainbow-matching generators, solvers, and checkers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=None,
                       help="global seed (default: $RAINBOW_SEED or 0)")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker cap; results are order-canonical either way")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    g = sub.add_parser("generate", help="write a seeded instance file")
    g.add_argument("--family", required=True,
                   choices=[f.value for f in Family])
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--v", type=int, default=0)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--d", type=int, default=0)
    g.add_argument("--extra", type=int, default=0)
    g.add_argument("-o", "--out", required=True)
    common(g)

    s = sub.add_parser("solve", help="run a solver on an instance file")
    s.add_argument("--solver", required=True,
                   choices=["greedy", "augment", "sampling", "alspach",
                            "lemma41", "exact"])
    s.add_argument("--p", default="auto", help="sampling probability or 'auto'")
    s.add_argument("--depth", type=int, default=9)
    s.add_argument("--resamples", type=int, default=5)
    s.add_argument("--time-limit", type=parse_duration, default=None,
                   metavar="DUR", help="e.g. 30s or 1500ms (exact solver)")
    s.add_argument("-o", "--out", default=None)
    s.add_argument("instance")
    common(s)

    v = sub.add_parser("verify", help="run a theorem checker")
    v.add_argument("--theorem", required=True, choices=list(THEOREM_IDS))
    v.add_argument("--n", type=_parse_int_list, default=None,
                   help="comma-separated values (default: desk-scale table)")
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("-o", "--out", default=None)
    common(v)

    w = sub.add_parser("sweep", help="success fraction across surplus values")
    w.add_argument("--family", required=True, choices=list(SWEEP_FAMILIES))
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--surplus", type=_parse_int_list, required=True)
    w.add_argument("--trials", type=int, default=20)
    w.add_argument("-o", "--out", default=None)
    common(w)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 0
        return 0 if code == 0 else 2
    handlers = {"generate": _cmd_generate, "solve": _cmd_solve,
                "verify": _cmd_verify, "sweep": _cmd_sweep}
    try:
        return handlers[args.command](args, ["rainbowmatch"] + list(argv))
    except (RainbowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
