"""Command-line front end for the verification workbench.

Subcommands: verify (claim certificates), lemma (exhaustive and sampled
sweeps), enumerate (graph6 corpora), contains (containment queries),
search (exhaustive good-graph search), classify (tree family lookup).

Exit codes are never conflated: 0 means every requested check passed
(or the query completed), 1 means a verified finding — a failed witness
or an in-hypothesis counterexample — and 2 means a usage or parameter
error.  Identical invocations produce byte-identical reports; pass
``--timings`` to trade that for wall-clock fields.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from contextlib import contextmanager
from typing import Any, Iterator, Optional, Sequence, TextIO

from . import reports
from .catalog import (
    CatalogError,
    THEOREM_IDS,
    claims_by_id,
    condition_holds,
    resolve_witness_t,
)
from .containment import contains_cycle, contains_tree, contains_wheel, subgraph_iso
from .enumeration import EnumFilter, enumerate_graphs
from .families import (
    Cycle,
    JoinedStars,
    SpecParameterError,
    Spider,
    Star,
    Wheel,
    build,
    classify_tree,
    format_spec,
    parse_spec,
)
from .graph import CapacityError, Graph, Graph6ParseError, graph6_decode, graph6_encode
from .verify import (
    CertificateTask,
    DEFAULT_SEARCH_BUDGET,
    VerifyError,
    run_certificates,
    search_good,
    task_sort_key,
    verify_bondy,
    verify_claim,
    verify_cr1,
    verify_lemma1,
    verify_lemma2_sampled,
    verify_lemma3,
)

JOBS_ENV = "RAMSEY_WB_JOBS"

_TREE_SPECS = (Star, Spider, JoinedStars)


class UsageError(ValueError):
    """Bad arguments or parameters; maps to exit code 2."""


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def parse_n_range(text: str) -> range:
    """Parse "9" or "9..15" into an inclusive range."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"cannot parse range {text!r} (expected N or LO..HI)") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def resolve_jobs(value: Optional[int]) -> int:
    """--jobs flag, else RAMSEY_WB_JOBS, else available cores."""
    if value is None:
        env = os.environ.get(JOBS_ENV)
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                raise UsageError(f"{JOBS_ENV}={env!r} is not an integer") from None
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise UsageError(f"jobs must be >= 1, got {value}")
    return value


def parse_graph_arg(text: str) -> Graph:
    """Accept a family spec string, a ``g6:`` literal, a graph6 file
    path, or a bare graph6 literal, in that order."""
    if text.startswith("g6:"):
        return graph6_decode(text[3:])
    try:
        return build(parse_spec(text))
    except SpecParameterError:
        pass
    if os.path.exists(text):
        with open(text, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return graph6_decode(line)
        raise UsageError(f"file {text!r} contains no graph6 line")
    try:
        return graph6_decode(text)
    except Graph6ParseError:
        raise UsageError(
            f"cannot read graph {text!r}: not a family spec, g6: literal, "
            "file path, or bare graph6 string") from None


@contextmanager
def _out_stream(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(objs: list[Any], args, timings: Optional[list[Optional[float]]] = None) -> None:
    with _out_stream(args.out) as stream:
        if args.format == "records":
            reports.write_records(objs, stream, timings if args.timings else None)
        else:
            reports.write_text(objs, stream)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _verify_tasks_all(max_n: int) -> list[CertificateTask]:
    tasks: list[CertificateTask] = []
    for tid in THEOREM_IDS:
        if tid == "rsn2t":
            for t in (1, 2):
                tasks.extend((tid, n, 8, t, None)
                             for n in range(5, max_n + 1)
                             if condition_holds(tid, n, m=8, t=t))
        elif tid == "n2variant":
            tasks.extend((tid, n, 8, None, "corrected")
                         for n in range(5, max_n + 1)
                         if condition_holds(tid, n, m=8))
        else:
            tasks.extend((tid, n, 8, None, None)
                         for n in range(5, max_n + 1)
                         if condition_holds(tid, n, m=8))
    return tasks


def _cmd_verify(args) -> int:
    jobs = resolve_jobs(args.jobs)
    selectors = [s for s in (args.theorem, args.claim) if s is not None]
    if args.all + len(selectors) != 1:
        raise UsageError("pick exactly one of --theorem, --claim, --all")

    if args.all:
        tasks = _verify_tasks_all(args.max_n)
        certs, timings = _timed_certificates(tasks, jobs, args.timings)
    elif args.theorem is not None:
        if args.n is None:
            raise UsageError("--theorem needs --n (a value or LO..HI range)")
        ns = [n for n in parse_n_range(args.n)
              if condition_holds(args.theorem, n, m=args.m, t=args.t)]
        if not ns:
            raise UsageError(
                f"no valid n for {args.theorem} in {args.n} (m={args.m}"
                + (f", t={args.t})" if args.t is not None else ")"))
        tasks = [(args.theorem, n, args.m, args.t, args.variant) for n in ns]
        certs, timings = _timed_certificates(tasks, jobs, args.timings)
    else:
        if args.n is None:
            raise UsageError("--claim needs --n (a value or LO..HI range)")
        claim = claims_by_id().get(args.claim)
        if claim is None:
            raise UsageError(f"unknown claim id {args.claim!r} "
                             f"(known: {', '.join(sorted(claims_by_id()))})")
        if claim.witness_theorem is None:
            raise CatalogError(
                f"claim {claim.claim_id!r} is recorded-only (source "
                f"{claim.source!r}) and has no witness construction to check")
        if claim.witness_t == "t" and args.t is None:
            raise CatalogError(f"claim {claim.claim_id!r} needs an explicit t")
        effective_m = claim.wheel_m if claim.wheel_m is not None else args.m
        cond_t = (args.t if claim.witness_t == "t"
                  else resolve_witness_t(claim, effective_m))
        ns = [n for n in parse_n_range(args.n)
              if condition_holds(claim.witness_theorem, n, m=effective_m, t=cond_t)]
        if not ns:
            raise UsageError(f"no valid n for claim {args.claim} in {args.n}")
        certs, timings = [], []
        for n in ns:
            start = time.perf_counter()
            certs.append(verify_claim(claim, n, m=args.m, t=args.t))
            timings.append(time.perf_counter() - start)

    _emit(certs, args, timings)
    return 0 if all(c.passed for c in certs) else 1


def _timed_certificates(tasks, jobs, want_timings):
    if want_timings:
        certs, timings = [], []
        for task in sorted(tasks, key=task_sort_key):
            start = time.perf_counter()
            certs.extend(run_certificates([task], jobs=1))
            timings.append(time.perf_counter() - start)
        return certs, timings
    return run_certificates(tasks, jobs=jobs), None


_LEMMA_IDS = ("1", "2", "3", "cr1", "bondy")


def _cmd_lemma(args) -> int:
    lemma_id = args.id if args.id is not None else args.lemma
    if lemma_id is None:
        raise UsageError(f"pick a lemma: {', '.join(_LEMMA_IDS)}")
    if lemma_id not in _LEMMA_IDS:
        raise UsageError(f"unknown lemma {lemma_id!r} (known: {', '.join(_LEMMA_IDS)})")
    if args.n is None:
        raise UsageError("lemma sweeps need --n (a value or LO..HI range)")
    ns = parse_n_range(args.n)

    results: list[Any] = []
    timings: list[Optional[float]] = []
    for n in ns:
        start = time.perf_counter()
        if lemma_id == "1":
            results.append(verify_lemma1(n))
        elif lemma_id == "3":
            results.append(verify_lemma3(n))
        elif lemma_id == "2":
            results.append(verify_lemma2_sampled(n, seed=args.seed, count=args.count))
        elif lemma_id == "cr1":
            results.append(verify_cr1(n, seed=args.seed, count=args.count))
        else:
            results.append(verify_bondy(n))
        timings.append(time.perf_counter() - start)

    _emit(results, args, timings)
    finding = any(
        r.counterexamples and getattr(r, "in_hypothesis", True) for r in results)
    return 1 if finding else 0


def _cmd_enumerate(args) -> int:
    filt = EnumFilter(order=args.order,
                      min_degree=args.min_degree,
                      max_degree=args.max_degree)
    filt.validate()
    count = 0
    with _out_stream(args.out) as stream:
        for g in enumerate_graphs(filt):
            stream.write(graph6_encode(g))
            stream.write("\n")
            count += 1
    if args.out is not None:
        print(f"{count} graphs -> {args.out}")
    return 0


def _cmd_contains(args) -> int:
    host = parse_graph_arg(args.host)
    pattern_spec = None
    try:
        pattern_spec = parse_spec(args.pattern)
    except SpecParameterError:
        pass

    rec: dict[str, Any] = {"record": "containment", "host_order": host.n}
    if pattern_spec is not None and isinstance(pattern_spec, _TREE_SPECS):
        rec["pattern"] = format_spec(pattern_spec)
        emb = contains_tree(host, pattern_spec)
        rec["present"] = emb is not None
        rec["witness"] = None if emb is None else list(emb)
    elif isinstance(pattern_spec, Wheel):
        rec["pattern"] = format_spec(pattern_spec)
        emb = contains_wheel(host, pattern_spec.m)
        rec["present"] = emb is not None
        rec["hub"] = None if emb is None else emb[0]
        rec["rim"] = None if emb is None else list(emb[1:])
    elif isinstance(pattern_spec, Cycle):
        rec["pattern"] = format_spec(pattern_spec)
        emb = contains_cycle(host, pattern_spec.n)
        rec["present"] = emb is not None
        rec["witness"] = None if emb is None else list(emb)
    else:
        pattern = (build(pattern_spec) if pattern_spec is not None
                   else parse_graph_arg(args.pattern))
        rec["pattern"] = (format_spec(pattern_spec) if pattern_spec is not None
                          else f"g6:{graph6_encode(pattern)}")
        emb = subgraph_iso(host, pattern)
        rec["present"] = emb is not None
        rec["witness"] = None if emb is None else list(emb)

    if args.format == "records":
        _emit([rec], args)
    else:
        with _out_stream(args.out) as stream:
            if rec["present"]:
                if "hub" in rec:
                    stream.write(f"present: {rec['pattern']} hub {rec['hub']}, "
                                 f"rim {tuple(rec['rim'])}\n")
                else:
                    stream.write(f"present: {rec['pattern']} at "
                                 f"vertices {tuple(rec['witness'])}\n")
            else:
                stream.write(f"absent: no {rec['pattern']} in host "
                             f"(order {host.n})\n")
    return 0


def _cmd_search(args) -> int:
    spec = parse_spec(args.tree)
    if not isinstance(spec, _TREE_SPECS):
        raise UsageError(f"--tree wants a tree family spec, got {args.tree!r}")
    outcome = search_good(spec, args.m, args.order,
                          budget_nodes=args.budget, seed=args.seed)
    _emit([outcome], args)
    return 0


def _cmd_classify(args) -> int:
    g = parse_graph_arg(args.graph)
    try:
        spec = classify_tree(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rec = {
        "record": "classify",
        "order": g.n,
        "max_degree": max(g.degrees(), default=0),
        "family": None if spec is None else format_spec(spec),
    }
    if args.format == "records":
        _emit([rec], args)
    else:
        with _out_stream(args.out) as stream:
            if spec is None:
                stream.write(f"unclassified: tree of order {g.n} with max degree "
                             f"{rec['max_degree']} matches no catalog family\n")
            else:
                stream.write(f"{rec['family']}\n")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewheel",
        description="Exact verification workbench for tree-versus-wheel "
                    "Ramsey bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        if out:
            p.add_argument("--out", metavar="PATH", help="write report to file")
            p.add_argument("--format", choices=reports.FORMATS, default="text",
                           help="report format (default: text)")
            p.add_argument("--timings", action="store_true",
                           help="include wall-clock fields (breaks byte-identical output)")

    p = sub.add_parser("verify", help="check witness certificates for catalog claims")
    p.add_argument("--theorem", metavar="ID", help=f"one of: {', '.join(THEOREM_IDS)}")
    p.add_argument("--claim", metavar="ID", help="a single catalog claim id")
    p.add_argument("--all", action="store_true",
                   help="every witnessed claim at m=8 (skips the deliberately "
                        "failing literal recipe)")
    p.add_argument("--n", metavar="N|LO..HI", help="order parameter range")
    p.add_argument("--max-n", type=int, default=25, metavar="N",
                   help="upper n for --all (default: 25)")
    p.add_argument("--m", type=int, default=8, help="wheel order (default: 8)")
    p.add_argument("--t", type=int, default=None, help="leg-length parameter")
    var = p.add_mutually_exclusive_group()
    var.add_argument("--literal", dest="variant", action="store_const",
                     const="literal", help="use the as-stated two-part recipe")
    var.add_argument("--corrected", dest="variant", action="store_const",
                     const="corrected", help="use the corrected recipe (default)")
    p.set_defaults(variant=None)
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default: ${JOBS_ENV} or cores)")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemma", help="sweep a lemma for counterexamples")
    p.add_argument("id", nargs="?", choices=_LEMMA_IDS, help="lemma to sweep")
    p.add_argument("--lemma", dest="lemma", choices=_LEMMA_IDS,
                   help="alternative to the positional id")
    p.add_argument("--n", metavar="N|LO..HI", help="order parameter range")
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default: 0)")
    p.add_argument("--count", type=int, default=10000,
                   help="samples per n for sampled sweeps (default: 10000)")
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default: ${JOBS_ENV} or cores)")
    common(p)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("enumerate", help="write one graph6 line per isomorphism class")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--out", metavar="PATH", help="write graph6 lines to file")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("contains", help="decide one containment question")
    p.add_argument("--host", required=True,
                   help="family spec, g6: literal, file, or graph6 string")
    p.add_argument("--pattern", required=True,
                   help="family spec (trees, W(m), C(k), ...) or graph input")
    common(p)
    p.set_defaults(func=_cmd_contains)

    p = sub.add_parser("search", help="exhaustive pruned search for a good graph")
    p.add_argument("--tree", required=True, help="tree family spec, e.g. 'S(5;1,1)'")
    p.add_argument("--m", type=int, default=8, help="wheel order (default: 8)")
    p.add_argument("--order", type=int, required=True, help="host order to search")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                   help="node budget (default: 10^8)")
    p.add_argument("--seed", type=int, default=0,
                   help="recorded in the report (exploration is deterministic)")
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", help="name the tree family of a graph")
    p.add_argument("graph", help="family spec, g6: literal, file, or graph6 string")
    common(p)
    p.set_defaults(func=_cmd_classify)

    return parser


_USAGE_ERRORS = (
    UsageError,
    CatalogError,
    VerifyError,
    SpecParameterError,
    Graph6ParseError,
    CapacityError,
)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
