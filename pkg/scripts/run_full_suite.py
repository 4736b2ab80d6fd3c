#!/usr/bin/env python3
"""Run the whole verification battery and archive the reports.

Produces one ``.jsonl`` record stream plus a human-readable ``.txt``
rendering per section, under an output directory:

    certificates-m8     every fixed-wheel theorem instance with 5 <= n <= max-n
    certificates-gen    general-m constructions (smallest three n per shape),
                        including the as-stated variant that is expected to fail
    sweeps              exhaustive lemma sweeps and pancyclicity checks
    sampled             seeded adversarial sweeps at order 2n
    search              exhaustive witness searches at small orders

Exit status is 1 when anything unexpected failed (the as-stated recipe
variant is expected to fail and does not count), 0 otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from treewheel.catalog import THEOREM_IDS, condition_holds, smallest_valid_ns
from treewheel.families import Spider
from treewheel.reports import write_records, write_text
from treewheel.verify import (
    run_certificates,
    search_good,
    verify_bondy,
    verify_cr1,
    verify_lemma1,
    verify_lemma2_sampled,
    verify_lemma3,
)

FIXED_WHEEL = ("th1", "th2", "th3", "th4", "th5", "th6")
GENERAL_M = (8, 10, 12, 14)


def emit(outdir: Path, name: str, objs, timings=None) -> None:
    with open(outdir / f"{name}.jsonl", "w", encoding="utf-8") as fh:
        write_records(objs, fh, timings=timings)
    with open(outdir / f"{name}.txt", "w", encoding="utf-8") as fh:
        write_text(objs, fh)


def fixed_wheel_tasks(max_n: int):
    return [
        (tid, n, 8, None, None)
        for tid in FIXED_WHEEL
        for n in range(5, max_n + 1)
        if condition_holds(tid, n)
    ]


def general_m_tasks(per_shape: int):
    tasks = []
    for m in GENERAL_M:
        for n in smallest_valid_ns("lb", per_shape, m=m):
            tasks.append(("lb", n, m, None, None))
        for n in smallest_valid_ns("n2variant", per_shape, m=m):
            tasks.append(("n2variant", n, m, None, "corrected"))
            tasks.append(("n2variant", n, m, None, "literal"))
        for t in (1, 2):
            for n in smallest_valid_ns("rsn2t", per_shape, m=m, t=t):
                tasks.append(("rsn2t", n, m, t, None))
    return tasks


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("reports"),
                        help="output directory (default: ./reports)")
    parser.add_argument("--max-n", type=int, default=25,
                        help="largest n for the fixed-wheel table (default 25)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for certificate batches")
    parser.add_argument("--samples", type=int, default=10_000,
                        help="sample count per sampled sweep (default 10000)")
    parser.add_argument("--seed", type=int, default=1,
                        help="seed for the sampled sweeps (default 1)")
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    bad = 0

    certs, secs = timed(run_certificates, fixed_wheel_tasks(args.max_n),
                        jobs=args.jobs)
    emit(args.out, "certificates-m8", certs)
    failed = [c for c in certs if not c.passed]
    bad += len(failed)
    print(f"certificates-m8: {len(certs)} instances, "
          f"{len(failed)} failed  ({secs:.1f}s)")

    certs, secs = timed(run_certificates, general_m_tasks(3), jobs=args.jobs)
    emit(args.out, "certificates-gen", certs)
    surprises = [c for c in certs
                 if c.passed == (c.variant == "literal")]
    bad += len(surprises)
    print(f"certificates-gen: {len(certs)} instances, "
          f"{len(surprises)} surprises  ({secs:.1f}s)")

    sweeps = []
    timings = []
    for fn, ns in ((verify_lemma1, range(5, 10)),
                   (verify_lemma3, range(8, 11)),
                   (verify_bondy, range(3, 10))):
        for n in ns:
            report, t = timed(fn, n)
            sweeps.append(report)
            timings.append(t)
    emit(args.out, "sweeps", sweeps, timings=timings)
    broken = [r for r in sweeps
              if getattr(r, "in_hypothesis", True) and not r.holds]
    bad += len(broken)
    print(f"sweeps: {len(sweeps)} orders, {len(broken)} violations "
          f"({sum(timings):.1f}s)")

    sampled = []
    timings = []
    for fn, ns in ((verify_lemma2_sampled, (8, 9)), (verify_cr1, (7, 9))):
        for n in ns:
            report, t = timed(fn, n, seed=args.seed, count=args.samples)
            sampled.append(report)
            timings.append(t)
    emit(args.out, "sampled", sampled, timings=timings)
    broken = [r for r in sampled if not r.holds or not r.hypothesis_hits]
    bad += len(broken)
    print(f"sampled: {len(sampled)} sweeps, {len(broken)} violations "
          f"({sum(timings):.1f}s)")

    searches = []
    timings = []
    for order in (8, 9, 10, 11):
        outcome, t = timed(search_good, Spider(5, 1, 1), 8, order)
        searches.append(outcome)
        timings.append(t)
    emit(args.out, "search", searches, timings=timings)
    print(f"search: {[s.status for s in searches]} ({sum(timings):.1f}s)")

    print(f"reports written to {args.out}/")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
