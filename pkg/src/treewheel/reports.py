"""Deterministic report rendering: line-delimited records and text tables.

Every run of the same command with the same arguments must produce
byte-identical output, so records are JSON with sorted keys, no
timestamps, and timings omitted unless explicitly requested.  The first
record of a stream is always a ``meta`` line carrying the tool version
and the catalog hash, which together pin exactly which claim ledger a
certificate refers to.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any, Iterable, Optional, TextIO

from .catalog import catalog_hash
from .verify import (
    BondyReport,
    BoundCertificate,
    SampledReport,
    SearchOutcome,
    SweepReport,
)

TOOL_NAME = "treewheel"
TOOL_VERSION = "0.1.0"

FORMATS = ("text", "records")


def meta_record() -> dict[str, Any]:
    return {
        "record": "meta",
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "catalog": catalog_hash(),
    }


def _embedding(emb: Optional[tuple[int, ...]]) -> Optional[list[int]]:
    return None if emb is None else list(emb)


def record_for(obj: Any, timing_s: Optional[float] = None) -> dict[str, Any]:
    """Convert one result object into a flat, JSON-ready record."""
    if isinstance(obj, dict):
        rec = dict(obj)
        if "record" not in rec:
            raise ValueError("dict records need a 'record' key")
    elif isinstance(obj, BoundCertificate):
        rec = {
            "record": "certificate",
            "theorem": obj.theorem_id,
            "claims": list(obj.claim_ids),
            "n": obj.n,
            "m": obj.m,
            "t": obj.t,
            "variant": obj.variant,
            "recipe": obj.witness_recipe,
            "witness": obj.witness_g6,
            "order": obj.order,
            "claimed": obj.claimed,
            "order_matches": obj.order_matches,
            "trees": [
                {"tree": v.tree, "embedding": _embedding(v.embedding)}
                for v in obj.tree_verdicts
            ],
            "wheel_embedding": _embedding(obj.wheel_embedding),
            "good": obj.is_good,
            "implied_bound": obj.implied_bound,
            "passed": obj.passed,
        }
    elif isinstance(obj, SweepReport):
        rec = {
            "record": "sweep",
            "check": obj.check,
            "n": obj.n,
            "in_hypothesis": obj.in_hypothesis,
            "classes": obj.classes,
            "counterexamples": [dataclasses.asdict(c) for c in obj.counterexamples],
            "holds": obj.holds,
        }
    elif isinstance(obj, SampledReport):
        rec = {
            "record": "sampled-sweep",
            "check": obj.check,
            "n": obj.n,
            "seed": obj.seed,
            "samples": obj.samples,
            "hypothesis_hits": obj.hypothesis_hits,
            "strategy_hits": {name: hits for name, hits in obj.strategy_hits},
            "counterexamples": [dataclasses.asdict(c) for c in obj.counterexamples],
            "injected": [dataclasses.asdict(p) for p in obj.injected],
            "holds": obj.holds,
        }
    elif isinstance(obj, BondyReport):
        rec = {
            "record": "bondy",
            "n": obj.n,
            "classes": obj.classes,
            "allowed_exceptions": obj.allowed_exceptions,
            "counterexamples": [dataclasses.asdict(c) for c in obj.counterexamples],
            "holds": obj.holds,
        }
    elif isinstance(obj, SearchOutcome):
        rec = {
            "record": "search",
            "status": obj.status,
            "order": obj.order,
            "witness": obj.witness_g6,
            "nodes_expanded": obj.nodes_expanded,
            "seed": obj.seed,
        }
    else:
        raise TypeError(f"no record form for {type(obj).__name__}")
    rec["timing_s"] = None if timing_s is None else round(timing_s, 3)
    return rec


def write_records(
    objs: Iterable[Any],
    stream: TextIO,
    timings: Optional[list[Optional[float]]] = None,
) -> None:
    """Write a meta line followed by one sorted-key JSON record per object."""
    lines = [meta_record()]
    objs = list(objs)
    if timings is None:
        timings = [None] * len(objs)
    lines.extend(record_for(o, t) for o, t in zip(objs, timings))
    for rec in lines:
        stream.write(json.dumps(rec, sort_keys=True, separators=(",", ":")))
        stream.write("\n")


# ---------------------------------------------------------------------------
# Text tables
# ---------------------------------------------------------------------------


def _cert_lines(c: BoundCertificate) -> list[str]:
    tag = "PASS" if c.passed else "FAIL"
    t_part = f" t={c.t}" if c.t is not None else ""
    v_part = f" [{c.variant}]" if c.variant is not None else ""
    head = (f"{tag}  {c.theorem_id} n={c.n} m={c.m}{t_part}{v_part}  "
            f"order={c.order} claimed={c.claimed}  recipe {c.witness_recipe}")
    lines = [head]
    if c.passed:
        lines.append(f"      good: R >= {c.implied_bound}  "
                     f"claims {', '.join(c.claim_ids)}")
        return lines
    if not c.order_matches:
        lines.append(f"      order {c.order} != claimed-1 = {c.claimed - 1}")
    for v in c.tree_verdicts:
        if v.embedding is not None:
            lines.append(f"      contains {v.tree}: vertices {list(v.embedding)}")
    if c.wheel_embedding is not None:
        hub, *rim = c.wheel_embedding
        lines.append(f"      complement contains W({c.m}): hub {hub}, rim {rim}")
    return lines


def _counterexample_lines(ces) -> list[str]:
    return [f"      counterexample {ce.witness_g6}: {ce.detail}" for ce in ces]


def _sweep_lines(r: SweepReport) -> list[str]:
    scope = "in hypothesis" if r.in_hypothesis else "out of hypothesis (probe)"
    tag = "PASS" if r.holds else ("FAIL" if r.in_hypothesis else "INFO")
    head = (f"{tag}  {r.check} n={r.n}  classes={r.classes} "
            f"counterexamples={len(r.counterexamples)}  [{scope}]")
    return [head] + _counterexample_lines(r.counterexamples)


def _sampled_lines(r: SampledReport) -> list[str]:
    tag = "PASS" if r.holds else "FAIL"
    hits = " ".join(f"{name}={count}" for name, count in r.strategy_hits)
    head = (f"{tag}  {r.check} n={r.n} seed={r.seed}  samples={r.samples} "
            f"hits={r.hypothesis_hits} ({hits}) "
            f"counterexamples={len(r.counterexamples)}")
    lines = [head]
    for p in r.injected:
        word = "hit" if p.hypothesis_hit else "miss, skipped"
        lines.append(f"      injected {p.label} (order {p.order}): hypothesis {word}")
    return lines + _counterexample_lines(r.counterexamples)


def _bondy_lines(r: BondyReport) -> list[str]:
    tag = "PASS" if r.holds else "FAIL"
    head = (f"{tag}  bondy n={r.n}  classes={r.classes} "
            f"allowed_exceptions={r.allowed_exceptions} "
            f"counterexamples={len(r.counterexamples)}")
    return [head] + _counterexample_lines(r.counterexamples)


def _search_lines(r: SearchOutcome) -> list[str]:
    head = (f"search order={r.order}: {r.status}  "
            f"nodes={r.nodes_expanded} seed={r.seed}")
    if r.witness_g6 is not None:
        return [head, f"      witness {r.witness_g6}"]
    return [head]


def _dict_lines(rec: dict[str, Any]) -> list[str]:
    body = " ".join(f"{k}={rec[k]}" for k in rec if k != "record")
    return [f"{rec['record']}: {body}"]


def text_lines(obj: Any) -> list[str]:
    if isinstance(obj, BoundCertificate):
        return _cert_lines(obj)
    if isinstance(obj, SweepReport):
        return _sweep_lines(obj)
    if isinstance(obj, SampledReport):
        return _sampled_lines(obj)
    if isinstance(obj, BondyReport):
        return _bondy_lines(obj)
    if isinstance(obj, SearchOutcome):
        return _search_lines(obj)
    if isinstance(obj, dict):
        return _dict_lines(obj)
    raise TypeError(f"no text form for {type(obj).__name__}")


def write_text(objs: Iterable[Any], stream: TextIO) -> None:
    """Write a header plus one block per object, ending with a summary."""
    meta = meta_record()
    stream.write(f"# {meta['tool']} {meta['version']}  catalog {meta['catalog']}\n")
    for obj in objs:
        for line in text_lines(obj):
            stream.write(line)
            stream.write("\n")
