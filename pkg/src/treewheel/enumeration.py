"""Isomorph-free graph enumeration and adversarial sampling.

enumerate_graphs grows graphs one vertex at a time and keeps a child
only when the new vertex sits in the canonical deletion orbit (the
automorphism orbit minimizing the marked canonical form among vertices
of minimal degree signature).  Each isomorphism class then appears on
exactly one generation path, so the stream needs no global seen-set and
runs in memory bounded by the recursion depth.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional

from .graph import Graph, CapacityError, complement
from .canon import marked_form_rows, canon_form_rows

UNCONSTRAINED_CAP = 10
BOUNDED_DEGREE_CAP = 12
BOUNDED_DEGREE_LIMIT = 3


@dataclass(frozen=True)
class EnumFilter:
    order: int
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    prune: Optional[Callable[[Graph], bool]] = None  # False cuts the subtree

    def validate(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        lo = self.min_degree if self.min_degree is not None else 0
        hi = self.max_degree if self.max_degree is not None else self.order - 1
        if not 0 <= lo <= hi <= self.order - 1:
            raise ValueError(f"degree bounds ({self.min_degree},{self.max_degree}) "
                             f"invalid for order {self.order}")


def _vertex_key(rows, v: int, degs) -> tuple:
    return (degs[v], tuple(sorted(degs[u] for u in _row_bits(rows[v]))))


def _row_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _accept(rows: tuple[int, ...], n: int):
    """Marked canonical form of the new vertex if it lies in the canonical
    deletion orbit, else None.  The form doubles as a complete class key."""
    degs = [r.bit_count() for r in rows]
    new_key = _vertex_key(rows, n - 1, degs)
    tied = []
    for v in range(n - 1):
        k = _vertex_key(rows, v, degs)
        if k < new_key:
            return None
        if k == new_key:
            tied.append(v)
    f_new = marked_form_rows(rows, n, n - 1)
    for v in tied:
        if marked_form_rows(rows, n, v) < f_new:
            return None
    return f_new


def enumerate_graphs(filt: EnumFilter) -> Iterator[Graph]:
    """Stream one representative per isomorphism class matching filt."""
    filt.validate()
    lo = filt.min_degree if filt.min_degree is not None else 0
    hi = filt.max_degree if filt.max_degree is not None else filt.order - 1
    co_hi = filt.order - 1 - lo
    if filt.prune is None and co_hi < hi:
        # tighter cap on the complement side; enumerate there
        inner = EnumFilter(filt.order, min_degree=filt.order - 1 - hi, max_degree=co_hi)
        for g in enumerate_graphs(inner):
            yield complement(g)
        return
    cap = BOUNDED_DEGREE_CAP if hi <= BOUNDED_DEGREE_LIMIT else UNCONSTRAINED_CAP
    if filt.prune is None and filt.order > cap:
        # A prune hook cuts the tree as it grows, so the caller takes on the
        # job of bounding the work; the cap only guards full enumerations.
        raise CapacityError(
            f"order {filt.order} beyond enumeration cap {cap} (max_degree {hi})")
    target, prune = filt.order, filt.prune

    root = Graph._make(1, (0,))
    if prune is not None and not prune(root):
        return

    def rec(rows: tuple[int, ...], n: int) -> Iterator[Graph]:
        if n == target:
            g = Graph._make(n, rows)
            if all(r.bit_count() >= lo for r in rows):
                yield g
            return
        eligible = [v for v in range(n) if rows[v].bit_count() < hi]
        seen: set = set()
        for size in range(0, min(hi, len(eligible)) + 1):
            for S in combinations(eligible, size):
                smask = 0
                for v in S:
                    smask |= 1 << v
                child = tuple(
                    (rows[v] | (1 << n)) if (smask >> v) & 1 else rows[v]
                    for v in range(n)
                ) + (smask,)
                key = _accept(child, n + 1)
                if key is None or key in seen:
                    continue
                seen.add(key)
                if prune is not None and not prune(Graph._make(n + 1, child)):
                    continue
                yield from rec(child, n + 1)

    if target == 1:
        yield root
        return
    yield from rec(root.rows, 1)


def enumerate_union_paths_cycles(n: int) -> Iterator[Graph]:
    """All disjoint unions of paths and cycles on n vertices, one per class.

    Exactly the complements of the graphs with min degree >= n-3.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")

    def partitions(total: int, maxpart: int, minpart: int):
        if total == 0:
            yield ()
            return
        for p in range(min(total, maxpart), minpart - 1, -1):
            for rest in partitions(total - p, p, minpart):
                yield (p, *rest)

    for cyc_total in range(0, n + 1):
        if 0 < cyc_total < 3:
            continue
        for cycles in partitions(cyc_total, cyc_total, 3):
            for paths in partitions(n - cyc_total, n - cyc_total, 1):
                edges = []
                base = 0
                for k in cycles:
                    edges.extend((base + i, base + (i + 1) % k) for i in range(k))
                    base += k
                for k in paths:
                    edges.extend((base + i, base + i + 1) for i in range(k - 1))
                    base += k
                yield Graph.from_edges(n, edges)


def enumerate_trees(n: int) -> list[Graph]:
    """Unlabeled trees on n vertices via leaf augmentation (small n)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > 12:
        raise CapacityError(f"tree enumeration capped at order 12, got {n}")
    level = {canon_form_rows((0,), 1): Graph._make(1, (0,))}
    for k in range(2, n + 1):
        nxt: dict = {}
        for t in level.values():
            for v in range(t.n):
                rows = tuple(
                    (t.rows[u] | (1 << t.n)) if u == v else t.rows[u]
                    for u in range(t.n)
                ) + (1 << v,)
                f = canon_form_rows(rows, k)
                if f not in nxt:
                    nxt[f] = Graph._make(k, rows)
        level = nxt
    return sorted(level.values(), key=lambda g: g.rows)


# -- adversarial sampling -------------------------------------------------


STRATEGIES = ("witness-mutation", "sparse-random", "union-of-cliques-random")


def sample_adversarial(
    order: int,
    strategy: str,
    seed: int,
    count: int,
    *,
    base: Optional[Graph] = None,
    p: float = 0.2,
    max_flips: int = 3,
) -> Iterator[Graph]:
    """Deterministic adversarial sample stream.

    witness-mutation flips up to max_flips vertex pairs of `base`;
    sparse-random draws each edge with probability p (accepts the spelled
    form "sparse-random(p)"); union-of-cliques-random splits the order
    into random clique blocks.
    """
    name = strategy.strip()
    if name.endswith(")") and "(" in name:
        name, arg = name[:-1].split("(", 1)
        p = float(arg)
    if name not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = random.Random(seed)
    if name == "witness-mutation":
        if base is None:
            raise ValueError("witness-mutation needs a base graph")
        if base.n != order:
            raise ValueError(f"base order {base.n} != requested order {order}")
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]

    def gen() -> Iterator[Graph]:
        for _ in range(count):
            if name == "witness-mutation":
                rows = list(base.rows)
                for _ in range(rng.randint(0, max_flips)):
                    u, v = rng.choice(pairs)
                    rows[u] ^= 1 << v
                    rows[v] ^= 1 << u
                yield Graph._make(order, tuple(rows))
            elif name == "sparse-random":
                rows = [0] * order
                for u, v in pairs:
                    if rng.random() < p:
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
                yield Graph._make(order, tuple(rows))
            else:
                rows = [0] * order
                verts = list(range(order))
                rng.shuffle(verts)
                i = 0
                while i < order:
                    size = rng.randint(1, order - i)
                    block = verts[i:i + size]
                    for a in range(size):
                        for b in range(a + 1, size):
                            rows[block[a]] |= 1 << block[b]
                            rows[block[b]] |= 1 << block[a]
                    i += size
                yield Graph._make(order, tuple(rows))

    return gen()
