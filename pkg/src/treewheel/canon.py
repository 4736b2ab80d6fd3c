"""Canonical forms and isomorphism for small graphs.

Individualization-refinement search minimizing the column-major upper
triangle bitstring over refinement-consistent labelings.  Equitable
refinement is isomorphism-equivariant, so the minimum is a canonical
form.  Pruning: automorphisms discovered at equal leaves (orbit check at
the root, prefix-fixing generator check below it) plus a partial-string
bound on the leading singleton run.

A "marked" form canonizes the pair (graph, distinguished vertex); two
vertices get equal marked forms iff they lie in the same automorphism
orbit, which gives exact orbits with no group theory.
"""
from __future__ import annotations

from .graph import Graph


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition, to fixpoint.

    Subcells are ordered by their neighbor-count signature, ascending, so
    the result depends only on the isomorphism type of (rows, cells).
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                rv = rows[v]
                sig = tuple((rv & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _search(rows: tuple[int, ...], n: int, init_cells: list[list[int]]):
    """Return (best_bits, best_labeling) plus discovered automorphisms."""
    total_bits = n * (n - 1) // 2
    best: list = [None, None]  # bits, labeling
    gens: list[tuple[int, ...]] = []
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    path: list[int] = []

    def leaf(cells: list[list[int]]) -> None:
        lab = [c[0] for c in cells]
        bits = 0
        for j in range(1, n):
            rj = rows[lab[j]]
            for i in range(j):
                bits = (bits << 1) | ((rj >> lab[i]) & 1)
        if best[0] is None or bits < best[0]:
            best[0] = bits
            best[1] = lab
        elif bits == best[0]:
            blab = best[1]
            phi = [0] * n
            for i in range(n):
                phi[lab[i]] = blab[i]
            gens.append(tuple(phi))
            for v in range(n):
                ra, rb = find(v), find(phi[v])
                if ra != rb:
                    uf[ra] = rb

    def node(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        k = 0
        while k < len(cells) and len(cells[k]) == 1:
            k += 1
        if best[0] is not None and k >= 2:
            labk = [cells[i][0] for i in range(k)]
            pref = 0
            for j in range(1, k):
                rj = rows[labk[j]]
                for i in range(j):
                    pref = (pref << 1) | ((rj >> labk[i]) & 1)
            plen = k * (k - 1) // 2
            if pref > (best[0] >> (total_bits - plen)):
                return
        if k == len(cells):
            leaf(cells)
            return
        ti = k
        tsize = len(cells[k])
        for i in range(k + 1, len(cells)):
            sz = len(cells[i])
            if 1 < sz < tsize:
                ti, tsize = i, sz
        tcell = cells[ti]
        head = cells[:ti]
        tail = cells[ti + 1:]
        cm = 0
        for v in tcell:
            cm |= 1 << v
        out0 = rows[tcell[0]] & ~cm
        in0 = (rows[tcell[0]] & cm).bit_count()
        if in0 in (0, len(tcell) - 1) and all(
            rows[v] & ~cm == out0 for v in tcell[1:]
        ):
            # Twin cell: identical neighborhoods outside, clique or
            # independent inside, so every permutation of the cell is an
            # automorphism fixing the rest.  One branch covers them all.
            v = tcell[0]
            rest = tcell[1:]
            path.append(v)
            node(head + [[v], rest] + tail)
            path.pop()
            return
        explored: list[int] = []
        for v in tcell:
            if explored:
                if not path:
                    rv = find(v)
                    if any(find(u) == rv for u in explored):
                        continue
                else:
                    skip = False
                    for phi in gens:
                        if phi[v] in explored and all(phi[p] == p for p in path):
                            skip = True
                            break
                    if skip:
                        continue
            rest = [u for u in tcell if u != v]
            path.append(v)
            node(head + [[v], rest] + tail)
            path.pop()
            explored.append(v)
        return

    node(init_cells)
    return best[0], tuple(best[1]), gens


def canon_form_rows(rows: tuple[int, ...], n: int) -> tuple[int, int]:
    if n == 0:
        return (0, 0)
    bits, _, _ = _search(rows, n, [list(range(n))])
    return (n, bits)


def canon_labeling_rows(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    _, lab, _ = _search(rows, n, [list(range(n))])
    return lab


def marked_form_rows(rows: tuple[int, ...], n: int, mark: int) -> tuple[int, int]:
    """Canonical form of (graph, marked vertex); mark pinned to position 0."""
    others = [v for v in range(n) if v != mark]
    cells = [[mark]] + ([others] if others else [])
    bits, _, _ = _search(rows, n, cells)
    return (n, bits)


def canonical_form(g: Graph) -> tuple[int, int]:
    return canon_form_rows(g.rows, g.n)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation lab with lab[position] = original vertex."""
    return canon_labeling_rows(g.rows, g.n)


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (least member) per vertex, exactly."""
    forms: dict[tuple[int, int], int] = {}
    rep = [0] * g.n
    for v in range(g.n):
        f = marked_form_rows(g.rows, g.n, v)
        if f not in forms:
            forms[f] = v
        rep[v] = forms[f]
    return rep


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    return canonical_form(a) == canonical_form(b)
