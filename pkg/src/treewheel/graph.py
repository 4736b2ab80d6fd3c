"""Immutable graph core.

Graphs are simple and undirected, stored as one Python int bitmask per
vertex (bit j of rows[v] set iff v ~ j).  Arbitrary-precision ints give
word-parallel complement / intersection for free, which is what the
containment and enumeration layers lean on.
"""
from __future__ import annotations

from dataclasses import dataclass

MAX_ORDER = 512


class CapacityError(ValueError):
    """Order cap exceeded."""

    code = "capacity"


class Graph6ParseError(ValueError):
    """Malformed graph6 input; .offset points at the offending byte."""

    code = "graph6-parse"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    # Construction goes through from_edges/from_rows which validate; the
    # enumeration hot path builds raw row tuples and wraps them with _make.

    @staticmethod
    def _make(n: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(Graph)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_rows(cls, rows) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in _bits(rows[v]):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency {v},{u}")
        return cls._make(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("negative order")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._make(n, tuple(rows))

    # -- basic queries ---------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1)
            base = v + 1
            while row:
                low = row & -row
                out.append((v, base + low.bit_length() - 1))
                row ^= low
        return out

    def component_masks(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        full = (1 << self.n) - 1
        comps = []
        while seen != full:
            rest = full & ~seen
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


bits = _bits  # re-exported; containment and enumeration use it heavily


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full & ~r) & ~(1 << v) for v, r in enumerate(g.rows))
    return Graph._make(g.n, rows)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = a.n + b.n
    if n > MAX_ORDER:
        raise CapacityError(f"combined order {n} exceeds cap {MAX_ORDER}")
    rows = list(a.rows) + [r << a.n for r in b.rows]
    return Graph._make(n, tuple(rows))


def induced(g: Graph, vertices) -> Graph:
    """Induced subgraph; vertices may be an iterable of indices or a bitmask.

    Vertex order of the result follows ascending original index.
    """
    if isinstance(vertices, int):
        vs = _bits(vertices)
    else:
        vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        r = g.rows[v]
        for u in vs:
            if (r >> u) & 1:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph._make(len(vs), tuple(rows))


def degree_profile(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(min degree, max degree, degree sequence sorted descending)."""
    degs = g.degrees()
    if not degs:
        return (0, 0, ())
    return (min(degs), max(degs), tuple(sorted(degs, reverse=True)))


# -- graph6 ---------------------------------------------------------------
#
# Standard graph6: optional ">>graph6<<" header on input (never emitted),
# size field N(n), then the upper triangle in column-major order packed
# into 6-bit chunks offset by 63.

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise CapacityError(f"order {n} not encodable here")


def graph6_encode(g: Graph) -> str:
    out = [_encode_size(g.n)]
    bit_i = 0
    chunk = 0
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            chunk = (chunk << 1) | ((col >> u) & 1)
            bit_i += 1
            if bit_i == 6:
                out.append(chr(chunk + 63))
                bit_i = 0
                chunk = 0
    if bit_i:
        out.append(chr((chunk << (6 - bit_i)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b!r} outside graph6 range", i)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError("order beyond supported range", 1)
        if len(data) < 4:
            raise Graph6ParseError("truncated size field", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6ParseError(
            f"body length {len(body)}, expected {need} for order {n}",
            body_off + min(len(body), need),
        )
    rows = [0] * n
    bit_i = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[bit_i // 6] - 63
            if (byte >> (5 - bit_i % 6)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit_i += 1
    # trailing pad bits must be zero
    if bit_i % 6:
        byte = body[-1] - 63
        if byte & ((1 << (6 - bit_i % 6)) - 1):
            raise Graph6ParseError("nonzero padding bits", body_off + len(body) - 1)
    return Graph._make(n, tuple(rows))
