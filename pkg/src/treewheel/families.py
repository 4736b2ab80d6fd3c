"""Tree and named-graph families.

The tree catalog covers the high-max-degree families the verifier cares
about: stars, stars with subdivided edges (spiders), and two stars whose
centers are joined by an edge.  Builders lay vertices out canonically:
vertex 0 is a maximum-degree center, leaves come first, subdivision
paths follow in order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from . import canon


class SpecParameterError(ValueError):
    code = "parameter"


# -- tree specs ------------------------------------------------------------


@dataclass(frozen=True)
class Star:
    """Star on n vertices: one center adjacent to n-1 leaves."""

    n: int

    def validate(self) -> None:
        if self.n < 2:
            raise SpecParameterError(f"star needs n >= 2, got {self.n}")


@dataclass(frozen=True)
class Spider:
    """Star on n - legs*steps vertices with `legs` edges each subdivided
    `steps` times; total order n."""

    n: int
    legs: int
    steps: int

    def validate(self) -> None:
        if self.legs < 1 or self.steps < 1:
            raise SpecParameterError(f"spider needs legs,steps >= 1, got {self}")
        if self.n - self.steps * self.legs < self.legs + 1:
            raise SpecParameterError(
                f"spider base star too small: n={self.n} legs={self.legs} steps={self.steps}"
            )


@dataclass(frozen=True)
class JoinedStars:
    """Stars on `side` and n-side vertices with centers joined by an edge."""

    n: int
    side: int

    def validate(self) -> None:
        if not 2 <= self.side <= self.n - 2:
            raise SpecParameterError(
                f"joined stars need 2 <= side <= n-2, got side={self.side} n={self.n}"
            )


TreeSpec = Star | Spider | JoinedStars


# -- named graphs ----------------------------------------------------------


@dataclass(frozen=True)
class Clique:
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise SpecParameterError(f"clique needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Cycle:
    n: int

    def validate(self) -> None:
        if self.n < 3:
            raise SpecParameterError(f"cycle needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class Path:
    n: int

    def validate(self) -> None:
        if self.n < 1:
            raise SpecParameterError(f"path needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def validate(self) -> None:
        if self.a < 1 or self.b < 1:
            raise SpecParameterError(f"complete bipartite needs sides >= 1, got {self}")


@dataclass(frozen=True)
class Wheel:
    """Cycle of length m joined to one hub; order m+1."""

    m: int

    def validate(self) -> None:
        if self.m < 3:
            raise SpecParameterError(f"wheel needs rim >= 3, got {self.m}")


@dataclass(frozen=True)
class Empty:
    n: int

    def validate(self) -> None:
        if self.n < 0:
            raise SpecParameterError(f"empty graph needs n >= 0, got {self.n}")


NamedGraphSpec = Clique | Cycle | Path | CompleteBipartite | Wheel | Empty


# -- builders ---------------------------------------------------------------


def build_tree(spec: TreeSpec) -> Graph:
    spec.validate()
    if isinstance(spec, Star):
        return Graph.from_edges(spec.n, [(0, v) for v in range(1, spec.n)])
    if isinstance(spec, Spider):
        n, legs, steps = spec.n, spec.legs, spec.steps
        plain = n - steps * legs - 1 - legs  # untouched leaves of the base star
        edges = [(0, v) for v in range(1, plain + 1)]
        nxt = plain + 1
        for _ in range(legs):
            prev = 0
            for _ in range(steps + 1):  # steps inner vertices plus the far end
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph.from_edges(n, edges)
    n, side = spec.n, spec.side
    big, small = max(n - side, side), min(n - side, side)
    edges = [(0, v) for v in range(1, big)]  # big center and its big-1 leaves
    edges.append((0, big))
    edges.extend((big, v) for v in range(big + 1, n))
    return Graph.from_edges(n, edges)


def build_named(spec: NamedGraphSpec) -> Graph:
    spec.validate()
    if isinstance(spec, Clique):
        return Graph.from_edges(
            spec.n, [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)]
        )
    if isinstance(spec, Cycle):
        return Graph.from_edges(spec.n, [(v, (v + 1) % spec.n) for v in range(spec.n)])
    if isinstance(spec, Path):
        return Graph.from_edges(spec.n, [(v, v + 1) for v in range(spec.n - 1)])
    if isinstance(spec, CompleteBipartite):
        return Graph.from_edges(
            spec.a + spec.b,
            [(u, spec.a + v) for u in range(spec.a) for v in range(spec.b)],
        )
    if isinstance(spec, Wheel):
        rim = [(1 + v, 1 + (v + 1) % spec.m) for v in range(spec.m)]
        return Graph.from_edges(spec.m + 1, rim + [(0, 1 + v) for v in range(spec.m)])
    return Graph.from_edges(spec.n, [])


def spec_max_degree(spec: TreeSpec) -> int:
    """Max degree of build_tree(spec), by formula."""
    spec.validate()
    if isinstance(spec, Star):
        return spec.n - 1
    if isinstance(spec, Spider):
        return max(spec.n - spec.steps * spec.legs - 1, 2)
    return max(spec.n - spec.side, spec.side)


# -- classification ----------------------------------------------------------

# Precedence order for ties at small n, where distinct specs can build
# isomorphic trees (e.g. Spider(5,1,2) and Spider(5,2,1) are both the
# 5-path).  First match wins, so the spider names are preferred.
def _candidates(n: int):
    return (
        Star(n),
        Spider(n, 1, 1),
        Spider(n, 1, 2),
        Spider(n, 2, 1),
        JoinedStars(n, 3),
    )


def classify_tree(g: Graph):
    """Catalog spec matching a tree with max degree >= n-3, else None.

    Raises ValueError if g is not a tree.
    """
    n = g.n
    if n == 0 or g.edge_count != n - 1 or not g.is_connected():
        raise ValueError("classify_tree expects a tree")
    if n == 1:
        return None
    maxdeg = max(g.degrees())
    if maxdeg < n - 3:
        return None
    form = canon.canonical_form(g)
    for cand in _candidates(n):
        try:
            cand.validate()
        except SpecParameterError:
            continue
        if canon.canonical_form(build_tree(cand)) == form:
            return cand
    return None


# -- spec-string syntax -------------------------------------------------------
#
# S(n) star, S(n;l,m) spider, S(n;l) joined stars, K(n), K(a,b), C(n),
# W(m), P(n), E(n); case-insensitive.


def parse_spec(text: str):
    s = text.strip().replace(" ", "")
    if len(s) < 4 or s[1] != "(" or not s.endswith(")"):
        raise SpecParameterError(f"cannot parse spec string {text!r}")
    kind = s[0].upper()
    body = s[2:-1]

    def ints(part: str) -> list[int]:
        try:
            return [int(x) for x in part.split(",")]
        except ValueError:
            raise SpecParameterError(f"bad integers in spec string {text!r}") from None

    if kind == "S":
        if ";" in body:
            head, rest = body.split(";", 1)
            args = ints(head) + ints(rest)
            if len(args) == 2:
                spec: TreeSpec = JoinedStars(args[0], args[1])
            elif len(args) == 3:
                spec = Spider(args[0], args[1], args[2])
            else:
                raise SpecParameterError(f"cannot parse spec string {text!r}")
        else:
            spec = Star(ints(body)[0])
        spec.validate()
        return spec
    makers = {"K": None, "C": Cycle, "P": Path, "W": Wheel, "E": Empty}
    if kind not in makers:
        raise SpecParameterError(f"unknown family {kind!r} in {text!r}")
    args = ints(body)
    if kind == "K":
        named = CompleteBipartite(*args) if len(args) == 2 else Clique(*args)
    else:
        if len(args) != 1:
            raise SpecParameterError(f"cannot parse spec string {text!r}")
        named = makers[kind](args[0])
    named.validate()
    return named


def format_spec(spec) -> str:
    if isinstance(spec, Star):
        return f"S({spec.n})"
    if isinstance(spec, Spider):
        return f"S({spec.n};{spec.legs},{spec.steps})"
    if isinstance(spec, JoinedStars):
        return f"S({spec.n};{spec.side})"
    if isinstance(spec, Clique):
        return f"K({spec.n})"
    if isinstance(spec, CompleteBipartite):
        return f"K({spec.a},{spec.b})"
    if isinstance(spec, Cycle):
        return f"C({spec.n})"
    if isinstance(spec, Path):
        return f"P({spec.n})"
    if isinstance(spec, Wheel):
        return f"W({spec.m})"
    if isinstance(spec, Empty):
        return f"E({spec.n})"
    raise TypeError(f"not a spec: {spec!r}")


def build(spec) -> Graph:
    """Build any tree or named spec."""
    if isinstance(spec, (Star, Spider, JoinedStars)):
        return build_tree(spec)
    return build_named(spec)
