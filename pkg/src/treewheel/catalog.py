"""Claim ledger and witness recipes for tree-versus-wheel Ramsey bounds.

The workbench tracks lower-bound constructions for Ramsey numbers
R(T_n, W_m), where T_n ranges over trees of order n with maximum degree
at least n - 3 and W_m is the wheel on m + 1 vertices.  Witness graphs
are stored symbolically -- small expression trees over named graphs,
disjoint unions, repeated copies, and complements -- and instantiated on
demand, so one catalog entry covers every member of a residue class.

Every quantitative claim the workbench knows about is listed in
``all_claims()`` with a verifiability status:

* ``exact-with-witness``   -- an exact Ramsey value whose lower-bound
  side is certified by an elaborable witness recipe;
* ``lower-bound-checkable`` -- a pure lower bound with a witness recipe;
* ``recorded-only``        -- a claim quoted from the literature or a
  conjecture, carried for completeness but not machine-checkable here.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass

from .families import (
    Clique,
    CompleteBipartite,
    Cycle,
    Empty,
    JoinedStars,
    NamedGraphSpec,
    Spider,
    Star,
    TreeSpec,
    build_named,
    format_spec,
)
from .graph import Graph
from .graph import complement as _complement
from .graph import disjoint_union as _disjoint_union

__all__ = [
    "CatalogError",
    "UnknownTheoremError",
    "ConditionError",
    "Named",
    "Copies",
    "Union",
    "Complement",
    "RecipeExpr",
    "N2Recipes",
    "TheoremEntry",
    "RamseyClaim",
    "THEOREMS",
    "THEOREM_IDS",
    "elaborate",
    "format_recipe",
    "formula_value",
    "family_tree",
    "trees_for",
    "condition_holds",
    "require_valid",
    "valid_ns",
    "smallest_valid_ns",
    "witness_for",
    "n2_recipe",
    "claimed_bound",
    "all_claims",
    "claims_by_id",
    "claims_for_theorem",
    "resolve_witness_t",
    "catalog_hash",
]


class CatalogError(ValueError):
    """Base class for catalog lookup and validation failures."""


class UnknownTheoremError(CatalogError):
    """Raised when a theorem id is not in the catalog."""

    def __init__(self, theorem_id: str):
        known = ", ".join(THEOREM_IDS)
        super().__init__(f"unknown theorem id {theorem_id!r} (known: {known})")
        self.theorem_id = theorem_id


class ConditionError(CatalogError):
    """A parameter fell outside a theorem's validity condition."""

    def __init__(self, theorem_id: str, condition: str, detail: str):
        super().__init__(f"{theorem_id} requires {condition}; {detail}")
        self.theorem_id = theorem_id
        self.condition = condition


# --------------------------------------------------------------------------
# recipe expression language


@dataclass(frozen=True)
class Named:
    """A single named graph, e.g. K(4) or C(8)."""

    spec: NamedGraphSpec


@dataclass(frozen=True)
class Copies:
    """``count`` vertex-disjoint copies of a sub-recipe (0 = empty graph)."""

    count: int
    expr: "RecipeExpr"

    def __post_init__(self) -> None:
        if self.count < 0:
            raise CatalogError(f"copy count must be >= 0, got {self.count}")


@dataclass(frozen=True)
class Union:
    """Disjoint union of two sub-recipes (left block first)."""

    left: "RecipeExpr"
    right: "RecipeExpr"


@dataclass(frozen=True)
class Complement:
    """Graph complement of a sub-recipe."""

    expr: "RecipeExpr"


RecipeExpr = Named | Copies | Union | Complement


def elaborate(recipe: RecipeExpr) -> Graph:
    """Evaluate a recipe to a concrete graph.

    Union maps to disjoint union, Copies(k, e) to the disjoint union of
    k copies of e (the empty graph when k = 0, the identity for Union),
    and Complement to the graph complement.  Evaluation is
    deterministic: vertex indices follow the left-to-right order of the
    expression tree, so identical recipes always produce identical
    vertex-indexed graphs.
    """
    if isinstance(recipe, Named):
        return build_named(recipe.spec)
    if isinstance(recipe, Copies):
        out = build_named(Empty(0))
        if recipe.count:
            part = elaborate(recipe.expr)
            for _ in range(recipe.count):
                out = _disjoint_union(out, part)
        return out
    if isinstance(recipe, Union):
        return _disjoint_union(elaborate(recipe.left), elaborate(recipe.right))
    if isinstance(recipe, Complement):
        return _complement(elaborate(recipe.expr))
    raise TypeError(f"not a recipe node: {recipe!r}")


def format_recipe(recipe: RecipeExpr) -> str:
    """Render a recipe in compact algebraic notation.

    Examples: ``~(2*K(4)) + K(7)`` is the complement of two disjoint
    K_4 blocks, disjointly joined with K_7.
    """
    if isinstance(recipe, Named):
        return format_spec(recipe.spec)
    if isinstance(recipe, Copies):
        inner = format_recipe(recipe.expr)
        if not isinstance(recipe.expr, Named):
            inner = f"({inner})"
        return f"{recipe.count}*{inner}"
    if isinstance(recipe, Union):
        return f"{format_recipe(recipe.left)} + {format_recipe(recipe.right)}"
    if isinstance(recipe, Complement):
        inner = format_recipe(recipe.expr)
        if isinstance(recipe.expr, Named):
            return f"~{inner}"
        return f"~({inner})"
    raise TypeError(f"not a recipe node: {recipe!r}")


# --------------------------------------------------------------------------
# theorem registry


@dataclass(frozen=True)
class TheoremEntry:
    """One lower-bound construction, symbolic in n (and m, t)."""

    theorem_id: str
    statement: str
    condition: str
    families: tuple[str, ...]
    formula: str
    exact: bool
    general_m: bool
    needs_t: bool = False


_MAXDEG_FAMILIES = ("S(n;1,2)", "S(n;2,1)", "S(n;3)")

THEOREMS: dict[str, TheoremEntry] = {
    e.theorem_id: e
    for e in (
        TheoremEntry(
            theorem_id="th1",
            statement="R(S(n;1,1), W(8)) = 2n+1 for odd n >= 5",
            condition="odd n >= 5 (wheel order m = 8)",
            families=("S(n;1,1)",),
            formula="2n+1",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="th2",
            statement="R(S(n;1,1), W(8)) = 2n for even n >= 6",
            condition="even n >= 6 (wheel order m = 8)",
            families=("S(n;1,1)",),
            formula="2n",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="th3",
            statement=(
                "R(S(n;1,2), W(8)) = R(S(n;2,1), W(8)) = R(S(n;3), W(8)) = 2n "
                "for even n >= 8"
            ),
            condition="even n >= 8 (wheel order m = 8)",
            families=_MAXDEG_FAMILIES,
            formula="2n",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="th4",
            statement=(
                "R(S(n;1,2), W(8)) = 2n+1 for n = 3 (mod 4), n >= 11 "
                "(construction valid from n = 7)"
            ),
            condition="n = 3 (mod 4) with n >= 7 (wheel order m = 8)",
            families=("S(n;1,2)",),
            formula="2n+1",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="th5",
            statement="R(S(n;1,2), W(8)) = 2n for n = 1 (mod 4), n >= 9",
            condition="n = 1 (mod 4) with n >= 9 (wheel order m = 8)",
            families=("S(n;1,2)",),
            formula="2n",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="th6",
            statement=(
                "R(S(n;2,1), W(8)) = R(S(n;3), W(8)) = 2n-1 for odd n >= 9"
            ),
            condition="odd n >= 9 (wheel order m = 8)",
            families=("S(n;2,1)", "S(n;3)"),
            formula="2n-1",
            exact=True,
            general_m=False,
        ),
        TheoremEntry(
            theorem_id="lb",
            statement=(
                "R(T(n), W(m)) >= 2n+m/2-4 for trees with max degree n-3, "
                "n = 4 (mod m/2), even m >= 8"
            ),
            condition="even m >= 8, n = 4 (mod m/2), n >= 5",
            families=_MAXDEG_FAMILIES,
            formula="2n+m/2-4",
            exact=False,
            general_m=True,
        ),
        TheoremEntry(
            theorem_id="n2variant",
            statement=(
                "R(T(n), W(m)) >= 2n+m/2-4 for trees with max degree n-3, "
                "n = 2 (mod m/2), even m >= 8"
            ),
            condition="even m >= 8, n = 2 (mod m/2), n >= m/2+2",
            families=_MAXDEG_FAMILIES,
            formula="2n+m/2-4",
            exact=False,
            general_m=True,
        ),
        TheoremEntry(
            theorem_id="rsn2t",
            statement=(
                "R(S(n;1,2t), W(m)) >= 2n+m/2-t-2 for n = t+2 (mod m/2), "
                "even m >= 8, 1 <= t <= m/2-2"
            ),
            condition=(
                "even m >= 8, 1 <= t <= m/2-2, n = t+2 (mod m/2), n >= 2t+2"
            ),
            families=("S(n;1,2t)",),
            formula="2n+m/2-t-2",
            exact=False,
            general_m=True,
            needs_t=True,
        ),
    )
}

THEOREM_IDS: tuple[str, ...] = tuple(THEOREMS)


def formula_value(formula: str, n: int, m: int = 8, t: int | None = None) -> int:
    """Evaluate a symbolic bound formula at concrete parameters."""
    key = formula.replace(" ", "")
    if key == "2n":
        return 2 * n
    if key == "2n+1":
        return 2 * n + 1
    if key == "2n+2":
        return 2 * n + 2
    if key == "2n-1":
        return 2 * n - 1
    if key == "2n+m/2-4":
        return 2 * n + m // 2 - 4
    if key == "2n+m/2-3":
        return 2 * n + m // 2 - 3
    if key == "2n+m/2-t-2":
        if t is None:
            raise CatalogError(f"formula {formula!r} needs a value for t")
        return 2 * n + m // 2 - t - 2
    raise CatalogError(f"unknown bound formula {formula!r}")


def family_tree(label: str, n: int, m: int = 8, t: int | None = None) -> TreeSpec:
    """Instantiate a symbolic tree-family label at order n."""
    if label == "S(n)":
        return Star(n)
    if label == "S(n;1,1)":
        return Spider(n, 1, 1)
    if label == "S(n;1,2)":
        return Spider(n, 1, 2)
    if label == "S(n;2,1)":
        return Spider(n, 2, 1)
    if label == "S(n;3)":
        return JoinedStars(n, 3)
    if label == "S(n;1,2t)":
        if t is None:
            raise CatalogError(f"family {label!r} needs a value for t")
        return Spider(n, 1, 2 * t)
    if label == "S(n;1,m-4)":
        return Spider(n, 1, m - 4)
    raise CatalogError(f"unknown tree family label {label!r}")


def trees_for(
    theorem_id: str, n: int, m: int = 8, t: int | None = None
) -> tuple[TreeSpec, ...]:
    """The concrete trees a theorem's witness must avoid at order n."""
    entry = _entry(theorem_id)
    return tuple(family_tree(label, n, m=m, t=t) for label in entry.families)


# --------------------------------------------------------------------------
# validity conditions


def _entry(theorem_id: str) -> TheoremEntry:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheoremError(theorem_id) from None


def condition_holds(
    theorem_id: str, n: int, m: int = 8, t: int | None = None
) -> bool:
    """Whether (n, m, t) satisfies the theorem's validity condition."""
    entry = _entry(theorem_id)
    if entry.needs_t:
        if t is None:
            return False
    elif t is not None:
        return False
    if entry.general_m:
        if m < 8 or m % 2:
            return False
    elif m != 8:
        return False
    if theorem_id == "th1":
        return n >= 5 and n % 2 == 1
    if theorem_id == "th2":
        return n >= 6 and n % 2 == 0
    if theorem_id == "th3":
        return n >= 8 and n % 2 == 0
    if theorem_id == "th4":
        return n >= 7 and n % 4 == 3
    if theorem_id == "th5":
        return n >= 9 and n % 4 == 1
    if theorem_id == "th6":
        return n >= 9 and n % 2 == 1
    if theorem_id == "lb":
        return n >= 5 and n % (m // 2) == 4 % (m // 2)
    if theorem_id == "n2variant":
        return n >= m // 2 + 2 and n % (m // 2) == 2
    if theorem_id == "rsn2t":
        assert t is not None
        if not 1 <= t <= m // 2 - 2:
            return False
        return n >= 2 * t + 2 and n % (m // 2) == (t + 2) % (m // 2)
    raise AssertionError(theorem_id)


def require_valid(theorem_id: str, n: int, m: int = 8, t: int | None = None) -> None:
    """Raise ConditionError (naming the condition) unless (n, m, t) is valid."""
    entry = _entry(theorem_id)
    if not condition_holds(theorem_id, n, m=m, t=t):
        detail = f"got n={n}, m={m}" + (f", t={t}" if t is not None else "")
        raise ConditionError(theorem_id, entry.condition, detail)


def valid_ns(
    theorem_id: str, ns, m: int = 8, t: int | None = None
) -> list[int]:
    """Filter an iterable of n values down to those satisfying the condition."""
    _entry(theorem_id)
    return [n for n in ns if condition_holds(theorem_id, n, m=m, t=t)]


def smallest_valid_ns(
    theorem_id: str, count: int, m: int = 8, t: int | None = None
) -> list[int]:
    """The smallest ``count`` orders n satisfying the theorem's condition."""
    _entry(theorem_id)
    out: list[int] = []
    n = 1
    while len(out) < count:
        if condition_holds(theorem_id, n, m=m, t=t):
            out.append(n)
        n += 1
        if n > 10_000:
            raise CatalogError(
                f"no {count} valid orders for {theorem_id} with m={m}, t={t}"
            )
    return out


# --------------------------------------------------------------------------
# witness recipes


def _clique(k: int) -> Named:
    return Named(Clique(k))


@dataclass(frozen=True)
class N2Recipes:
    """Both readings of the n = 2 (mod m/2) block construction.

    ``literal`` keeps the block count (2n-4)/m as originally stated;
    it elaborates to order 2n+m-5, overshooting the claimed bound, and
    its leading block's complement has vertices of degree n+m/2-4 that
    host the trees, so goodness fails.  ``corrected`` drops one full
    block ((2n-4-m)/m copies), restoring order 2n+m/2-5 with a leading
    block whose complement is (n-4)-regular of order n-4+m/2.  Both are
    kept so the verifier can report which reading supports the claim.
    """

    literal: RecipeExpr
    corrected: RecipeExpr


def n2_recipe(n: int, m: int, variant: str) -> RecipeExpr:
    """One chosen reading ("literal" or "corrected") of the n2variant witness."""
    require_valid("n2variant", n, m=m)
    if variant == "literal":
        k = (2 * n - 4) // m
    elif variant == "corrected":
        k = (2 * n - 4 - m) // m
    else:
        raise CatalogError(
            f"variant must be 'literal' or 'corrected', got {variant!r}"
        )
    half = m // 2
    blocks = Union(
        Named(CompleteBipartite(half - 1, half - 1)), Copies(k, _clique(half))
    )
    return Union(Complement(blocks), _clique(n - 1))


def witness_for(
    theorem_id: str, n: int, m: int = 8, t: int | None = None
) -> RecipeExpr | N2Recipes:
    """The witness recipe certifying a theorem's bound at (n, m, t).

    For "n2variant" the result is an N2Recipes pair carrying both the
    as-stated and the corrected block count; every other theorem id
    yields a single RecipeExpr.  Parameters outside the theorem's
    validity condition raise ConditionError naming the condition.
    """
    require_valid(theorem_id, n, m=m, t=t)
    tail = _clique(n - 1)
    if theorem_id == "th1":
        if n % 4 == 3:
            blocks: RecipeExpr = Copies((n + 1) // 4, _clique(4))
        else:
            blocks = Union(
                Named(CompleteBipartite(3, 3)), Copies((n - 5) // 4, _clique(4))
            )
        return Union(Complement(blocks), tail)
    if theorem_id == "th2":
        if n == 8:
            # The complement of ~C_8 + K_7 would carry a wheel rim C_8,
            # so order 8 swaps in two K_4 blocks instead of the cycle.
            return Union(Complement(Copies(2, _clique(4))), tail)
        return Union(Complement(Named(Cycle(n))), tail)
    if theorem_id == "th3":
        if n % 4 == 0:
            blocks = Copies(n // 4, _clique(4))
        else:
            blocks = Union(
                Named(CompleteBipartite(3, 3)), Copies((n - 6) // 4, _clique(4))
            )
        return Union(Complement(blocks), tail)
    if theorem_id == "th4":
        return Union(Complement(Copies((n + 1) // 4, _clique(4))), tail)
    if theorem_id == "th5":
        blocks = Union(
            Copies(3, Named(Cycle(3))), Copies((n - 9) // 4, _clique(4))
        )
        return Union(Complement(blocks), tail)
    if theorem_id == "th6":
        return Copies(2, _clique(n - 1))
    if theorem_id == "lb":
        k = (2 * n + m - 8) // m
        return Union(Complement(Copies(k, _clique(m // 2))), tail)
    if theorem_id == "n2variant":
        return N2Recipes(
            literal=n2_recipe(n, m, "literal"),
            corrected=n2_recipe(n, m, "corrected"),
        )
    if theorem_id == "rsn2t":
        assert t is not None
        k = (2 * n + m - 2 * t - 4) // m
        return Union(Complement(Copies(k, _clique(m // 2))), tail)
    raise AssertionError(theorem_id)


def claimed_bound(theorem_id: str, n: int, m: int = 8, t: int | None = None) -> int:
    """The claimed Ramsey value (exact) or lower bound at (n, m, t)."""
    entry = _entry(theorem_id)
    require_valid(theorem_id, n, m=m, t=t)
    return formula_value(entry.formula, n, m=m, t=t)


# --------------------------------------------------------------------------
# the claim ledger


@dataclass(frozen=True)
class RamseyClaim:
    """One quantitative claim about R(tree family, wheel).

    ``wheel_m`` is 8 for the fixed-wheel value table and None when the
    claim ranges over every even m >= 8.  ``witness_theorem`` names the
    catalog construction certifying the lower-bound side, with
    ``witness_t`` pinning t ("1" or "m/2-2") for the specialisations;
    recorded-only claims carry no witness.
    """

    claim_id: str
    tree_family: str
    wheel_m: int | None
    n_condition: str
    kind: str
    formula: str
    witness_theorem: str | None
    witness_t: str | None
    source: str
    status: str


_CLAIMS: tuple[RamseyClaim, ...] = (
    RamseyClaim(
        claim_id="rt8-s11-even",
        tree_family="S(n;1,1)",
        wheel_m=8,
        n_condition="even n >= 6",
        kind="exact",
        formula="2n",
        witness_theorem="th2",
        witness_t=None,
        source="th2",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s11-odd",
        tree_family="S(n;1,1)",
        wheel_m=8,
        n_condition="odd n >= 5",
        kind="exact",
        formula="2n+1",
        witness_theorem="th1",
        witness_t=None,
        source="th1",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s12-even",
        tree_family="S(n;1,2)",
        wheel_m=8,
        n_condition="even n >= 8",
        kind="exact",
        formula="2n",
        witness_theorem="th3",
        witness_t=None,
        source="th3",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s12-mod4r1",
        tree_family="S(n;1,2)",
        wheel_m=8,
        n_condition="n = 1 (mod 4), n >= 9",
        kind="exact",
        formula="2n",
        witness_theorem="th5",
        witness_t=None,
        source="th5",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s12-mod4r3",
        tree_family="S(n;1,2)",
        wheel_m=8,
        n_condition="n = 3 (mod 4), n >= 11",
        kind="exact",
        formula="2n+1",
        witness_theorem="th4",
        witness_t=None,
        source="th4",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s21-even",
        tree_family="S(n;2,1)",
        wheel_m=8,
        n_condition="even n >= 8",
        kind="exact",
        formula="2n",
        witness_theorem="th3",
        witness_t=None,
        source="th3",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s21-odd",
        tree_family="S(n;2,1)",
        wheel_m=8,
        n_condition="odd n >= 9",
        kind="exact",
        formula="2n-1",
        witness_theorem="th6",
        witness_t=None,
        source="th6",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s3-even",
        tree_family="S(n;3)",
        wheel_m=8,
        n_condition="even n >= 8",
        kind="exact",
        formula="2n",
        witness_theorem="th3",
        witness_t=None,
        source="th3",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="rt8-s3-odd",
        tree_family="S(n;3)",
        wheel_m=8,
        n_condition="odd n >= 9",
        kind="exact",
        formula="2n-1",
        witness_theorem="th6",
        witness_t=None,
        source="th6",
        status="exact-with-witness",
    ),
    RamseyClaim(
        claim_id="gen-lb-r4",
        tree_family="max-degree n-3",
        wheel_m=None,
        n_condition="n = 4 (mod m/2), even m >= 8",
        kind="lower-bound",
        formula="2n+m/2-4",
        witness_theorem="lb",
        witness_t=None,
        source="lb",
        status="lower-bound-checkable",
    ),
    RamseyClaim(
        claim_id="gen-lb-r2",
        tree_family="max-degree n-3",
        wheel_m=None,
        n_condition="n = 2 (mod m/2), n >= m/2+2, even m >= 8",
        kind="lower-bound",
        formula="2n+m/2-4",
        witness_theorem="n2variant",
        witness_t=None,
        source="n2variant",
        status="lower-bound-checkable",
    ),
    RamseyClaim(
        claim_id="gen-rsn2t",
        tree_family="S(n;1,2t)",
        wheel_m=None,
        n_condition="n = t+2 (mod m/2), n >= 2t+2, 1 <= t <= m/2-2, even m >= 8",
        kind="lower-bound",
        formula="2n+m/2-t-2",
        witness_theorem="rsn2t",
        witness_t="t",
        source="rsn2t",
        status="lower-bound-checkable",
    ),
    RamseyClaim(
        claim_id="gen-rsn2t-t1",
        tree_family="S(n;1,2)",
        wheel_m=None,
        n_condition="n = 3 (mod m/2), n >= 4, even m >= 8",
        kind="lower-bound",
        formula="2n+m/2-3",
        witness_theorem="rsn2t",
        witness_t="1",
        source="rsn2t-corollary-t1",
        status="lower-bound-checkable",
    ),
    RamseyClaim(
        claim_id="gen-rsn2t-tmax",
        tree_family="S(n;1,m-4)",
        wheel_m=None,
        n_condition="n = 0 (mod m/2), n >= m-2, even m >= 8",
        kind="lower-bound",
        formula="2n",
        witness_theorem="rsn2t",
        witness_t="m/2-2",
        source="rsn2t-corollary-tmax",
        status="lower-bound-checkable",
    ),
    RamseyClaim(
        claim_id="star-w8-even",
        tree_family="S(n)",
        wheel_m=8,
        n_condition="even n >= 6",
        kind="exact",
        formula="2n+2",
        witness_theorem=None,
        witness_t=None,
        source="cited-star-even",
        status="recorded-only",
    ),
    RamseyClaim(
        claim_id="star-w8-odd",
        tree_family="S(n)",
        wheel_m=8,
        n_condition="odd n >= 5",
        kind="exact",
        formula="2n+1",
        witness_theorem=None,
        witness_t=None,
        source="cited-star-odd",
        status="recorded-only",
    ),
    RamseyClaim(
        claim_id="gen-s11-cited",
        tree_family="S(n;1,1)",
        wheel_m=None,
        n_condition="n = k*m/2+3 for integer k >= 2, even m",
        kind="lower-bound",
        formula="2n+m/2-3",
        witness_theorem=None,
        witness_t=None,
        source="cited-s11-general",
        status="recorded-only",
    ),
    RamseyClaim(
        claim_id="conjecture-maxdeg",
        tree_family="max-degree <= n-m+2",
        wheel_m=None,
        n_condition="n > m >= 4, even m",
        kind="conjectured",
        formula="2n-1",
        witness_theorem=None,
        witness_t=None,
        source="conjecture",
        status="recorded-only",
    ),
)


def all_claims() -> tuple[RamseyClaim, ...]:
    """Every quantitative claim in the catalog, in stable report order."""
    return _CLAIMS


def claims_by_id() -> dict[str, RamseyClaim]:
    return {c.claim_id: c for c in _CLAIMS}


def claims_for_theorem(theorem_id: str) -> tuple[RamseyClaim, ...]:
    """Claims whose lower-bound side the given theorem's witness certifies."""
    _entry(theorem_id)
    return tuple(c for c in _CLAIMS if c.witness_theorem == theorem_id)


def resolve_witness_t(claim: RamseyClaim, m: int) -> int | None:
    """Pin a claim's symbolic t annotation to a concrete value for wheel W_m."""
    if claim.witness_t is None or claim.witness_t == "t":
        return None
    if claim.witness_t == "1":
        return 1
    if claim.witness_t == "m/2-2":
        return m // 2 - 2
    raise CatalogError(f"unknown witness_t annotation {claim.witness_t!r}")


def catalog_hash() -> str:
    """A short digest of the claim ledger and theorem registry.

    Reports embed this value so certificates are traceable to the exact
    catalog contents they were produced from.
    """
    payload = {
        "claims": [asdict(c) for c in _CLAIMS],
        "theorems": [asdict(THEOREMS[i]) for i in THEOREM_IDS],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:12]
