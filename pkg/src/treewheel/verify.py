"""Goodness checks, bound certificates, lemma sweeps, and witness search.

A graph F is (T, W_m)-good when F contains no copy of the tree T and the
complement of F contains no copy of the wheel W_m.  A good graph of order
N certifies the lower bound R(T, W_m) >= N + 1.  This module turns the
symbolic recipes from :mod:`treewheel.catalog` into checked certificates,
sweeps small-order graph classes for lemma counterexamples, and searches
for good graphs from scratch.

Everything here is deterministic: exhaustive sweeps follow the canonical
enumeration order, and sampled sweeps draw from a seeded generator.  Two
runs with the same arguments produce identical reports.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence, Union

from .canon import is_isomorphic
from .catalog import (
    CatalogError,
    N2Recipes,
    RamseyClaim,
    RecipeExpr,
    claimed_bound,
    claims_by_id,
    claims_for_theorem,
    elaborate,
    format_recipe,
    require_valid,
    resolve_witness_t,
    trees_for,
    witness_for,
)
from .containment import contains_cycle, contains_tree, contains_wheel
from .enumeration import (
    EnumFilter,
    enumerate_graphs,
    enumerate_union_paths_cycles,
    sample_adversarial,
)
from .families import (
    Clique,
    CompleteBipartite,
    JoinedStars,
    Spider,
    TreeSpec,
    build_named,
    format_spec,
)
from .graph import Graph, complement, disjoint_union, graph6_encode


class VerifyError(ValueError):
    """Raised when a verification request is malformed."""


# ---------------------------------------------------------------------------
# Goodness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GoodnessReport:
    """Outcome of testing one host graph against one (tree, wheel) pair.

    ``tree_embedding`` maps pattern vertices to host vertices when the tree
    was found (a failure for goodness); ``wheel_embedding`` is a
    ``(hub, rim...)`` tuple in the *complement* of the host.  The host is
    good exactly when both are ``None``.
    """

    order: int
    tree: str
    wheel_m: int
    tree_embedding: Optional[tuple[int, ...]]
    wheel_embedding: Optional[tuple[int, ...]]
    is_good: bool


def is_good(host: Graph, tree: TreeSpec, wheel_m: int) -> GoodnessReport:
    """Check whether ``host`` is (tree, W_m)-good."""
    if wheel_m < 3:
        raise VerifyError(f"wheel order must be >= 3, got {wheel_m}")
    t_emb = contains_tree(host, tree)
    w_emb = contains_wheel(complement(host), wheel_m)
    return GoodnessReport(
        order=host.n,
        tree=format_spec(tree),
        wheel_m=wheel_m,
        tree_embedding=t_emb,
        wheel_embedding=w_emb,
        is_good=t_emb is None and w_emb is None,
    )


def chvatal_harary(components: int, chromatic: int) -> int:
    """Generic lower bound (chi(H) - 1) * (c(G) - 1) + 1.

    ``components`` is the component count of the sparse-side graph G and
    ``chromatic`` the chromatic number of the dense-side graph H.  Wheels
    with an even rim have chromatic number 3, so tree-versus-even-wheel
    claims must sit at or above ``chvatal_harary(n_components, 3)``.
    """
    if components < 1:
        raise VerifyError(f"component count must be >= 1, got {components}")
    if chromatic < 2:
        raise VerifyError(f"chromatic number must be >= 2, got {chromatic}")
    return (chromatic - 1) * (components - 1) + 1


# ---------------------------------------------------------------------------
# Bound certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeVerdict:
    """Containment verdict for a single tree family member."""

    tree: str
    embedding: Optional[tuple[int, ...]]

    @property
    def absent(self) -> bool:
        return self.embedding is None


@dataclass(frozen=True)
class BoundCertificate:
    """A fully checked witness for one (theorem, n) instance.

    The witness must avoid *every* tree family member the theorem covers,
    and its complement must avoid the wheel.  ``implied_bound`` is only
    populated when the witness is good; ``passed`` additionally demands
    that the witness order equals ``claimed - 1``, i.e. the construction
    really certifies the claimed formula value.
    """

    theorem_id: str
    n: int
    m: int
    t: Optional[int]
    variant: Optional[str]
    claim_ids: tuple[str, ...]
    witness_recipe: str
    witness_g6: str
    order: int
    claimed: int
    order_matches: bool
    tree_verdicts: tuple[TreeVerdict, ...]
    wheel_embedding: Optional[tuple[int, ...]]
    is_good: bool
    implied_bound: Optional[int]
    passed: bool


def _select_recipe(
    witness: Union[RecipeExpr, N2Recipes], variant: Optional[str]
) -> tuple[RecipeExpr, Optional[str]]:
    if isinstance(witness, N2Recipes):
        chosen = variant if variant is not None else "corrected"
        if chosen == "literal":
            return witness.literal, "literal"
        if chosen == "corrected":
            return witness.corrected, "corrected"
        raise VerifyError(f"variant must be 'literal' or 'corrected', got {chosen!r}")
    return witness, None


def verify_theorem(
    theorem_id: str,
    n: int,
    m: int = 8,
    t: Optional[int] = None,
    variant: Optional[str] = None,
) -> BoundCertificate:
    """Build and check the witness for one (theorem, n, m, t) instance.

    One certificate covers the whole tree family of the theorem: a row of
    tree verdicts plus a single complement-wheel verdict.  ``variant``
    only applies to constructions that ship in two forms (as-stated and
    corrected); passing it for any other theorem is rejected.
    """
    require_valid(theorem_id, n, m=m, t=t)
    witness = witness_for(theorem_id, n, m=m, t=t)
    if variant is not None and not isinstance(witness, N2Recipes):
        raise VerifyError(
            f"{theorem_id} has a single witness form; variant does not apply")
    recipe, used_variant = _select_recipe(witness, variant)
    host = elaborate(recipe)
    claimed = claimed_bound(theorem_id, n, m=m, t=t)

    verdicts = []
    for spec in trees_for(theorem_id, n, m=m, t=t):
        emb = contains_tree(host, spec)
        verdicts.append(TreeVerdict(tree=format_spec(spec), embedding=emb))
    wheel_emb = contains_wheel(complement(host), m)

    good = wheel_emb is None and all(v.absent for v in verdicts)
    order_matches = host.n == claimed - 1
    claim_ids = tuple(
        c.claim_id
        for c in claims_for_theorem(theorem_id)
        if c.witness_t in (None, "t") or resolve_witness_t(c, m) == t
    )
    return BoundCertificate(
        theorem_id=theorem_id,
        n=n,
        m=m,
        t=t,
        variant=used_variant,
        claim_ids=claim_ids,
        witness_recipe=format_recipe(recipe),
        witness_g6=graph6_encode(host),
        order=host.n,
        claimed=claimed,
        order_matches=order_matches,
        tree_verdicts=tuple(verdicts),
        wheel_embedding=wheel_emb,
        is_good=good,
        implied_bound=host.n + 1 if good else None,
        passed=good and order_matches,
    )


def verify_claim(
    claim: Union[RamseyClaim, str],
    n: int,
    m: int = 8,
    t: Optional[int] = None,
) -> BoundCertificate:
    """Check one ledger claim at a concrete n (and m, t where applicable).

    Recorded-only claims carry no witness construction and are rejected.
    Claims pinned to a specific t (the corollary rows) resolve it from m;
    an explicit conflicting ``t`` is an error.
    """
    if isinstance(claim, str):
        try:
            claim = claims_by_id()[claim]
        except KeyError:
            raise CatalogError(f"unknown claim id {claim!r}") from None
    if claim.witness_theorem is None:
        raise CatalogError(
            f"claim {claim.claim_id!r} is recorded-only (source {claim.source!r}) "
            "and has no witness construction to check")
    pinned = resolve_witness_t(claim, m)
    if claim.witness_t == "t":
        if t is None:
            raise CatalogError(f"claim {claim.claim_id!r} needs an explicit t")
    elif pinned is not None:
        if t is not None and t != pinned:
            raise CatalogError(
                f"claim {claim.claim_id!r} pins t = {pinned} at m = {m}, got t = {t}")
        t = pinned
    effective_m = claim.wheel_m if claim.wheel_m is not None else m
    cert = verify_theorem(claim.witness_theorem, n, m=effective_m, t=t)
    return dataclasses.replace(cert, claim_ids=(claim.claim_id,))


# ---------------------------------------------------------------------------
# Parallel certificate driver
# ---------------------------------------------------------------------------

#: (theorem_id, n, m, t, variant) — picklable task for the pool workers.
CertificateTask = tuple[str, int, int, Optional[int], Optional[str]]


def _run_certificate(task: CertificateTask) -> BoundCertificate:
    theorem_id, n, m, t, variant = task
    return verify_theorem(theorem_id, n, m=m, t=t, variant=variant)


def task_sort_key(task: CertificateTask):
    theorem_id, n, m, t, variant = task
    return (theorem_id, m, -1 if t is None else t, n, variant or "")


def run_certificates(
    tasks: Sequence[CertificateTask], jobs: int = 1
) -> list[BoundCertificate]:
    """Check many witness instances, optionally across processes.

    The result order is independent of scheduling: certificates come back
    sorted by (theorem, m, t, n, variant), so reports built from them are
    reproducible for any job count.
    """
    if jobs < 1:
        raise VerifyError(f"jobs must be >= 1, got {jobs}")
    ordered = sorted(tasks, key=task_sort_key)
    if jobs == 1 or len(ordered) <= 1:
        return [_run_certificate(task) for task in ordered]
    with Pool(processes=min(jobs, len(ordered))) as pool:
        return pool.map(_run_certificate, ordered)


# ---------------------------------------------------------------------------
# Lemma sweeps (exhaustive)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    """A graph that defeated a checked statement, with a short reason."""

    witness_g6: str
    detail: str


@dataclass(frozen=True)
class SweepReport:
    """Result of an exhaustive sweep over one order.

    ``in_hypothesis`` records whether the order lies inside the stated
    range of the lemma; probing below the range is allowed and any
    counterexamples found there do not contradict the lemma.
    """

    check: str
    n: int
    in_hypothesis: bool
    classes: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


_LEMMA1_MAX = 12
_LEMMA3_MAX = 12


def _missing_trees(g: Graph, specs: Iterable[TreeSpec]) -> list[str]:
    return [format_spec(s) for s in specs if contains_tree(g, s) is None]


def verify_lemma1(n: int) -> SweepReport:
    """Exhaustively check: order n >= 6, min degree >= n-3 forces both
    S(n;3) and S(n;2,1).

    Hosts with min degree >= n-3 are exactly complements of graphs with
    max degree <= 2, i.e. complements of disjoint unions of paths and
    cycles, so the sweep enumerates those unions directly.  Orders 5..12
    are accepted; n = 5 sits outside the hypothesis and is expected to
    produce counterexamples (the 5-cycle is one).
    """
    if not 5 <= n <= _LEMMA1_MAX:
        raise VerifyError(f"lemma 1 sweep supports 5 <= n <= {_LEMMA1_MAX}, got {n}")
    targets = (JoinedStars(n, 3), Spider(n, 2, 1))
    counterexamples = []
    classes = 0
    for sparse in enumerate_union_paths_cycles(n):
        classes += 1
        host = complement(sparse)
        missing = _missing_trees(host, targets)
        if missing:
            counterexamples.append(Counterexample(
                witness_g6=graph6_encode(host),
                detail=f"min degree >= {n - 3} but no " + ", no ".join(missing),
            ))
    return SweepReport(
        check="lemma1",
        n=n,
        in_hypothesis=n >= 6,
        classes=classes,
        counterexamples=tuple(counterexamples),
    )


def verify_lemma3(n: int) -> SweepReport:
    """Exhaustively check: order n >= 9, min degree >= n-4, max degree
    >= n-3 forces both S(n;3) and S(n;2,1).

    The hosts are complements of graphs with max degree <= 3 that have at
    least one vertex of degree <= 2.  Orders 5..12 are accepted; orders
    below 9 probe outside the hypothesis.
    """
    if not 5 <= n <= _LEMMA3_MAX:
        raise VerifyError(f"lemma 3 sweep supports 5 <= n <= {_LEMMA3_MAX}, got {n}")
    targets = (JoinedStars(n, 3), Spider(n, 2, 1))
    counterexamples = []
    classes = 0
    for sparse in enumerate_graphs(EnumFilter(order=n, max_degree=3)):
        if min(sparse.degrees()) > 2:
            continue  # complement would miss the max-degree >= n-3 vertex
        classes += 1
        host = complement(sparse)
        missing = _missing_trees(host, targets)
        if missing:
            counterexamples.append(Counterexample(
                witness_g6=graph6_encode(host),
                detail=(f"min degree >= {n - 4}, max degree >= {n - 3} "
                        "but no " + ", no ".join(missing)),
            ))
    return SweepReport(
        check="lemma3",
        n=n,
        in_hypothesis=n >= 9,
        classes=classes,
        counterexamples=tuple(counterexamples),
    )


# ---------------------------------------------------------------------------
# Bondy sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BondyReport:
    """Pancyclicity check over all graphs with min degree >= n/2.

    Non-pancyclic graphs isomorphic to the balanced complete bipartite
    graph are the allowed exception; anything else is a counterexample.
    """

    n: int
    classes: int
    allowed_exceptions: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


_BONDY_MAX = 9


def verify_bondy(n: int) -> BondyReport:
    """Check: min degree >= n/2 makes a graph pancyclic or K_{n/2,n/2}."""
    if not 3 <= n <= _BONDY_MAX:
        raise VerifyError(f"bondy sweep supports 3 <= n <= {_BONDY_MAX}, got {n}")
    min_deg = (n + 1) // 2
    balanced = build_named(CompleteBipartite(n // 2, n // 2)) if n % 2 == 0 else None
    classes = 0
    allowed = 0
    counterexamples = []
    for g in enumerate_graphs(EnumFilter(order=n, min_degree=min_deg)):
        classes += 1
        missing = [k for k in range(3, n + 1) if contains_cycle(g, k) is None]
        if not missing:
            continue
        if balanced is not None and is_isomorphic(g, balanced):
            allowed += 1
            continue
        counterexamples.append(Counterexample(
            witness_g6=graph6_encode(g),
            detail="no cycle of length " + ", ".join(map(str, missing)),
        ))
    return BondyReport(
        n=n,
        classes=classes,
        allowed_exceptions=allowed,
        counterexamples=tuple(counterexamples),
    )


# ---------------------------------------------------------------------------
# Sampled sweeps (orders beyond exhaustive reach)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InjectedProbe:
    """A hand-picked graph pushed through a sampled sweep.

    ``hypothesis_hit`` records whether the probe satisfied the hypothesis;
    misses are expected for probes chosen to exercise the skip path.
    """

    label: str
    order: int
    hypothesis_hit: bool


@dataclass(frozen=True)
class SampledReport:
    """Result of a seeded adversarial-sampling sweep.

    Samples that miss the hypothesis are skipped but counted; the
    conclusion is only evaluated on hits.  A report with zero hits is
    vacuous, so callers should check ``hypothesis_hits > 0``; the
    mutation strategy samples near a known hypothesis graph precisely so
    that its entry in ``strategy_hits`` stays positive.
    """

    check: str
    n: int
    seed: int
    samples: int
    hypothesis_hits: int
    strategy_hits: tuple[tuple[str, int], ...]
    counterexamples: tuple[Counterexample, ...]
    injected: tuple[InjectedProbe, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _sample_mix(
    order: int, seed: int, count: int, base: Graph
) -> Iterator[tuple[str, Graph]]:
    """Deterministic three-way strategy mix for adversarial sampling."""
    share = count // 3
    plan = (
        ("witness-mutation", share + count % 3, base),
        ("sparse-random", share, None),
        ("union-of-cliques-random", share, None),
    )
    for idx, (strategy, take, b) in enumerate(plan):
        if take == 0:
            continue
        for g in sample_adversarial(order, strategy, seed + idx, take, base=b):
            yield strategy, g


def verify_lemma2_sampled(n: int, seed: int = 0, count: int = 1000) -> SampledReport:
    """Sampled check: an order-2n graph (n >= 8) that contains S(n;1,1)
    and whose complement has no W_8 also contains S(n;1,2), S(n;2,1) and
    S(n;3).

    Order 2n is beyond exhaustive enumeration, so hosts come from seeded
    adversarial sampling around the union of two complete blocks (which
    satisfies the hypothesis).  Two fixed probes are injected on top: the
    base itself, and for even n the order-(2n-1) witness from theorem
    th2, which lacks S(n;1,1) and must be skipped as a hypothesis miss.
    """
    if n < 8:
        raise VerifyError(f"lemma 2 sweep needs n >= 8, got {n}")
    if count < 1:
        raise VerifyError(f"sample count must be >= 1, got {count}")
    hypothesis_tree = Spider(n, 1, 1)
    conclusion_trees = (Spider(n, 1, 2), Spider(n, 2, 1), JoinedStars(n, 3))
    base = elaborate_two_blocks(n)

    def hypothesis(g: Graph) -> bool:
        return (contains_tree(g, hypothesis_tree) is not None
                and contains_wheel(complement(g), 8) is None)

    hits = 0
    samples = 0
    strategy_hits: dict[str, int] = {}
    counterexamples = []

    def check(g: Graph) -> None:
        nonlocal hits
        hits += 1
        missing = _missing_trees(g, conclusion_trees)
        if missing:
            counterexamples.append(Counterexample(
                witness_g6=graph6_encode(g),
                detail="hypothesis holds but no " + ", no ".join(missing),
            ))

    for strategy, g in _sample_mix(2 * n, seed, count, base):
        samples += 1
        strategy_hits.setdefault(strategy, 0)
        if hypothesis(g):
            strategy_hits[strategy] += 1
            check(g)

    probes = []
    probe_graphs = [("two-blocks-base", base)]
    if n % 2 == 0:
        probe_graphs.append(("th2-witness", elaborate(witness_for("th2", n))))
    for label, g in probe_graphs:
        hit = hypothesis(g)
        probes.append(InjectedProbe(label=label, order=g.n, hypothesis_hit=hit))
        if hit:
            check(g)

    return SampledReport(
        check="lemma2",
        n=n,
        seed=seed,
        samples=samples,
        hypothesis_hits=hits,
        strategy_hits=tuple(strategy_hits.items()),
        counterexamples=tuple(counterexamples),
        injected=tuple(probes),
    )


def elaborate_two_blocks(n: int) -> Graph:
    """The union of two complete blocks of order n (hypothesis base).

    It contains every order-n tree inside one block, and its complement
    is complete bipartite, which carries no wheel: a wheel hub would need
    neighbors on its own side.
    """
    block = build_named(Clique(n))
    return disjoint_union(block, block)


def _cr1_structure(g: Graph, n: int) -> Optional[str]:
    """Check the forced shape: some union of components is an
    (n-3)-regular graph of order n+1, the rest has order n-1.

    Returns ``None`` when the shape matches, otherwise a short reason.
    """
    degrees = g.degrees()
    eligible_sizes = []
    other_total = 0
    for mask in g.component_masks():
        vertices = [v for v in range(g.n) if (mask >> v) & 1]
        if all(degrees[v] == n - 3 for v in vertices):
            eligible_sizes.append(len(vertices))
        else:
            other_total += len(vertices)
    if other_total > n - 1:
        return (f"vertices of degree != {n - 3} span {other_total} > {n - 1} "
                "vertices, leaving no room for the regular part")
    reachable = {0}
    for size in eligible_sizes:
        reachable |= {r + size for r in reachable}
    if n + 1 not in reachable:
        return (f"no union of {n - 3}-regular components has order {n + 1}")
    return None


def verify_cr1(n: int, seed: int = 0, count: int = 1000) -> SampledReport:
    """Sampled check of the structure corollary: an order-2n graph
    (odd n >= 7) with no S(n;1,1) and no W_8 in the complement splits
    into an (n-3)-regular part of order n+1 and a rest of order n-1.

    The witness-mutation base is the checked th1 witness, which satisfies
    the hypothesis, so the sweep is guaranteed at least one hit.  The
    union of two complete blocks is injected as a deliberate miss (it
    contains S(n;1,1)).
    """
    if n < 7 or n % 2 == 0:
        raise VerifyError(f"structure corollary needs odd n >= 7, got {n}")
    if count < 1:
        raise VerifyError(f"sample count must be >= 1, got {count}")
    hypothesis_tree = Spider(n, 1, 1)
    base = elaborate(witness_for("th1", n))

    def hypothesis(g: Graph) -> bool:
        return (contains_tree(g, hypothesis_tree) is None
                and contains_wheel(complement(g), 8) is None)

    hits = 0
    samples = 0
    strategy_hits: dict[str, int] = {}
    counterexamples = []

    def check(g: Graph) -> None:
        nonlocal hits
        hits += 1
        reason = _cr1_structure(g, n)
        if reason is not None:
            counterexamples.append(
                Counterexample(witness_g6=graph6_encode(g), detail=reason))

    for strategy, g in _sample_mix(2 * n, seed, count, base):
        samples += 1
        strategy_hits.setdefault(strategy, 0)
        if hypothesis(g):
            strategy_hits[strategy] += 1
            check(g)

    probes = []
    for label, g in (("th1-witness", base), ("two-blocks-base", elaborate_two_blocks(n))):
        hit = hypothesis(g)
        probes.append(InjectedProbe(label=label, order=g.n, hypothesis_hit=hit))
        if hit:
            check(g)

    return SampledReport(
        check="cr1",
        n=n,
        seed=seed,
        samples=samples,
        hypothesis_hits=hits,
        strategy_hits=tuple(strategy_hits.items()),
        counterexamples=tuple(counterexamples),
        injected=tuple(probes),
    )


# ---------------------------------------------------------------------------
# Witness search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchOutcome:
    """Result of an exhaustive pruned search for a good graph.

    ``status`` is one of ``"found"``, ``"exhausted-space"`` (no good graph
    of the requested order exists) or ``"budget-exceeded"``.
    ``nodes_expanded`` counts every partial graph the search examined.
    """

    status: str
    order: int
    witness_g6: Optional[str]
    nodes_expanded: int
    seed: int


class _BudgetHit(Exception):
    pass


DEFAULT_SEARCH_BUDGET = 10**8


def search_good(
    tree: TreeSpec,
    wheel_m: int,
    order: int,
    budget_nodes: int = DEFAULT_SEARCH_BUDGET,
    seed: int = 0,
) -> SearchOutcome:
    """Search for a (tree, W_m)-good graph of exactly ``order`` vertices.

    The search grows graphs one vertex at a time in canonical order and
    cuts a branch as soon as the tree appears (tree containment survives
    adding vertices) or the complement of the partial graph carries the
    wheel (an induced subgraph of the final complement).  Exhausting the
    space therefore proves no good graph of that order exists.

    The exploration order is fixed, so the outcome does not depend on
    ``seed``; it is recorded for report provenance only.
    """
    if wheel_m < 3:
        raise VerifyError(f"wheel order must be >= 3, got {wheel_m}")
    if order < 1:
        raise VerifyError(f"order must be >= 1, got {order}")
    if budget_nodes < 1:
        raise VerifyError(f"budget must be >= 1 node, got {budget_nodes}")
    nodes = 0

    def keep(g: Graph) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget_nodes:
            raise _BudgetHit
        if contains_tree(g, tree) is not None:
            return False
        if g.n > wheel_m and contains_wheel(complement(g), wheel_m) is not None:
            return False
        return True

    try:
        for g in enumerate_graphs(EnumFilter(order=order, prune=keep)):
            report = is_good(g, tree, wheel_m)
            if not report.is_good:  # pragma: no cover - prune already ensures this
                continue
            return SearchOutcome(
                status="found",
                order=order,
                witness_g6=graph6_encode(g),
                nodes_expanded=nodes,
                seed=seed,
            )
    except _BudgetHit:
        return SearchOutcome(
            status="budget-exceeded",
            order=order,
            witness_g6=None,
            nodes_expanded=nodes,
            seed=seed,
        )
    return SearchOutcome(
        status="exhausted-space",
        order=order,
        witness_g6=None,
        nodes_expanded=nodes,
        seed=seed,
    )
