"""Exact verification workbench for tree-versus-wheel Ramsey lower bounds.

The package is organized bottom-up:

- :mod:`treewheel.graph` — immutable bitset graphs and graph6 I/O
- :mod:`treewheel.canon` — canonical forms, isomorphism, orbits
- :mod:`treewheel.families` — tree and named-graph specs and builders
- :mod:`treewheel.containment` — exact tree/wheel/cycle/subgraph decisions
- :mod:`treewheel.enumeration` — isomorph-free generation and sampling
- :mod:`treewheel.catalog` — claim ledger and symbolic witness recipes
- :mod:`treewheel.verify` — goodness certificates, lemma sweeps, search
- :mod:`treewheel.reports` — deterministic records and text tables
- :mod:`treewheel.cli` — the ``treewheel`` command
"""

__version__ = "0.1.0"

from .canon import automorphism_orbits, canonical_form, is_isomorphic
from .catalog import (
    CatalogError,
    ConditionError,
    N2Recipes,
    RamseyClaim,
    THEOREM_IDS,
    UnknownTheoremError,
    all_claims,
    catalog_hash,
    claimed_bound,
    claims_for_theorem,
    condition_holds,
    elaborate,
    format_recipe,
    smallest_valid_ns,
    witness_for,
)
from .containment import (
    check_embedding,
    contains_cycle,
    contains_tree,
    contains_wheel,
    subgraph_iso,
)
from .enumeration import (
    EnumFilter,
    enumerate_graphs,
    enumerate_trees,
    enumerate_union_paths_cycles,
    sample_adversarial,
)
from .families import (
    Clique,
    CompleteBipartite,
    Cycle,
    Empty,
    JoinedStars,
    Path,
    Spider,
    Star,
    Wheel,
    build,
    build_named,
    build_tree,
    classify_tree,
    format_spec,
    parse_spec,
    spec_max_degree,
)
from .graph import (
    CapacityError,
    Graph,
    Graph6ParseError,
    complement,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    induced,
)
from .verify import (
    BondyReport,
    BoundCertificate,
    GoodnessReport,
    SampledReport,
    SearchOutcome,
    SweepReport,
    chvatal_harary,
    is_good,
    run_certificates,
    search_good,
    verify_bondy,
    verify_claim,
    verify_cr1,
    verify_lemma1,
    verify_lemma2_sampled,
    verify_lemma3,
    verify_theorem,
)
