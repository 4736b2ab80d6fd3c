"""Bitset graph core: construction, operations, and graph6 round-trips."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treewheel.canon import canonical_form, is_isomorphic
from treewheel.families import (
    Clique,
    CompleteBipartite,
    Cycle,
    Empty,
    JoinedStars,
    Path,
    Wheel,
    build_named,
    build_tree,
)
from treewheel.graph import (
    MAX_ORDER,
    CapacityError,
    Graph,
    Graph6ParseError,
    complement,
    degree_profile,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    induced,
)

from helpers import nx_graph6, random_graph

K4 = build_named(Clique(4))
C5 = build_named(Cycle(5))
C6 = build_named(Cycle(6))
K33 = build_named(CompleteBipartite(3, 3))
W8 = build_named(Wheel(8))
P4 = build_named(Path(4))
EMPTY0 = build_named(Empty(0))


def graphs(max_order=24):
    """Hypothesis strategy for arbitrary small graphs."""
    return st.integers(1, max_order).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=3 * n,
        ).map(lambda pairs: Graph.from_edges(n, [(u, v) for u, v in pairs if u != v]))
    )


# -- construction ------------------------------------------------------------


def test_from_edges_and_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_order_cap_enforced():
    with pytest.raises(CapacityError):
        Graph.from_edges(MAX_ORDER + 1, [])
    assert Graph.from_edges(MAX_ORDER, []).n == MAX_ORDER


def test_components_and_connectivity():
    g = disjoint_union(K4, C5)
    masks = g.component_masks()
    assert sorted(m.bit_count() for m in masks) == [4, 5]
    assert not g.is_connected()
    assert C5.is_connected()


# -- complement ---------------------------------------------------------------


def test_complement_of_clique_is_edgeless():
    assert complement(K4).edge_count == 0


def test_complement_of_two_cliques_is_complete_bipartite():
    assert is_isomorphic(complement(disjoint_union(K4, K4)),
                         build_named(CompleteBipartite(4, 4)))


def test_five_cycle_is_self_complementary():
    assert canonical_form(complement(C5)) == canonical_form(C5)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_complement_flips_every_pair(g):
    co = complement(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert co.has_edge(u, v) != g.has_edge(u, v)


# -- disjoint union -----------------------------------------------------------


def test_union_of_triangles():
    g = disjoint_union(build_named(Clique(3)), build_named(Clique(3)))
    assert g.n == 6 and g.edge_count == 6


def test_union_with_empty_is_identity():
    assert disjoint_union(K4, EMPTY0) == K4
    assert disjoint_union(EMPTY0, K4) == K4


def test_union_is_associative_up_to_isomorphism():
    a, b, c = K4, C5, K33
    left = disjoint_union(disjoint_union(a, b), c)
    right = disjoint_union(a, disjoint_union(b, c))
    assert canonical_form(left) == canonical_form(right)


def test_union_edge_count_is_additive():
    g = disjoint_union(C5, K33)
    assert g.edge_count == C5.edge_count + K33.edge_count
    assert not any(g.has_edge(u, v) for u in range(5) for v in range(5, 11))


def test_union_capacity_exceeded():
    big = Graph.from_edges(400, [])
    with pytest.raises(CapacityError):
        disjoint_union(big, big)


# -- induced subgraphs ---------------------------------------------------------


def test_induced_triangle_from_clique():
    assert induced(build_named(Clique(5)), [0, 1, 2]) == build_named(Clique(3))


def test_induced_path_from_cycle():
    assert is_isomorphic(induced(C6, [0, 1, 2, 3]), P4)


def test_induced_empty_set():
    assert induced(K4, []).n == 0


def test_induced_rejects_bad_vertices():
    with pytest.raises(ValueError):
        induced(K4, [0, 4])


@given(graphs(12), st.data())
def test_induced_preserves_edges_under_relabeling(g, data):
    verts = data.draw(st.lists(st.integers(0, g.n - 1), unique=True, max_size=g.n))
    sub = induced(g, verts)
    order = sorted(verts)
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            assert sub.has_edge(i, j) == g.has_edge(order[i], order[j])


# -- degree profile -------------------------------------------------------------


def test_degree_profile_regular_bipartite():
    assert degree_profile(build_named(CompleteBipartite(4, 4))) == (4, 4, (4,) * 8)


def test_degree_profile_joined_stars():
    lo, hi, seq = degree_profile(build_tree(JoinedStars(7, 3)))
    assert (lo, hi) == (1, 4)
    assert seq == (4, 3, 1, 1, 1, 1, 1)


def test_degree_profile_of_order_zero_graph_is_zero_sentinel():
    assert degree_profile(EMPTY0) == (0, 0, ())


@given(graphs())
def test_handshake_identity(g):
    assert 2 * g.edge_count == sum(g.degrees())


# -- graph6 ---------------------------------------------------------------------


FROZEN_ENCODINGS = [
    (EMPTY0, "?"),
    (K4, "C~"),
    (C5, "Dhc"),
    (P4, "Ch"),
    (K33, "EFz_"),
    (W8, "H|eKKF@"),
]


@pytest.mark.parametrize("graph,expected", FROZEN_ENCODINGS,
                         ids=["E0", "K4", "C5", "P4", "K33", "W8"])
def test_graph6_frozen_encodings(graph, expected):
    assert graph6_encode(graph) == expected
    assert graph6_decode(expected) == graph


@pytest.mark.parametrize("graph", [g for g, _ in FROZEN_ENCODINGS if g.n > 0],
                         ids=["K4", "C5", "P4", "K33", "W8"])
def test_graph6_matches_reference_library(graph):
    assert graph6_encode(graph) == nx_graph6(graph)


def test_graph6_long_form_size_header():
    g = Graph.from_edges(70, [])
    enc = graph6_encode(g)
    assert enc.startswith("~?@E")
    assert len(enc) == 4 + (70 * 69 // 2 + 5) // 6
    assert graph6_decode(enc) == g


def test_graph6_size_boundary_62_63():
    small = graph6_encode(Graph.from_edges(62, []))
    large = graph6_encode(Graph.from_edges(63, []))
    assert not small.startswith("~") and large.startswith("~")
    assert graph6_decode(small).n == 62
    assert graph6_decode(large).n == 63


def test_graph6_header_tolerated_on_decode_never_emitted():
    assert graph6_decode(">>graph6<<C~") == K4
    assert not graph6_encode(K4).startswith(">>")


def test_graph6_random_reference_agreement():
    rng = random.Random(2024)
    for _ in range(60):
        g = random_graph(rng.randint(1, 20), rng.random(), rng)
        assert graph6_encode(g) == nx_graph6(g)


@pytest.mark.parametrize("bad,offset", [
    ("C~\x19", 2),        # out-of-range byte
    ("C", 1),              # truncated body
    ("C~~", 2),            # trailing garbage
    ("~?", 2),             # truncated long-form size: offset is end of input
])
def test_graph6_parse_errors_carry_byte_offset(bad, offset):
    with pytest.raises(Graph6ParseError) as exc:
        graph6_decode(bad)
    assert exc.value.offset == offset
    assert str(offset) in str(exc.value)


@given(graphs(40))
@settings(max_examples=200)
def test_graph6_round_trip_is_identity(g):
    assert graph6_decode(graph6_encode(g)) == g
