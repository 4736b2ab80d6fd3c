"""Shared test utilities: independent oracles and random graph builders.

The oracles here deliberately avoid the package's own algorithms:
networkx supplies reference graph6 encoding and subgraph-monomorphism
decisions, and the partition counter below counts path/cycle unions
without enumerating any graphs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx

from treewheel.graph import Graph


def random_graph(order: int, density: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(order) for v in range(u + 1, order)
             if rng.random() < density]
    return Graph.from_edges(order, edges)


def graph_from_mask(order: int, mask: int) -> Graph:
    """Build a graph from a bitmask over the upper-triangle pair list."""
    pairs = list(combinations(range(order), 2))
    return Graph.from_edges(
        order, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def permuted(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def to_networkx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_has_subgraph(host: Graph, pattern: Graph) -> bool:
    """Reference (non-induced) subgraph containment via networkx."""
    matcher = nx.algorithms.isomorphism.GraphMatcher(
        to_networkx(host), to_networkx(pattern))
    return matcher.subgraph_is_monomorphic()


def nx_graph6(g: Graph) -> str:
    """Reference graph6 encoding via networkx."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def hamming_edges(a: Graph, b: Graph) -> int:
    return len(edge_set(a) ^ edge_set(b))


def path_cycle_union_count(n: int) -> int:
    """Count multisets of paths (size >= 1) and cycles (size >= 3)
    covering n vertices, by direct partition recursion."""
    def gen(remaining: int, max_key: tuple[int, int]) -> int:
        if remaining == 0:
            return 1
        total = 0
        for size in range(min(remaining, max_key[0]), 0, -1):
            for is_cycle in (1, 0):
                if is_cycle and size < 3:
                    continue
                key = (size, is_cycle)
                if key > max_key:
                    continue
                total += gen(remaining - size, key)
        return total

    return gen(n, (n, 1))


def brute_force_is_subgraph(host: Graph, pattern: Graph) -> bool:
    """Tiny-order containment oracle by raw vertex-map enumeration."""
    if pattern.n > host.n:
        return False
    p_edges = list(pattern.edges())
    for mapping in permutations(range(host.n), pattern.n):
        if all(host.has_edge(mapping[u], mapping[v]) for u, v in p_edges):
            return True
    return False
