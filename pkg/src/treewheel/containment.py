"""Exact subgraph containment.

All containment here is ordinary (non-induced) subgraph containment.
Every decider is exhaustive, so None is a proof of absence, and every
positive answer is validated edge-by-edge against the pattern before it
is returned.  Embeddings are tuples indexed by pattern vertex, found
deterministically (candidates scanned in ascending order).
"""
from __future__ import annotations

from .graph import Graph, CapacityError, bits
from . import families
from .families import TreeSpec, Star, Spider, JoinedStars

Embedding = tuple[int, ...]

PATTERN_CAP = 16


def check_embedding(host: Graph, pattern: Graph, emb) -> bool:
    """Injective map carrying every pattern edge to a host edge."""
    if len(emb) != pattern.n or len(set(emb)) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in emb):
        return False
    for u, v in pattern.edges():
        if not host.has_edge(emb[u], emb[v]):
            return False
    return True


def _validated(host: Graph, pattern: Graph, emb):
    emb = tuple(emb)
    if not check_embedding(host, pattern, emb):
        raise AssertionError(f"decider produced an invalid embedding {emb}")
    return emb


# -- generic oracle ----------------------------------------------------------


def _pattern_order(pattern: Graph) -> list[int]:
    """Vertex order for backtracking: highest degree first, then greedy
    max-connectivity to the placed prefix (BFS-like per component)."""
    n = pattern.n
    degs = pattern.degrees()
    placed: list[int] = []
    placed_mask = 0
    while len(placed) < n:
        best_v, best_key = -1, None
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            conn = (pattern.rows[v] & placed_mask).bit_count()
            key = (conn, degs[v], -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        placed.append(best_v)
        placed_mask |= 1 << best_v
    return placed


def subgraph_iso(host: Graph, pattern: Graph):
    """Embedding of pattern into host, or None.  Pattern order <= 16."""
    if pattern.n > PATTERN_CAP:
        raise CapacityError(f"pattern order {pattern.n} exceeds cap {PATTERN_CAP}")
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return None
    if np_ == 0:
        return ()
    order = _pattern_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    prior: list[list[int]] = []
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        prior.append([u for u in pattern.neighbors(v) if pos[u] < i])
    full = (1 << nh) - 1
    image = {}

    def bt(i: int, used: int) -> bool:
        if i == np_:
            return True
        v = order[i]
        cand = ~used & full
        for u in prior[i]:
            cand &= host.rows[image[u]]
        need = pdeg[v]
        for h in bits(cand):
            if hdeg[h] < need:
                continue
            image[v] = h
            if bt(i + 1, used | (1 << h)):
                return True
        image.pop(v, None)
        return False

    if not bt(0, 0):
        return None
    emb = tuple(image[v] for v in range(np_))
    return _validated(host, pattern, emb)


# -- cycles and wheels --------------------------------------------------------


def _two_core(rows, mask: int) -> int:
    changed = True
    while changed and mask:
        changed = False
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if (rows[v] & mask).bit_count() < 2:
                mask &= ~low
                changed = True
    return mask


def _greedy_independent(rows, mask: int) -> int:
    """Greedy (min degree first) independent set within mask, as a mask."""
    out = 0
    avail = mask
    while avail:
        best_v, best_d = -1, 1 << 30
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (rows[v] & avail).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        out |= 1 << best_v
        avail &= ~(rows[best_v] | (1 << best_v))
    return out


def _components_of(rows, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _cycle_in_mask(rows, mask: int, k: int):
    """Vertices of a k-cycle inside mask, in cycle order, or None."""
    half_up = (k + 1) // 2
    for comp in _components_of(rows, mask):
        comp = _two_core(rows, comp)
        if comp.bit_count() < k:
            continue
        # No independent set can occupy two consecutive rim slots, so a
        # k-cycle needs ceil(k/2) vertices outside any independent set.
        indep = _greedy_independent(rows, comp)
        if (comp & ~indep).bit_count() < half_up:
            continue
        avail = comp
        for s in bits(comp):
            if not (avail >> s) & 1:
                continue
            allowed = avail  # all cycles through s live here
            srow = rows[s]
            path = [s]

            def dfs(cur: int, visited: int, rem: int) -> bool:
                cand = rows[cur] & allowed & ~visited
                if rem == 1:
                    cand &= srow
                    if cand:
                        path.append(bits(cand)[0])
                        return True
                    return False
                if (allowed & ~visited).bit_count() < rem:
                    return False
                for v in bits(cand):
                    path.append(v)
                    if dfs(v, visited | (1 << v), rem - 1):
                        return True
                    path.pop()
                return False

            if dfs(s, 1 << s, k - 1):
                return path
            avail &= ~(1 << s)  # cycles through s exhausted
            avail = _two_core(rows, avail)
            if avail.bit_count() < k:
                break
    return None


def contains_cycle(host: Graph, k: int):
    """Embedding of the k-cycle (rim in cycle order), or None."""
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    if host.n < k:
        return None
    rim = _cycle_in_mask(host.rows, (1 << host.n) - 1, k)
    if rim is None:
        return None
    return _validated(host, families.build_named(families.Cycle(k)), rim)


def contains_wheel(host: Graph, m: int):
    """Embedding of the m-rim wheel (hub first, rim in cycle order), or None.

    Hubs are scanned in increasing degree order; a hub needs m rim
    neighbors, and the rim search is exhaustive per hub.
    """
    if m < 3:
        raise ValueError(f"wheel rim must be >= 3, got {m}")
    if host.n < m + 1:
        return None
    hubs = sorted(range(host.n), key=lambda v: (host.degree(v), v))
    for hub in hubs:
        nb = host.rows[hub]
        if nb.bit_count() < m:
            continue
        rim = _cycle_in_mask(host.rows, nb, m)
        if rim is not None:
            emb = (hub, *rim)
            return _validated(host, families.build_named(families.Wheel(m)), emb)
    return None


# -- catalog trees -------------------------------------------------------------


def _leaf_fill(row: int, exclude: int, count: int) -> list[int]:
    return bits(row & ~exclude)[:count]


def _star_emb(host: Graph, n: int):
    for v in range(host.n):
        if host.degree(v) >= n - 1:
            return (v, *bits(host.rows[v])[: n - 1])
    return None


def _one_path_spider_emb(host: Graph, n: int, steps: int):
    """Center, n-steps-2 leaves, then a path of steps+1 vertices."""
    plain = n - steps - 2
    full = (1 << host.n) - 1
    for v in range(host.n):
        vrow = host.rows[v]
        budget = vrow.bit_count() - plain  # path vertices allowed inside N(v)
        if budget < 1:
            continue
        out_mask = ~vrow & full & ~(1 << v)
        path: list[int] = []

        def dfs(cur: int, visited: int, rem: int, ins: int) -> bool:
            if rem == 0:
                return True
            outs_left = (out_mask & ~visited).bit_count()
            if ins + max(0, rem - outs_left) > budget:
                return False
            for u in bits(host.rows[cur] & ~visited):
                nins = ins + ((vrow >> u) & 1)
                if nins > budget:
                    continue
                path.append(u)
                if dfs(u, visited | (1 << u), rem - 1, nins):
                    return True
                path.pop()
            return False

        if dfs(v, 1 << v, steps + 1, 0):
            used = 1 << v
            for u in path:
                used |= 1 << u
            leaves = _leaf_fill(vrow, used, plain)
            return (v, *leaves, *path)
    return None


def _two_path_spider_emb(host: Graph, n: int):
    """Center, n-5 leaves, two disjoint 2-edge paths."""
    plain = n - 5
    for v in range(host.n):
        vrow = host.rows[v]
        if vrow.bit_count() < plain + 2:
            continue
        for u1 in bits(vrow):
            for w1 in bits(host.rows[u1] & ~(1 << v)):
                block1 = (1 << u1) | (1 << w1)
                for u2 in bits(vrow & ~block1):
                    cand_w2 = host.rows[u2] & ~block1 & ~(1 << v) & ~(1 << u2)
                    for w2 in bits(cand_w2):
                        used = (1 << v) | block1 | (1 << u2) | (1 << w2)
                        if (vrow & ~used).bit_count() >= plain:
                            leaves = _leaf_fill(vrow, used, plain)
                            return (v, *leaves, u1, w1, u2, w2)
    return None


def _joined_stars_emb(host: Graph, n: int, side: int):
    """Two adjacent centers of degrees n-side and side, leaves filled in."""
    big_leaves = max(n - side, side) - 1
    small_leaves = min(n - side, side) - 1
    for v in range(host.n):
        vrow = host.rows[v]
        if vrow.bit_count() < (n - side - 1) + 1:
            continue
        for u in bits(vrow):
            urow = host.rows[u] & ~(1 << v)
            outs = urow & ~vrow
            n_out = outs.bit_count()
            overlap = max(0, (side - 1) - n_out)  # forced picks inside N(v)
            if urow.bit_count() < side - 1:
                continue
            if vrow.bit_count() - 1 - overlap < n - side - 1:
                continue
            picked = bits(outs)[: min(side - 1, n_out)]
            if overlap:
                picked += bits(urow & vrow & ~(1 << u))[:overlap]
            wmask = 0
            for w in picked:
                wmask |= 1 << w
            leaves = _leaf_fill(vrow, wmask | (1 << u) | (1 << v), n - side - 1)
            if n - side >= side:
                return (v, *leaves, u, *picked)
            return (u, *picked, v, *leaves)
    return None


def contains_tree(host: Graph, spec: TreeSpec):
    """Embedding of the catalog tree, or None (a proof of absence).

    Star, one-subdivided-path spiders, the two-path spider, and joined
    stars get direct combinatorial searches; anything else falls back to
    the generic oracle (pattern order <= 16).
    """
    spec.validate()
    n = spec.n
    if host.n < n:
        return None
    if isinstance(spec, Star):
        emb = _star_emb(host, n)
    elif isinstance(spec, Spider) and spec.legs == 1:
        emb = _one_path_spider_emb(host, n, spec.steps)
    elif isinstance(spec, Spider) and spec.legs == 2 and spec.steps == 1:
        emb = _two_path_spider_emb(host, n)
    elif isinstance(spec, JoinedStars):
        emb = _joined_stars_emb(host, n, spec.side)
    else:
        return subgraph_iso(host, families.build_tree(spec))
    if emb is None:
        return None
    return _validated(host, families.build_tree(spec), emb)
