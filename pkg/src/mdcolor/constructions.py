"""Explicit extremal colorings and the named graph families they live on."""

from __future__ import annotations

import random
from typing import Sequence

from mdcolor.coloring import EdgeColoring, canonicalize, verify_md
from mdcolor.errors import DomainError
from mdcolor.graph import (
    Graph,
    block_decomposition,
    build_graph,
    complement,
    cycle_graph,
)


def cycle_coloring(length: int) -> list[int]:
    """Colors for the edges e_1..e_length of a cycle, in walk order.

    With r = length // 2, edge e_j receives color j mod r. Every class then has at
    least two edges spread around the cycle.
    """
    r = length // 2
    return list(canonicalize([j % r + 1 for j in range(1, length + 1)]))


def color_cycle(n: int) -> tuple[Graph, EdgeColoring]:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return cycle_graph(n), EdgeColoring(cycle_coloring(n))


def color_tree(T: Graph) -> EdgeColoring:
    if not T.is_tree():
        raise DomainError("input is not a tree")
    return EdgeColoring(range(1, T.m + 1))


def unicyclic_cycle(G: Graph) -> list[int]:
    """Vertices of the unique cycle in walk order, found by peeling leaves."""
    if G.m != G.n or not G.is_connected():
        raise DomainError("graph is not connected with exactly one cycle (need m = n, connected)")
    deg = G.degrees()
    alive = [True] * G.n
    leaves = [v for v in range(G.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive[v] = False
        for w in G.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    start = min(v for v in range(G.n) if alive[v])
    walk = [start]
    prev, cur = -1, start
    while True:
        nxt = min(w for w in G.adjacency[cur] if alive[w] and w != prev)
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return walk


def color_unicyclic(G: Graph) -> EdgeColoring:
    walk = unicyclic_cycle(G)
    L = len(walk)
    cyc_colors = cycle_coloring(L)
    colors = [0] * G.m
    for j in range(L):
        e = G.edge_id(walk[j], walk[(j + 1) % L])
        colors[e] = cyc_colors[j]
    nxt = max(cyc_colors) + 1
    for e in range(G.m):
        if colors[e] == 0:
            colors[e] = nxt
            nxt += 1
    return canonicalize(colors)


def compose_block_colorings(G: Graph, per_block: Sequence[EdgeColoring | Sequence[int]]) -> EdgeColoring:
    """Glue per-block MD-colorings with disjoint palettes.

    ``per_block[i]`` colors the edges of block ``i`` listed in increasing edge id.
    """
    bd = block_decomposition(G)
    if len(per_block) != len(bd.blocks):
        raise DomainError(f"expected {len(bd.blocks)} block colorings, got {len(per_block)}")
    colors = [0] * G.m
    offset = 0
    for i, (ids, bc) in enumerate(zip(bd.blocks, per_block)):
        bc = canonicalize(bc)
        sub, _ = G.edge_subgraph(ids)
        if len(bc) != len(ids) or not verify_md(sub, bc):
            raise DomainError(f"coloring of block {i} (edges {list(ids)}) is not an MD-coloring")
        for e, c in zip(ids, bc.colors):
            colors[e] = c + offset
        offset += bc.palette_size
    out = canonicalize(colors)
    if not verify_md(G, out):
        raise AssertionError("composed block colorings failed verification")
    return out


def broom(n: int) -> Graph:
    """Star centred at 0 with leaves 1..n-2, plus the edge (n-2, n-1)."""
    if n < 4:
        raise DomainError(f"broom needs n >= 4, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n - 1)] + [(n - 2, n - 1)])


def ng_lower_graph(n: int) -> Graph:
    """Complete bipartite (A+{a,u}, B+{b,v}) minus the 4-cycle a-b-u-v.

    Surplus vertices go to A first. Labels: A, a, u, B, b, v in that order.
    """
    if n < 8:
        raise DomainError(f"ng_lower_graph needs n >= 8, got {n}")
    size_b = (n - 4) // 2
    size_a = n - 4 - size_b
    A = list(range(size_a))
    a, u = size_a, size_a + 1
    B = list(range(size_a + 2, size_a + 2 + size_b))
    b, v = size_a + 2 + size_b, size_a + 3 + size_b
    left, right = A + [a, u], B + [b, v]
    removed = {(a, b), (u, b), (u, v), (a, v)}
    pairs = [(x, y) for x in left for y in right if (x, y) not in removed]
    return build_graph(n, pairs)


def n6_product_lower_pair() -> tuple[Graph, Graph]:
    """C_5 on 0..4 with a pendant vertex 5 hung on vertex 0, and its complement."""
    G = build_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)])
    return G, complement(G)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise DomainError("tree needs n >= 1")
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    pairs.append((u, w))
    return build_graph(n, pairs)


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Random tree plus one extra edge between non-adjacent vertices."""
    if n < 3:
        raise DomainError("unicyclic graph needs n >= 3")
    T = random_tree(n, rng)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not T.has_edge(u, v)]
    return build_graph(n, list(T.edges) + [rng.choice(non_edges)])


def random_connected(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``m - n + 1`` random extra edges."""
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise DomainError(f"no connected graph with n={n}, m={m}")
    T = random_tree(n, rng)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not T.has_edge(u, v)]
    extra = rng.sample(non_edges, m - (n - 1))
    return build_graph(n, list(T.edges) + extra)


def random_two_connected_chordal(n: int, rng: random.Random) -> Graph:
    """Grow from a triangle; each new vertex attaches to a clique of size >= 2."""
    if n < 3:
        raise DomainError("2-connected chordal sample needs n >= 3")
    pairs = [(0, 1), (0, 2), (1, 2)]
    cliques = [[0, 1, 2]]
    for v in range(3, n):
        base = rng.choice(cliques)
        k = rng.randint(2, len(base))
        chosen = sorted(rng.sample(base, k))
        pairs += [(x, v) for x in chosen]
        cliques.append(chosen + [v])
    return build_graph(n, pairs)
