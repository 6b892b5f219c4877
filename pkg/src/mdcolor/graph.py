"""Simple undirected graphs with dense integer ids, plus decompositions and transforms.

Vertices are ``0..n-1``. Edges keep the order in which they were given (after
dropping repeated pairs), and that order defines the edge ids used by
colorings. Every edge is stored as ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from mdcolor.errors import DomainError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self.edge_index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_mask[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph spanned by ``edge_ids``, relabelled densely.

        Returns the subgraph and the list mapping new vertex ids to old ones.
        Edge ``i`` of the result is the ``i``-th id of ``edge_ids``.
        """
        ids = list(edge_ids)
        verts = sorted({x for i in ids for x in self.edges[i]})
        relabel = {v: k for k, v in enumerate(verts)}
        sub = build_graph(len(verts), [(relabel[self.edges[i][0]], relabel[self.edges[i][1]]) for i in ids])
        return sub, verts

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        verts = sorted(set(vertices))
        relabel = {v: k for k, v in enumerate(verts)}
        pairs = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return build_graph(len(verts), pairs), verts

    def delete_vertex(self, v: int) -> tuple["Graph", list[int]]:
        return self.induced_subgraph(x for x in range(self.n) if x != v)


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Build the underlying simple graph of a loopless multigraph.

    Repeated pairs collapse onto the first occurrence, which keeps its position
    in the edge order.
    """
    if n < 0:
        raise DomainError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise DomainError(f"loop edge ({u}, {v}) is not allowed")
        e = (u, v) if u < v else (v, u)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Graph(n, tuple(edges))


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * G.n
    parts = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        part = []
        while stack:
            x = stack.pop()
            part.append(x)
            for y in G.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        parts.append(sorted(part))
    return parts


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    is_bridge: tuple[bool, ...]

    def block_vertices(self, G: Graph, i: int) -> list[int]:
        return sorted({x for e in self.blocks[i] for x in G.edges[e]})


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Blocks (as edge-id sets) and cut vertices via iterative lowpoint DFS."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    # incident (neighbour, edge id) lists
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(G.edges):
        inc[u].append((v, i))
        inc[v].append((u, i))

    t = 0
    for root in range(n):
        if disc[root] != -1 or not inc[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[int] = []
        root_children = 0
        # frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, pos = stack[-1]
            if pos < len(inc[v]):
                stack[-1] = (v, pe, pos + 1)
                w, ei = inc[v][pos]
                if ei == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(ei)
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, ei, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(ei)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    break
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cut.add(u)
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == pe:
                            break
                    blocks.append(tuple(sorted(comp)))
        if root_children > 1:
            cut.add(root)

    blocks.sort(key=lambda b: b[0])
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cut),
        is_bridge=tuple(len(b) == 1 for b in blocks),
    )


def bridge_flags(G: Graph) -> list[bool]:
    flags = [False] * G.m
    bd = block_decomposition(G)
    for b, br in zip(bd.blocks, bd.is_bridge):
        if br:
            flags[b[0]] = True
    return flags


def is_two_connected(G: Graph) -> bool:
    if G.n < 3 or not G.is_connected():
        return False
    return len(block_decomposition(G).blocks) == 1


def complement(G: Graph) -> Graph:
    pairs = [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)]
    return Graph(G.n, tuple(pairs))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H (H shifted above G) plus all cross edges."""
    off = G.n
    pairs = list(G.edges)
    pairs += [(u + off, v + off) for u, v in H.edges]
    pairs += [(u, w + off) for u in range(G.n) for w in range(H.n)]
    return build_graph(G.n + H.n, pairs)


def _ball2_masks(G: Graph) -> list[int]:
    adj = G.adj_mask
    out = []
    for v in range(G.n):
        reach = adj[v]
        r = adj[v]
        while r:
            low_bit = r & -r
            reach |= adj[low_bit.bit_length() - 1]
            r ^= low_bit
        out.append(reach & ~(1 << v))
    return out


def square(G: Graph) -> Graph:
    if G.m < 1:
        raise DomainError("square needs at least one edge")
    ball = _ball2_masks(G)
    pairs = [(u, v) for u, v in combinations(range(G.n), 2) if (ball[u] >> v) & 1]
    return Graph(G.n, tuple(pairs))


def line_graph(G: Graph) -> Graph:
    if G.m < 1:
        raise DomainError("line graph needs at least one edge")
    pairs = []
    for i, j in combinations(range(G.m), 2):
        if set(G.edges[i]) & set(G.edges[j]):
            pairs.append((i, j))
    return Graph(G.m, tuple(pairs))


def common_neighbors(G: Graph, u: int, v: int) -> set[int]:
    if u == v:
        raise DomainError("common_neighbors needs two distinct vertices")
    mask = G.adj_mask[u] & G.adj_mask[v]
    return {w for w in range(G.n) if (mask >> w) & 1}


def is_triangular(G: Graph) -> bool:
    adj = G.adj_mask
    return all(adj[u] & adj[v] for u, v in G.edges)


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(G.n)):
        return False
    for v in order:
        later = [w for w in G.adjacency[v] if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if not G.has_edge(a, b):
                return False
    return True


def is_chordal(G: Graph) -> Optional[list[int]]:
    """Simplicial order via maximum-cardinality search, or None if not chordal."""
    n = G.n
    weight = [0] * n
    numbered = [False] * n
    visit = []
    for _ in range(n):
        # ties broken by smallest id for determinism
        v = max((x for x in range(n) if not numbered[x]), key=lambda x: (weight[x], -x))
        numbered[v] = True
        visit.append(v)
        for w in G.adjacency[v]:
            if not numbered[w]:
                weight[w] += 1
    order = visit[::-1]
    return order if is_perfect_elimination_order(G, order) else None


def is_complete_multipartite(G: Graph) -> Optional[list[list[int]]]:
    """Parts of a complete multipartite graph, or None.

    Vertices are grouped by equal closed non-neighbourhoods; the grouping is then
    checked to be a genuine complete multipartite structure.
    """
    full = (1 << G.n) - 1
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        key = full & ~G.adj_mask[v]
        groups.setdefault(key, []).append(v)
    parts = sorted(groups.values(), key=lambda p: p[0])
    for key, part in groups.items():
        pmask = sum(1 << v for v in part)
        if key != pmask:
            return None
    return parts


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise DomainError("part sizes must be positive")
    label = []
    for k, s in enumerate(sizes):
        label += [k] * s
    n = len(label)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise DomainError("K_n minus an edge needs n >= 2")
    return build_graph(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the set bits of ``mask`` over lexicographic pairs."""
    pairs = [p for k, p in enumerate(combinations(range(n), 2)) if (mask >> k) & 1]
    return Graph(n, tuple(pairs))


def graph_to_mask(G: Graph) -> int:
    mask = 0
    for k, (u, v) in enumerate(combinations(range(G.n), 2)):
        if G.has_edge(u, v):
            mask |= 1 << k
    return mask
