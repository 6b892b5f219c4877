"""Exact monochromatic disconnection numbers.

md(G) is additive over blocks, so the solver works block by block: bridges give
1, cycles follow the floor(|C|/2) formula, a closure certificate gives 1, and any
other 2-connected block goes to a depth-first search over canonical partitions of
its edges, starting from the floor(n_B/2) ceiling and walking down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from mdcolor.certificate import md1_certificate
from mdcolor.coloring import EdgeColoring, canonicalize, verify_md
from mdcolor.constructions import color_unicyclic, compose_block_colorings
from mdcolor.errors import DomainError
from mdcolor.graph import Graph, block_decomposition, bridge_flags

BRIDGE = "bridge"
CYCLE = "cycle-formula"
CERTIFICATE = "closure-certificate"
SEARCH = "search"


@dataclass
class BlockResult:
    edges: tuple[int, ...]
    method: str
    value: int


@dataclass
class MdResult:
    value: int
    witness: EdgeColoring
    blocks: list[BlockResult] = field(default_factory=list)
    bounds_log: list[tuple[int, str]] = field(default_factory=list)

    @property
    def method(self) -> list[str]:
        return [b.method for b in self.blocks]

    def to_json(self) -> dict:
        return {
            "md": self.value,
            "witness": list(self.witness.colors),
            "blocks": [{"edges": list(b.edges), "method": b.method, "value": b.value} for b in self.blocks],
            "bounds": [[b, s] for b, s in self.bounds_log],
        }


def upper_bound(G: Graph) -> tuple[int, list[str]]:
    """Block-sum bound: 1 per bridge, floor(n_B/2) per 2-connected block."""
    if not G.is_connected():
        raise DomainError("upper_bound needs a connected graph")
    bd = block_decomposition(G)
    total = 0
    n_bridges = 0
    n_blocks = 0
    for i, ids in enumerate(bd.blocks):
        if bd.is_bridge[i]:
            total += 1
            n_bridges += 1
        else:
            total += len(bd.block_vertices(G, i)) // 2
            n_blocks += 1
    sources = ["block additivity"]
    if n_bridges:
        sources.append(f"{n_bridges} bridge block(s) contribute 1 each")
    if n_blocks:
        sources.append(f"{n_blocks} 2-connected block(s) contribute floor(n_B/2) each")
    if G.is_tree():
        sources.append("tree: n-1")
    return total, sources


def has_three_common_neighbors(G: Graph) -> bool:
    if G.n < 2:
        raise DomainError("has_three_common_neighbors needs n >= 2")
    adj = G.adj_mask
    return all((adj[u] & adj[v]).bit_count() >= 3 for u, v in combinations(range(G.n), 2))


def _search_order(G: Graph) -> list[int]:
    """Edge order that closes cycles early: prefer edges inside the touched set."""
    remaining = set(range(G.m))
    touched: set[int] = set()
    order = []
    while remaining:
        inside = [e for e in remaining if G.edges[e][0] in touched and G.edges[e][1] in touched]
        if inside:
            e = min(inside)
        else:
            frontier = [e for e in remaining if G.edges[e][0] in touched or G.edges[e][1] in touched]
            e = min(frontier) if frontier else min(remaining)
        remaining.discard(e)
        touched.update(G.edges[e])
        order.append(e)
    return order


class _PartitionSearch:
    """Depth-first search over restricted-growth colorings of the edges.

    A partial coloring is cut off when
      * some cycle made of colored edges carries a color exactly once (the edge
        with that color could never be split from its own endpoint), checked as:
        both ends of a color-c edge are joined by colored edges of other colors;
      * two vertices are joined by colored edges, and also joined avoiding each
        single color in use, so no class can ever separate them;
      * the uncolored edges cannot lift the palette to the target, counting that
        a class containing a non-bridge edge needs at least two edges.
    """

    def __init__(self, G: Graph, target: int):
        self.G = G
        self.target = target
        self.order = _search_order(G)
        self.eu = [G.edges[e][0] for e in self.order]
        self.ev = [G.edges[e][1] for e in self.order]
        bridges = bridge_flags(G)
        self.bridge = [bridges[e] for e in self.order]
        # number of bridges among positions >= i
        m = G.m
        self.bridges_after = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            self.bridges_after[i] = self.bridges_after[i + 1] + self.bridge[i]
        self.assign = [-1] * m
        self.class_size: list[int] = []
        self.nodes = 0

    def _labels(self, depth: int, skip: int) -> list[int]:
        parent = list(range(self.G.n))
        assign, eu, ev = self.assign, self.eu, self.ev
        for j in range(depth):
            if assign[j] != skip:
                a, b = eu[j], ev[j]
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
        out = []
        for x in range(self.G.n):
            while parent[x] != x:
                x = parent[x]
            out.append(x)
        return out

    def _consistent(self, depth: int) -> bool:
        p = len(self.class_size)
        n = self.G.n
        assign, eu, ev = self.assign, self.eu, self.ev
        sigs = [[lab] for lab in self._labels(depth, -1)]
        for c in range(p):
            lab = self._labels(depth, c)
            for j in range(depth):
                if assign[j] == c and lab[eu[j]] == lab[ev[j]]:
                    return False
            for x in range(n):
                sigs[x].append(lab[x])
        seen = set()
        for s in sigs:
            t = tuple(s)
            if t in seen:
                return False
            seen.add(t)
        return True

    def _can_reach(self, depth: int) -> bool:
        p = len(self.class_size)
        rem = self.G.m - depth
        deficit = sum(
            1 for c, size in enumerate(self.class_size) if size == 1 and not self._single_is_bridge(c, depth)
        )
        if rem < deficit:
            return False
        free = rem - deficit
        free_bridges = min(self.bridges_after[depth], free)
        return p + free_bridges + (free - free_bridges) // 2 >= self.target

    def _single_is_bridge(self, c: int, depth: int) -> bool:
        for j in range(depth):
            if self.assign[j] == c:
                return self.bridge[j]
        return False

    def run(self) -> Optional[list[int]]:
        if self.G.m == 0:
            return [] if self.target <= 0 else None
        self.assign[0] = 0
        self.class_size = [1]
        return self._extend(1)

    def _extend(self, depth: int) -> Optional[list[int]]:
        self.nodes += 1
        if not self._consistent(depth) or not self._can_reach(depth):
            return None
        m = self.G.m
        if depth == m:
            colors = [0] * m
            for j, e in enumerate(self.order):
                colors[e] = self.assign[j] + 1
            coloring = canonicalize(colors)
            if coloring.palette_size >= self.target and verify_md(self.G, coloring):
                return list(coloring.colors)
            return None
        p = len(self.class_size)
        # a fresh color first: it heads toward large palettes
        for c in [p] + list(range(p)):
            self.assign[depth] = c
            if c == p:
                self.class_size.append(1)
            else:
                self.class_size[c] += 1
            found = self._extend(depth + 1)
            if c == p:
                self.class_size.pop()
            else:
                self.class_size[c] -= 1
            if found is not None:
                return found
        self.assign[depth] = -1
        return None


def md_decide(G: Graph, k: int) -> Optional[EdgeColoring]:
    """An MD-coloring of G with at least ``k`` colors, or None if none exists."""
    if k < 1:
        raise DomainError(f"target palette must be >= 1, got {k}")
    if not G.is_connected():
        raise DomainError("md_decide needs a connected graph")
    if k > G.n - 1:
        return None
    found = _PartitionSearch(G, k).run()
    return None if found is None else EdgeColoring(found)


@lru_cache(maxsize=1 << 16)
def _block_md(B: Graph) -> tuple[int, tuple[int, ...], str]:
    if B.m == 1:
        return 1, (1,), BRIDGE
    if B.m == B.n:
        c = color_unicyclic(B)
        return c.palette_size, c.colors, CYCLE
    if md1_certificate(B) is not None:
        return 1, (1,) * B.m, CERTIFICATE
    for k in range(B.n // 2, 1, -1):
        w = md_decide(B, k)
        if w is not None:
            return w.palette_size, w.colors, SEARCH
    return 1, (1,) * B.m, SEARCH


def md_exact(G: Graph) -> MdResult:
    """md(G) with a witness coloring, summed over components and blocks."""
    bd = block_decomposition(G)
    per_block = []
    blocks = []
    bounds: list[tuple[int, str]] = []
    for i, ids in enumerate(bd.blocks):
        B, _ = G.edge_subgraph(ids)
        value, colors, method = _block_md(B)
        if not bd.is_bridge[i]:
            bounds.append((B.n // 2, f"block {i}: 2-connected bound floor({B.n}/2)"))
        per_block.append(EdgeColoring(colors))
        blocks.append(BlockResult(tuple(ids), method, value))
    witness = compose_block_colorings(G, per_block) if G.m else EdgeColoring(())
    total = sum(b.value for b in blocks)
    if witness.palette_size != total:
        raise AssertionError("witness palette disagrees with block sum")
    bounds.insert(0, (sum(1 if br else 0 for br in bd.is_bridge) + sum(b for b, _ in bounds), "block-sum upper bound"))
    return MdResult(total, witness, blocks, bounds)
