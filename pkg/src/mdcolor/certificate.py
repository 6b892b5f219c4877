"""Closure certificates proving md(G) = 1.

A certificate lists small subgraphs known to force a single color (triangles and
K_{2,s} with s >= 3), and a trace of merges between gadgets that share two
vertices. Any MD-coloring paints a gadget in one color, and two gadgets sharing a
vertex pair must share that color, so one merged class covering every edge
pins the whole graph to one color.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from mdcolor.errors import DomainError
from mdcolor.graph import Graph

TRIANGLE = "triangle"
K23 = "K23"


@dataclass(frozen=True)
class Gadget:
    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Merge:
    left: int
    right: int
    pair: tuple[int, int]


@dataclass
class ClosureCertificate:
    gadgets: list[Gadget] = field(default_factory=list)
    merge_trace: list[Merge] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "gadgets": [{"kind": g.kind, "vertices": list(g.vertices), "edges": list(g.edges)} for g in self.gadgets],
            "merges": [[mg.left, mg.right, list(mg.pair)] for mg in self.merge_trace],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClosureCertificate":
        gadgets = [Gadget(g["kind"], tuple(g["vertices"]), tuple(g["edges"])) for g in data["gadgets"]]
        merges = [Merge(int(a), int(b), (int(p[0]), int(p[1]))) for a, b, p in data["merges"]]
        return cls(gadgets, merges)


class _DSU:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _gadgets(G: Graph) -> list[Gadget]:
    adj = G.adj_mask
    out = []
    for u, v in G.edges:
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        while common:
            bit = common & -common
            w = bit.bit_length() - 1
            common ^= bit
            out.append(Gadget(TRIANGLE, (u, v, w), tuple(sorted((G.edge_id(u, v), G.edge_id(u, w), G.edge_id(v, w))))))
    for u, v in combinations(range(G.n), 2):
        common = adj[u] & adj[v]
        if common.bit_count() >= 3:
            ws = [w for w in range(G.n) if (common >> w) & 1]
            eids = sorted(G.edge_id(x, w) for w in ws for x in (u, v))
            out.append(Gadget(K23, (u, v, *ws), tuple(eids)))
    return out


def md1_certificate(G: Graph) -> Optional[ClosureCertificate]:
    """Certificate that md(G) = 1, or None when triangles and K_{2,s} do not suffice.

    None says nothing about md(G); it only means this gadget library found no proof.
    """
    if G.m < 1:
        raise DomainError("md1_certificate needs at least one edge")
    if not G.is_connected():
        raise DomainError("md1_certificate needs a connected graph")
    gadgets = _gadgets(G)
    if not gadgets:
        return None
    dsu = _DSU(len(gadgets))
    trace = []
    first_with_pair: dict[tuple[int, int], int] = {}
    for gid, g in enumerate(gadgets):
        partners: dict[int, tuple[int, int]] = {}
        for pair in combinations(sorted(g.vertices), 2):
            other = first_with_pair.setdefault(pair, gid)
            if other != gid:
                partners.setdefault(other, pair)
        for other, pair in partners.items():
            if dsu.union(other, gid):
                trace.append(Merge(other, gid, pair))
    covered = set()
    for g in gadgets:
        covered.update(g.edges)
    if len(covered) != G.m:
        return None
    if len({dsu.find(i) for i in range(len(gadgets))}) != 1:
        return None
    return ClosureCertificate(gadgets, trace)


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _check_gadget(G: Graph, g: Gadget) -> Optional[str]:
    vs = g.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= x < G.n for x in vs):
        return "gadget vertices must be distinct vertices of G"
    if any(not 0 <= e < G.m for e in g.edges):
        return f"gadget lists edge id outside 0..{G.m - 1}"
    listed = {G.edges[e] for e in g.edges}
    if len(listed) != len(g.edges):
        return "gadget lists an edge twice"
    if g.kind == TRIANGLE:
        if len(vs) != 3:
            return "triangle gadget needs 3 vertices"
        want = {tuple(sorted(p)) for p in combinations(vs, 2)}
    elif g.kind == K23:
        if len(vs) < 5:
            return "K23 gadget needs two hubs and at least three common neighbours"
        hubs, rest = vs[:2], vs[2:]
        want = {tuple(sorted((h, w))) for h in hubs for w in rest}
    else:
        return f"unknown gadget kind {g.kind!r}"
    if listed != want:
        return f"{g.kind} gadget on {list(vs)} does not list exactly its edges"
    return None


def check_certificate(G: Graph, cert: ClosureCertificate) -> CertificateCheck:
    """Re-validate a certificate from scratch against G."""
    for i, g in enumerate(cert.gadgets):
        problem = _check_gadget(G, g)
        if problem:
            return CertificateCheck(False, f"invalid gadget {i}: {problem}")
    k = len(cert.gadgets)
    dsu = _DSU(k + G.m)
    for step, mg in enumerate(cert.merge_trace):
        if not (0 <= mg.left < k and 0 <= mg.right < k):
            return CertificateCheck(False, f"merge {step} names a missing gadget")
        a, b = mg.pair
        if a == b:
            return CertificateCheck(False, f"merge {step} needs two distinct shared vertices")
        for gid in (mg.left, mg.right):
            if a not in cert.gadgets[gid].vertices or b not in cert.gadgets[gid].vertices:
                return CertificateCheck(False, f"merge {step}: gadget {gid} does not contain both {a} and {b}")
        dsu.union(mg.left, mg.right)
    for gid, g in enumerate(cert.gadgets):
        for e in g.edges:
            dsu.union(gid, k + e)
    covered = {e for g in cert.gadgets for e in g.edges}
    if len(covered) != G.m:
        return CertificateCheck(False, f"coverage {len(covered)} of {G.m} edges")
    roots = {dsu.find(k + e) for e in range(G.m)}
    if len(roots) != 1:
        return CertificateCheck(False, f"edges fall into {len(roots)} merged classes")
    return CertificateCheck(True, "ok")
