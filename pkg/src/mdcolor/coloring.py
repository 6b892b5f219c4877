"""Edge colorings and the monochromatic-disconnection check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from mdcolor.errors import DomainError
from mdcolor.graph import Graph, components


@dataclass(frozen=True)
class EdgeColoring:
    """One positive color id per edge id."""

    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        cs = tuple(int(c) for c in colors)
        if any(c < 1 for c in cs):
            raise DomainError("color ids must be positive")
        object.__setattr__(self, "colors", cs)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> int:
        return self.colors[i]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        """Edge ids grouped by color, colors in increasing order."""
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, []).append(e)
        return dict(sorted(out.items()))


def canonicalize(c: EdgeColoring | Sequence[int]) -> EdgeColoring:
    """Relabel colors in order of first appearance (restricted-growth form)."""
    relabel: dict[int, int] = {}
    out = []
    for x in c:
        if x not in relabel:
            relabel[x] = len(relabel) + 1
        out.append(relabel[x])
    return EdgeColoring(out)


def _labels_without(G: Graph, removed: Sequence[bool]) -> list[int]:
    """Component label of each vertex in G minus the flagged edges."""
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (u, v) in enumerate(G.edges):
        if not removed[e]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return [find(x) for x in range(G.n)]


def class_labels(G: Graph, c: EdgeColoring) -> dict[int, list[int]]:
    """For each color, vertex component labels of G with that color class removed."""
    return {k: _labels_without(G, [x == k for x in c.colors]) for k in c.classes()}


def _check_length(G: Graph, c: EdgeColoring) -> None:
    if len(c) != G.m:
        raise DomainError(f"coloring has {len(c)} entries but the graph has {G.m} edges")


def separating_colors(G: Graph, c: EdgeColoring, u: int, v: int) -> set[int]:
    if u == v:
        raise DomainError("separating_colors needs two distinct vertices")
    _check_length(G, c)
    palette = set(c.colors)
    comp = _labels_without(G, [False] * G.m)
    if comp[u] != comp[v]:
        return palette
    return {k for k, lab in class_labels(G, c).items() if lab[u] != lab[v]}


@dataclass(frozen=True)
class MdVerdict:
    is_md: bool
    uncovered_pairs: list[tuple[int, int]]

    def __bool__(self) -> bool:
        return self.is_md


def verify_md(G: Graph, c: EdgeColoring | Sequence[int]) -> MdVerdict:
    """Decide whether every vertex pair is split by some single color class.

    Each vertex gets a signature made of its component label in G and in G minus
    each color class. Two vertices are uncovered exactly when their signatures
    agree, so grouping by signature finds every failing pair at once.
    """
    if not isinstance(c, EdgeColoring):
        c = EdgeColoring(c)
    _check_length(G, c)
    base = [0] * G.n
    for k, part in enumerate(components(G)):
        for x in part:
            base[x] = k
    labels = list(class_labels(G, c).values())
    groups: dict[tuple[int, ...], list[int]] = {}
    for x in range(G.n):
        sig = (base[x],) + tuple(lab[x] for lab in labels)
        groups.setdefault(sig, []).append(x)
    uncovered = []
    for members in groups.values():
        uncovered.extend(combinations(members, 2))
    uncovered.sort()
    return MdVerdict(not uncovered, uncovered)


def restrict(c: EdgeColoring, edge_ids: Sequence[int]) -> EdgeColoring:
    return EdgeColoring(c.colors[e] for e in edge_ids)
