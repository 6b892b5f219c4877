"""Unpruned brute force over every partition of the edge set.

This is the independent check on the solver. It shares nothing with the search
in ``solver``: every restricted-growth string of length m is generated in
lexicographic order and tested with a compiled copy of the MD condition.
"""

from __future__ import annotations

import numba
import numpy as np

from mdcolor.coloring import EdgeColoring, verify_md
from mdcolor.errors import DomainError
from mdcolor.graph import Graph
from mdcolor.solver import MdResult, BlockResult

DEFAULT_CAP = 12


@numba.njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@numba.njit(cache=True)
def _is_md(n, eu, ev, a, palette, base, labels, parent):
    m = eu.shape[0]
    for c in range(palette):
        for x in range(n):
            parent[x] = x
        for e in range(m):
            if a[e] != c:
                ru = _find(parent, eu[e])
                rv = _find(parent, ev[e])
                if ru != rv:
                    parent[ru] = rv
        for x in range(n):
            labels[c, x] = _find(parent, x)
        # cheap necessary test first: each edge's class splits its own endpoints
        for e in range(m):
            if a[e] == c and labels[c, eu[e]] == labels[c, ev[e]]:
                return False
    for x in range(n):
        for y in range(x + 1, n):
            if base[x] != base[y]:
                continue
            split = False
            for c in range(palette):
                if labels[c, x] != labels[c, y]:
                    split = True
                    break
            if not split:
                return False
    return True


@numba.njit(cache=True)
def _enumerate(n, eu, ev, base):
    m = eu.shape[0]
    a = np.zeros(m, np.int64)
    prefix_max = np.zeros(m, np.int64)
    best = np.zeros(m, np.int64)
    best_palette = 0
    labels = np.zeros((m, n), np.int64)
    parent = np.zeros(n, np.int64)
    count = 0
    while True:
        count += 1
        palette = prefix_max[m - 1] + 1
        # only strictly larger palettes can replace the incumbent
        if palette > best_palette and _is_md(n, eu, ev, a, palette, base, labels, parent):
            best_palette = palette
            best[:] = a
        # next restricted-growth string in lexicographic order
        j = m - 1
        while j > 0 and a[j] > prefix_max[j - 1]:
            j -= 1
        if j == 0:
            break
        a[j] += 1
        prefix_max[j] = max(prefix_max[j - 1], a[j])
        for i in range(j + 1, m):
            a[i] = 0
            prefix_max[i] = prefix_max[j]
    return best_palette, best, count


def brute_force_oracle(G: Graph, cap: int = DEFAULT_CAP, override: bool = False) -> MdResult:
    """md(G) by checking every set partition of E(G); needs m <= cap unless overridden."""
    if G.m > cap and not override:
        raise DomainError(f"brute force needs m <= {cap}, got m = {G.m} (pass an override to force it)")
    if G.m == 0:
        return MdResult(0, EdgeColoring(()), [], [])
    eu = np.array([u for u, _ in G.edges], np.int64)
    ev = np.array([v for _, v in G.edges], np.int64)
    base = np.zeros(G.n, np.int64)
    # component labels of G itself: cross-component pairs count as separated
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in G.edges:
        parent[find(u)] = find(v)
    for x in range(G.n):
        base[x] = find(x)
    palette, best, _ = _enumerate(G.n, eu, ev, base)
    witness = EdgeColoring(int(c) + 1 for c in best)
    if not verify_md(G, witness):
        raise AssertionError("compiled MD check disagrees with verify_md")
    return MdResult(int(palette), witness, [BlockResult(tuple(range(G.m)), "brute-force", int(palette))], [])


def count_partitions(m: int) -> int:
    """Number of restricted-growth strings the oracle visits for m edges (Bell number)."""
    if m == 0:
        return 1
    G = Graph(m + 1, tuple((0, i) for i in range(1, m + 1)))
    eu = np.array([u for u, _ in G.edges], np.int64)
    ev = np.array([v for _, v in G.edges], np.int64)
    return int(_enumerate(G.n, eu, ev, np.zeros(G.n, np.int64))[2])
