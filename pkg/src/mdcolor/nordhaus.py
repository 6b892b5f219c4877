"""Nordhaus-Gaddum sums and products of md over complementary pairs.

Small orders are scanned exhaustively over all adjacency masks; larger orders
are sampled. md values are memoised per isomorphism class, using a brute-force
canonical form (minimum mask over all vertex permutations).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Optional

import numpy as np

from mdcolor.errors import DomainError
from mdcolor.experiments import gnp_from_rng
from mdcolor.graph import Graph, block_decomposition, complement, graph_from_mask, graph_to_mask
from mdcolor.solver import md_decide, md_exact, upper_bound

SCAN_MIN, SCAN_MAX = 4, 6
CANON_MAX = 7


@dataclass
class NgRecord:
    n: int
    graph: Graph
    md: int
    md_complement: int

    @property
    def sum(self) -> int:
        return self.md + self.md_complement

    @property
    def product(self) -> int:
        return self.md * self.md_complement

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.graph.edges],
            "md": self.md,
            "md_complement": self.md_complement,
            "sum": self.sum,
            "product": self.product,
        }


def ng_pair(G: Graph) -> NgRecord:
    if G.n < 4:
        raise DomainError(f"Nordhaus-Gaddum pairs need n >= 4, got {G.n}")
    H = complement(G)
    if not G.is_connected():
        raise DomainError("graph is disconnected")
    if not H.is_connected():
        raise DomainError("complement is disconnected")
    return NgRecord(G.n, G, md_exact(G).value, md_exact(H).value)


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> np.ndarray:
    """Row p, column k: the bit that pair k lands on under permutation p."""
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    rows = []
    for perm in permutations(range(n)):
        row = []
        for u, v in pairs:
            a, b = perm[u], perm[v]
            row.append(1 << index[(a, b) if a < b else (b, a)])
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def canonical_mask(n: int, mask: int) -> int:
    if n > CANON_MAX:
        raise DomainError(f"canonical form by permutation is limited to n <= {CANON_MAX}")
    if n < 2:
        return 0
    W = _perm_weights(n)
    bits = [k for k in range(W.shape[1]) if (mask >> k) & 1]
    if not bits:
        return 0
    return int(W[:, bits].sum(axis=1).min())


def _mask_connected(n: int, mask: int, pair_bits: list[tuple[int, int]]) -> bool:
    adj = [0] * n
    for k, (u, v) in enumerate(pair_bits):
        if (mask >> k) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            nxt |= adj[bit.bit_length() - 1]
            f ^= bit
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


class MdCache:
    """md values keyed by canonical mask, so each isomorphism class is solved once."""

    def __init__(self, n: int):
        self.n = n
        self.values: dict[int, int] = {}

    def md(self, mask: int, canon: Optional[int] = None) -> int:
        if canon is None:
            canon = canonical_mask(self.n, mask) if self.n <= CANON_MAX else mask
        if canon not in self.values:
            self.values[canon] = md_exact(graph_from_mask(self.n, canon)).value
        return self.values[canon]


@dataclass
class ScanReport:
    n: int
    dedup: bool
    scanned: int
    qualified: int
    min_sum: int
    max_sum: int
    min_prod: int
    max_prod: int
    witnesses: dict[str, NgRecord]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dedup": self.dedup,
            "scanned": self.scanned,
            "qualified": self.qualified,
            "sum": {"lower": self.min_sum, "upper": self.max_sum},
            "product": {"lower": self.min_prod, "upper": self.max_prod},
            "witnesses": {k: r.to_json() for k, r in self.witnesses.items()},
        }


def scan_order(n: int, dedup: bool = False) -> ScanReport:
    """Extremes of md(G)+md(co-G) and md(G)*md(co-G) over every labelled G on n vertices.

    Only graphs with both sides connected qualify. With ``dedup`` each
    isomorphism class is visited once, through its smallest mask. Witness ties go
    to the smallest mask.
    """
    if not SCAN_MIN <= n <= SCAN_MAX:
        raise DomainError(f"exhaustive scan supports {SCAN_MIN} <= n <= {SCAN_MAX}; use sampled_search for n = {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << len(pairs)) - 1
    cache = MdCache(n)
    seen_classes: set[int] = set()
    best: dict[str, tuple[int, int]] = {}
    scanned = qualified = 0
    for mask in range(full + 1):
        canon = canonical_mask(n, mask)
        if dedup:
            if canon in seen_classes:
                continue
            seen_classes.add(canon)
        scanned += 1
        comask = full ^ mask
        if not (_mask_connected(n, mask, pairs) and _mask_connected(n, comask, pairs)):
            continue
        qualified += 1
        a = cache.md(mask, canon)
        b = cache.md(comask)
        for key, val, better in (
            ("min_sum", a + b, lambda x, y: x < y),
            ("max_sum", a + b, lambda x, y: x > y),
            ("min_prod", a * b, lambda x, y: x < y),
            ("max_prod", a * b, lambda x, y: x > y),
        ):
            if key not in best or better(val, best[key][0]):
                best[key] = (val, mask)
    if not best:
        raise DomainError(f"no graph on {n} vertices has both sides connected")
    witnesses = {}
    for key, (_, mask) in best.items():
        G = graph_from_mask(n, mask)
        witnesses[key] = NgRecord(n, G, cache.md(mask), cache.md(full ^ mask))
    return ScanReport(
        n, dedup, scanned, qualified,
        best["min_sum"][0], best["max_sum"][0], best["min_prod"][0], best["max_prod"][0],
        witnesses,
    )


_TARGET = re.compile(r"^\s*(sum|product|prod)\s*=\s*(\d+)\s*$")


def parse_target(text: str) -> tuple[str, int]:
    mt = _TARGET.match(text)
    if not mt:
        raise DomainError(f"target must look like 'sum=K' or 'product=K', got {text!r}")
    kind = "product" if mt.group(1).startswith("prod") else "sum"
    return kind, int(mt.group(2))


def _block_count(G: Graph) -> int:
    return len(block_decomposition(G).blocks)


@dataclass
class SearchHit:
    record: NgRecord
    attempt: int
    # sides with md = 1 that were re-checked by a failing 2-color search
    md1_checked: list[str]

    def to_json(self) -> dict:
        out = self.record.to_json()
        out["attempt"] = self.attempt
        out["md1_checked"] = self.md1_checked
        return out


def sampled_search(n: int, target: str, budget: int, seed: int) -> Optional[SearchHit]:
    """First uniform random G on n vertices whose complementary pair meets ``target``.

    Each attempt draws G(n, 1/2) from a PCG64 stream seeded by ``seed``. Pairs
    ruled out by block counts (a lower bound on md) or by block-sum upper bounds
    skip the exact solver. Any side claimed to have md = 1 is re-checked by
    asking the search for a 2-coloring, which must fail.
    """
    if n < 7:
        raise DomainError(f"sampled_search is for n >= 7 (scan smaller orders), got {n}")
    if budget < 1:
        raise DomainError("budget must be positive")
    kind, value = parse_target(target)
    rng = np.random.Generator(np.random.PCG64(seed))
    cache = MdCache(n)
    for attempt in range(1, budget + 1):
        G = gnp_from_rng(n, 0.5, rng)
        H = complement(G)
        if not (G.is_connected() and H.is_connected()):
            continue
        lo_g, lo_h = _block_count(G), _block_count(H)
        hi_g, hi_h = upper_bound(G)[0], upper_bound(H)[0]
        if kind == "sum" and not lo_g + lo_h <= value <= hi_g + hi_h:
            continue
        if kind == "product" and not lo_g * lo_h <= value <= hi_g * hi_h:
            continue
        a = cache.md(graph_to_mask(G))
        b = cache.md(graph_to_mask(H))
        if (a + b if kind == "sum" else a * b) != value:
            continue
        checked = []
        for name, side, val in (("graph", G, a), ("complement", H, b)):
            if val == 1:
                if md_decide(side, 2) is not None:
                    raise AssertionError(f"md = 1 claim for the {name} refuted by a 2-coloring")
                checked.append(name)
        return SearchHit(NgRecord(n, G, a, b), attempt, checked)
    return None
