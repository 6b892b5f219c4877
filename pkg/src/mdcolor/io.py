"""Text formats: edge lists, graph6 input, and coloring files."""

from __future__ import annotations

from pathlib import Path

from mdcolor.errors import FormatError
from mdcolor.graph import Graph, build_graph


def _parse_int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", line) from None


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    # skip trailing blank lines only; interior blanks are malformed
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty graph file", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n m'", 1)
    n, m = (_parse_int(t, 1) for t in head)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", 1)
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges but {len(lines) - 1} edge lines follow", len(lines))
    pairs = []
    for k, raw in enumerate(lines[1:], start=2):
        toks = raw.split()
        if len(toks) != 2:
            raise FormatError("edge line must be 'u v'", k)
        pairs.append((_parse_int(toks[0], k), _parse_int(toks[1], k)))
    return build_graph(n, pairs)


def _graph6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field", 1)
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated graph6 size field", 1)
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string", 1)
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 characters must lie in '?'..'~'", 1)
    n, off = _graph6_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}", 1)
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    # graph6 order is column-major; re-sort so edge ids follow lexicographic pairs
    pairs.sort()
    return build_graph(n, pairs)


def to_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def parse_graph(text: str) -> Graph:
    """Edge-list text, or graph6 when the first line has no space."""
    first = text.lstrip("\n").split("\n", 1)[0].strip()
    if first and " " not in first and "\t" not in first:
        return parse_graph6(first)
    return parse_edge_list(text)


def format_edge_list(G: Graph) -> str:
    return "".join([f"{G.n} {G.m}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(G: Graph, path) -> None:
    Path(path).write_text(format_edge_list(G))


def parse_coloring(text: str) -> list[int]:
    colors = []
    for k, line in enumerate(text.splitlines(), start=1):
        for tok in line.split():
            c = _parse_int(tok, k)
            if c < 1:
                raise FormatError(f"color ids must be positive, got {c}", k)
            colors.append(c)
    return colors


def format_coloring(colors) -> str:
    return " ".join(str(c) for c in colors) + "\n"


def read_coloring(path) -> list[int]:
    return parse_coloring(Path(path).read_text())
