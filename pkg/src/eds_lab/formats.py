"""Text formats for trees: plain edge lists and graph6."""

from __future__ import annotations

from .tree import Tree, TreeError, tree_from_edges

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def to_edgelist(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Tree:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise FormatError("edge list must start with a line holding n")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    return tree_from_edges(n, edges)


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(t: Tree) -> str:
    bits = []
    adj = [set(nb) for nb in t.adjacency]
    for j in range(1, t.n):
        for i in range(j):
            bits.append(1 if i in adj[j] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (_encode_n(t.n) + body).decode("ascii")


def graph6_edges(s: str) -> tuple[int, list[tuple[int, int]]]:
    """Decode a graph6 string into ``(n, edges)`` without tree validation."""
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii")
    if not data or any(not 63 <= c <= 126 for c in data):
        raise FormatError(f"not a graph6 string: {s!r}")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        n = sum((data[1 + k] - 63) << s for k, s in enumerate((12, 6, 0)))
        pos = 4
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = sum((data[2 + k] - 63) << s for k, s in enumerate((30, 24, 18, 12, 6, 0)))
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise FormatError(f"graph6 body has {len(data) - pos} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return n, edges


def from_graph6(s: str) -> Tree:
    n, edges = graph6_edges(s)
    return tree_from_edges(n, edges)


def read_tree_text(text: str) -> Tree:
    """Parse either format, deciding by the shape of the first line."""
    first = text.strip().splitlines()[0].strip() if text.strip() else ""
    if first.isdigit():
        return from_edgelist(text)
    try:
        return from_graph6(first)
    except TreeError:
        raise
    except FormatError as exc:
        raise FormatError(f"input is neither an edge list nor graph6: {exc}") from None
