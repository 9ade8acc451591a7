"""Free trees up to isomorphism, canonical codes and class filters.

Generation follows the Wright-Richmond-Odlyzko-McKay successor rule on
centroid-rooted canonical level sequences, which costs constant amortized
time per tree. Sequences come out in strictly decreasing lexicographic order,
starting at the path and ending at the star.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from . import params
from .tree import Tree, bipartition_sizes, center, leaves, tree_from_parents

MAX_ORDER = 18


class EnumerationCapError(ValueError):
    pass


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the canonical level sequence (root at level 0) of every free tree on n vertices."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n <= 3:
        yield tuple(range(min(n, 2))) + (1,) * max(0, n - 2)
        return

    inf = 2 * n
    # 1-indexed working arrays: L holds levels with the root at 1, W parents.
    k = n // 2 + 1
    L = [0] * (n + 1)
    W = [0] * (n + 1)
    for i in range(1, k + 1):
        L[i] = i
    for i in range(k + 1, n + 1):
        L[i] = i - k + 1
    for i in range(1, n + 1):
        W[i] = i - 1
    W[k + 1] = 1
    p = 3 if n == 4 else n
    q = n - 1
    h1, h2, r = k, n, k
    c = n + 1 if n % 2 == 0 else inf

    yield tuple(x - 1 for x in L[1:])
    while q != 0:
        fixit = needr = needc = needh2 = False
        if c == n + 1 or (
            p == h2
            and (
                (L[h1] == L[h2] + 1 and n - h2 > r - h1)
                or (L[h1] == L[h2] and n - h2 + 1 < r - h1)
            )
        ):
            if L[r] > 3:
                p = r
                q = W[r]
                if h1 == r:
                    h1 -= 1
                fixit = True
            else:
                p = r
                r -= 1
                q = 2
        if p <= h1:
            h1 = p - 1
        if p <= r:
            needr = True
        elif p <= h2:
            needh2 = True
        elif L[h2] == L[h1] - 1 and n - h2 == r - h1:
            if p <= c:
                needc = True
        else:
            c = inf

        oldp = p
        delta = q - p
        oldlq = L[q]
        oldwq = W[q]
        p = inf
        for i in range(oldp, n + 1):
            L[i] = L[i + delta]
            if L[i] == 2:
                W[i] = 1
            else:
                p = i
                q = oldwq if L[i] == oldlq else W[i + delta] - delta
                W[i] = q
            if needr and L[i] == 2:
                needr = False
                needh2 = True
                r = i - 1
            if needh2 and L[i] <= L[i - 1] and i > r + 1:
                needh2 = False
                h2 = i - 1
                if L[h2] == L[h1] - 1 and n - h2 == r - h1:
                    needc = True
                else:
                    c = inf
            if needc:
                if L[i] != L[h1 - h2 + i] - 1:
                    needc = False
                    c = i
                else:
                    c = i + 1

        if fixit:
            r = n - h1 + 1
            for i in range(r + 1, n + 1):
                L[i] = i - r + 1
                W[i] = i - 1
            W[r + 1] = 1
            h2 = n
            p = n
            q = p - 1
            c = inf
        else:
            if p == inf:
                p = oldp - 1 if L[oldp - 1] != 2 else oldp - 2
                q = W[p]
            if needh2:
                h2 = n
                c = n + 1 if (L[h2] == L[h1] - 1 and h1 == r) else inf
        yield tuple(x - 1 for x in L[1:])


def tree_from_level_sequence(levels) -> Tree:
    """Vertex i of the result is position i of the sequence; vertex 0 is the root."""
    parents = [0] * len(levels)
    stack: list[int] = []
    for i, lv in enumerate(levels):
        if i and lv < 1:
            raise ValueError("only position 0 may sit at level 0")
        del stack[lv:]
        if i:
            if len(stack) != lv:
                raise ValueError(f"level jumps at position {i}")
            parents[i] = stack[-1]
        stack.append(i)
    return tree_from_parents(parents)


def _check_order(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > cap:
        raise EnumerationCapError(f"order {n} exceeds enumeration cap {cap}")


def free_trees(n: int, start: int = 0, stop: int | None = None, cap: int = MAX_ORDER) -> Iterator[Tree]:
    """One tree per isomorphism class of order ``n``, in generation order.

    ``start``/``stop`` select an index range of the fixed stream, so disjoint
    ranges can be processed independently and merged by index.
    """
    _check_order(n, cap)
    for levels in islice(level_sequences(n), start, stop):
        yield tree_from_level_sequence(levels)


def count_free_trees(n: int, cap: int = MAX_ORDER) -> int:
    _check_order(n, cap)
    return sum(1 for _ in level_sequences(n))


# --- canonical codes ---------------------------------------------------------

def _rooted_code(t: Tree, root: int) -> tuple[int, ...]:
    parent = [-1] * t.n
    depth = [0] * t.n
    parent[root] = root
    order = [root]
    for x in order:
        for y in t.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                depth[y] = depth[x] + 1
                order.append(y)
    seq: list[tuple[int, ...] | None] = [None] * t.n
    for v in reversed(order):
        parts = sorted((seq[c] for c in t.adjacency[v] if c != parent[v]), reverse=True)
        out = [depth[v]]
        for part in parts:
            out.extend(part)
        seq[v] = tuple(out)
    return seq[root]


def canonical_levels(t: Tree) -> tuple[int, ...]:
    """Lexicographically largest level sequence over rootings at a center vertex."""
    return max(_rooted_code(t, c) for c in center(t))


def canonical_code(t: Tree) -> bytes:
    """Canonical code as bytes; equal for two trees exactly when they are isomorphic."""
    levels = canonical_levels(t)
    if levels and max(levels) > 255:
        raise ValueError("tree too deep for a byte-level canonical code")
    return bytes(levels)


def code_str(code: bytes) -> str:
    return code.hex()


def tree_from_code(code: bytes | str) -> Tree:
    if isinstance(code, str):
        code = bytes.fromhex(code)
    return tree_from_level_sequence(list(code))


def isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)


# --- class filters -------------------------------------------------------------

@dataclass(frozen=True)
class ConstraintSpec:
    leaf_count: int | None = None
    domination: int | None = None
    matching: int | None = None
    bipartition: tuple[int, int] | None = None

    def __post_init__(self):
        if self.bipartition is not None:
            p, q = self.bipartition
            object.__setattr__(self, "bipartition", (min(p, q), max(p, q)))

    def matches(self, t: Tree) -> bool:
        if self.leaf_count is not None and len(leaves(t)) != self.leaf_count:
            return False
        if self.bipartition is not None and bipartition_sizes(t) != self.bipartition:
            return False
        if self.domination is not None and params.domination_number(t) != self.domination:
            return False
        if self.matching is not None and params.matching_number(t) != self.matching:
            return False
        return True

    def as_dict(self) -> dict:
        out = {}
        if self.leaf_count is not None:
            out["k"] = self.leaf_count
        if self.domination is not None:
            out["gamma"] = self.domination
        if self.matching is not None:
            out["beta"] = self.matching
        if self.bipartition is not None:
            out["p"], out["q"] = self.bipartition
        return out


def filtered_trees(n: int, c: ConstraintSpec, cap: int = MAX_ORDER) -> Iterator[Tree]:
    return (t for t in free_trees(n, cap=cap) if c.matches(t))
