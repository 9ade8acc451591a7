"""Domination and matching numbers of trees.

Each parameter has a linear-time rooted DP and an exhaustive oracle. The
oracles exist so that verification verdicts never rest on a single
implementation; they are exponential and capped.
"""

from __future__ import annotations

import enum
from itertools import combinations

from .tree import Tree

DOMINATION_ORACLE_CAP = 20
MATCHING_ORACLE_CAP = 16

_INF = float("inf")


class ParamKind(enum.Enum):
    DOMINATION = "domination"
    MATCHING = "matching"


class OracleCapError(ValueError):
    pass


def _postorder(t: Tree, root: int = 0) -> tuple[list[int], list[int]]:
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for x in order:
        for y in t.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    order.reverse()
    return order, parent


def domination_number(t: Tree, root: int = 0) -> int:
    """Minimum dominating set size.

    Three states per vertex ``v`` for its rooted subtree: ``v`` in the set;
    ``v`` outside but dominated by a child; ``v`` outside and not yet
    dominated (its parent must take it).
    """
    order, parent = _postorder(t, root)
    taken = [0] * t.n
    covered = [0.0] * t.n
    waiting = [0] * t.n
    for v in order:
        in_set = 1
        free_sum = 0
        best_gap = _INF
        wait_sum = 0
        for c in t.adjacency[v]:
            if parent[c] != v or c == v:
                continue
            in_set += min(taken[c], covered[c], waiting[c])
            cheaper = min(taken[c], covered[c])
            free_sum += cheaper
            best_gap = min(best_gap, taken[c] - cheaper)
            wait_sum += covered[c]
        taken[v] = in_set
        covered[v] = free_sum + best_gap
        waiting[v] = wait_sum
    return int(min(taken[root], covered[root]))


def matching_number(t: Tree, root: int = 0) -> int:
    """Maximum matching size via the matched-to-child / free DP."""
    order, parent = _postorder(t, root)
    free = [0] * t.n  # best with v unmatched inside its subtree
    best = [0] * t.n
    for v in order:
        f = 0
        children = [c for c in t.adjacency[v] if parent[c] == v and c != v]
        for c in children:
            f += best[c]
        b = f
        for c in children:
            b = max(b, f - best[c] + free[c] + 1)
        free[v] = f
        best[v] = b
    return best[root]


def domination_number_oracle(t: Tree) -> int:
    """Smallest dominating set by scanning subsets in increasing size."""
    if t.n > DOMINATION_ORACLE_CAP:
        raise OracleCapError(f"domination oracle limited to n <= {DOMINATION_ORACLE_CAP}")
    closed = [(1 << v) | sum(1 << u for u in t.adjacency[v]) for v in range(t.n)]
    full = (1 << t.n) - 1
    for size in range(1, t.n + 1):
        for subset in combinations(range(t.n), size):
            mask = 0
            for v in subset:
                mask |= closed[v]
            if mask == full:
                return size
    return t.n


def matching_number_oracle(t: Tree) -> int:
    """Largest set of pairwise disjoint edges by scanning edge subsets."""
    if t.n > MATCHING_ORACLE_CAP:
        raise OracleCapError(f"matching oracle limited to n <= {MATCHING_ORACLE_CAP}")
    masks = [(1 << u) | (1 << v) for u, v in t.edges]
    for size in range(t.n // 2, 0, -1):
        for subset in combinations(masks, size):
            used = 0
            for m in subset:
                if used & m:
                    break
                used |= m
            else:
                return size
    return 0


def parameter(t: Tree, kind: ParamKind) -> int:
    if kind is ParamKind.DOMINATION:
        return domination_number(t)
    return matching_number(t)
