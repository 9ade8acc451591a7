"""Labeled trees and their distance-based invariants.

Vertices are dense ids ``0..n-1``. Every invariant here is an exact integer.
Distances come from one BFS per vertex (see :mod:`eds_lab.kernels`); nothing
quadratic in memory is kept unless :func:`distance_matrix` is asked for.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from . import kernels

MATRIX_LIMIT = 2048


class TreeError(ValueError):
    """Base class for invalid tree input."""


class VertexRangeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class CycleError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


@dataclass(frozen=True, eq=True)
class Tree:
    """An immutable labeled tree.

    Build instances through :func:`tree_from_edges`, which validates the input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def _profile(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        ecc, trans = kernels.distance_profile(self.adjacency)
        return tuple(ecc), tuple(trans)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"


def tree_from_edges(n: int, edges) -> Tree:
    """Validate ``edges`` and return the corresponding :class:`Tree`."""
    if n < 1:
        raise VertexRangeError(f"a tree needs at least one vertex, got n={n}")
    adjacency: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)
    if len(seen) > n - 1:
        raise CycleError(f"{len(seen)} edges on {n} vertices: the graph has a cycle")
    # connectivity
    reached = [False] * n
    reached[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if not reached[y]:
                reached[y] = True
                count += 1
                stack.append(y)
    if count != n or len(seen) != n - 1:
        raise DisconnectedError(f"graph on {n} vertices with {len(seen)} edges is disconnected")
    return Tree(
        n=n,
        adjacency=tuple(tuple(sorted(nb)) for nb in adjacency),
        edges=tuple(sorted(seen)),
    )


def tree_from_parents(parents) -> Tree:
    """Tree from a parent array (``parents[0]`` is ignored; vertex 0 is the root)."""
    return tree_from_edges(len(parents), [(parents[i], i) for i in range(1, len(parents))])


def _check_vertex(t: Tree, v: int) -> None:
    if not 0 <= v < t.n:
        raise VertexRangeError(f"vertex {v} out of range for n={t.n}")


def bfs_distances(t: Tree, v: int) -> tuple[int, ...]:
    _check_vertex(t, v)
    return tuple(kernels.bfs_row(t.adjacency, v))


def distance_matrix(t: Tree) -> list[list[int]]:
    """Full all-pairs distance matrix; only for ``n <= MATRIX_LIMIT``."""
    if t.n > MATRIX_LIMIT:
        raise ValueError(f"distance matrix limited to n <= {MATRIX_LIMIT}, got {t.n}")
    return kernels.distance_matrix(t.adjacency)


def transmission(t: Tree, v: int) -> int:
    """``D(v)``: sum of distances from ``v``."""
    _check_vertex(t, v)
    return t._profile[1][v]


def eccentricity(t: Tree, v: int) -> int:
    _check_vertex(t, v)
    return t._profile[0][v]


def eccentricities(t: Tree) -> tuple[int, ...]:
    return t._profile[0]


def transmissions(t: Tree) -> tuple[int, ...]:
    return t._profile[1]


def degrees(t: Tree) -> tuple[int, ...]:
    return tuple(len(nb) for nb in t.adjacency)


def radius(t: Tree) -> int:
    return min(t._profile[0])


def diameter(t: Tree) -> int:
    return max(t._profile[0])


def center(t: Tree) -> tuple[int, ...]:
    ecc = t._profile[0]
    r = min(ecc)
    return tuple(v for v in range(t.n) if ecc[v] == r)


def eds(t: Tree) -> int:
    """Eccentric distance sum in vertex form, sum of ``ecc(v) * D(v)``."""
    ecc, trans = t._profile
    return sum(e * d for e, d in zip(ecc, trans))


def eds_pair_form(t: Tree) -> int:
    """Eccentric distance sum over unordered pairs, ``(ecc(u) + ecc(v)) * d(u, v)``.

    Eccentricities are read off the distance matrix rows, so this path shares
    nothing with :func:`eds` beyond the BFS itself.
    """
    dist = distance_matrix(t)
    ecc = [max(row) for row in dist]
    total = 0
    for u in range(t.n):
        row = dist[u]
        eu = ecc[u]
        for v in range(u + 1, t.n):
            total += (eu + ecc[v]) * row[v]
    return total


def wiener(t: Tree) -> int:
    return sum(t._profile[1]) // 2


def degree_distance(t: Tree) -> int:
    return sum(len(nb) * d for nb, d in zip(t.adjacency, t._profile[1]))


def ecc_connectivity(t: Tree) -> int:
    return sum(len(nb) * e for nb, e in zip(t.adjacency, t._profile[0]))


def total_eccentricity(t: Tree) -> int:
    return sum(t._profile[0])


def leaves(t: Tree) -> tuple[int, ...]:
    return tuple(v for v in range(t.n) if len(t.adjacency[v]) == 1)


def two_coloring(t: Tree) -> list[int]:
    color = [-1] * t.n
    color[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if color[y] < 0:
                color[y] = 1 - color[x]
                queue.append(y)
    return color


def bipartition_sizes(t: Tree) -> tuple[int, int]:
    """Color-class sizes ``(p, q)`` with ``p <= q``."""
    ones = sum(two_coloring(t))
    zeros = t.n - ones
    return (min(ones, zeros), max(ones, zeros))


@dataclass(frozen=True)
class InvariantRecord:
    eds: int
    wiener: int
    degree_distance: int
    ecc_connectivity: int
    total_eccentricity: int
    radius: int
    diameter: int
    center: tuple[int, ...]
    leaf_count: int
    bipartition: tuple[int, int]
    extra: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "eds": self.eds,
            "wiener": self.wiener,
            "degree_distance": self.degree_distance,
            "ecc_connectivity": self.ecc_connectivity,
            "total_eccentricity": self.total_eccentricity,
            "radius": self.radius,
            "diameter": self.diameter,
            "center": list(self.center),
            "leaf_count": self.leaf_count,
            "bipartition": list(self.bipartition),
            **self.extra,
        }


def invariant_record(t: Tree) -> InvariantRecord:
    return InvariantRecord(
        eds=eds(t),
        wiener=wiener(t),
        degree_distance=degree_distance(t),
        ecc_connectivity=ecc_connectivity(t),
        total_eccentricity=total_eccentricity(t),
        radius=radius(t),
        diameter=diameter(t),
        center=center(t),
        leaf_count=len(leaves(t)) if t.n > 1 else 0,
        bipartition=bipartition_sizes(t),
    )


INVARIANTS = {
    "eds": eds,
    "wiener": wiener,
    "degree-distance": degree_distance,
    "ecc-connectivity": ecc_connectivity,
    "total-ecc": total_eccentricity,
}
