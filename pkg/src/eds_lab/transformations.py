"""Tree surgeries with known effect on the eccentric distance sum.

Every transformation here reattaches some neighbors of one vertex to another
vertex, so vertex ids are preserved: the result is a tree on the same ids
with a few edges moved. Inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tree import Tree, diameter, eccentricity, eds, tree_from_edges


class TransformError(ValueError):
    pass


STRICT_DECREASE = "strict-decrease"
EQUAL = "equal"
STRICT_INCREASE = "strict-increase"


def relation_of(before: int, after: int) -> str:
    if after < before:
        return STRICT_DECREASE
    if after > before:
        return STRICT_INCREASE
    return EQUAL


@dataclass(frozen=True)
class TransformOutcome:
    result: Tree
    eds_before: int
    eds_after: int
    relation: str
    info: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "eds_before": self.eds_before,
            "eds_after": self.eds_after,
            "relation": self.relation,
            "result_edges": [list(e) for e in self.result.edges],
            **self.info,
        }


def _move(t: Tree, src: int, dst: int, movers) -> Tree:
    movers = set(movers)
    edges = []
    for u, v in t.edges:
        if u == src and v in movers:
            edges.append((dst, v))
        elif v == src and u in movers:
            edges.append((u, dst))
        else:
            edges.append((u, v))
    return tree_from_edges(t.n, edges)


def _outcome(t: Tree, result: Tree, **info) -> TransformOutcome:
    before, after = eds(t), eds(result)
    return TransformOutcome(result, before, after, relation_of(before, after), info)


def _require_edge(t: Tree, u: int, v: int) -> None:
    if not (0 <= u < t.n and 0 <= v < t.n) or v not in t.adjacency[u]:
        raise TransformError(f"({u}, {v}) is not an edge")


def _component(t: Tree, start: int, blocked: int) -> list[int]:
    """Vertices reachable from ``start`` without passing through ``blocked``."""
    seen = {start, blocked}
    out = [start]
    for x in out:
        for y in t.adjacency[x]:
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def _is_pendant_path(t: Tree, root: int, parent: int) -> bool:
    prev, cur = parent, root
    while True:
        rest = [y for y in t.adjacency[cur] if y != prev]
        if not rest:
            return True
        if len(rest) > 1:
            return False
        prev, cur = cur, rest[0]


def edge_growing(t: Tree, u: int, v: int) -> TransformOutcome:
    """Contract the non-pendant edge ``uv`` and hang a new leaf on the merged vertex.

    The merged vertex keeps id ``u``; id ``v`` becomes the new leaf.
    """
    if t.n <= 3:
        raise TransformError("edge-growing needs n > 3")
    _require_edge(t, u, v)
    if t.degree(u) < 2 or t.degree(v) < 2:
        raise TransformError(f"({u}, {v}) is a pendant edge")
    movers = [x for x in t.adjacency[v] if x != u]
    return _outcome(t, _move(t, v, u, movers))


def rho_transform(t: Tree, v: int, w: int, keep: int | None = None) -> TransformOutcome:
    """Move all but one of the branches at ``v`` (away from ``w``) onto ``w``.

    The branch left on ``v`` must be a pendant path; by default the qualifying
    branch with the smallest root id, or the one rooted at ``keep``. The
    outcome's ``info`` records whether the equality condition holds: equal
    eccentricities at ``v`` and ``w`` and the kept path, ``v`` and the
    component of ``w`` inducing a longest path of the tree.
    """
    _require_edge(t, v, w)
    branches = [x for x in t.adjacency[v] if x != w]
    if len(branches) < 2:
        raise TransformError(f"vertex {v} needs degree >= 3, has {t.degree(v)}")
    ecc_v, ecc_w = eccentricity(t, v), eccentricity(t, w)
    if ecc_v < ecc_w:
        raise TransformError(f"need ecc({v}) >= ecc({w}), got {ecc_v} < {ecc_w}")
    paths = [x for x in branches if _is_pendant_path(t, x, v)]
    if keep is None:
        if not paths:
            raise TransformError(f"no branch at {v} is a pendant path")
        keep = paths[0]
    elif keep not in paths:
        raise TransformError(f"branch rooted at {keep} is not a pendant path at {v}")
    result = _move(t, v, w, [x for x in branches if x != keep])

    rest = _component(t, w, v)
    kept = _component(t, keep, v)
    span = set(rest) | set(kept) | {v}
    induced_deg = {x: sum(1 for y in t.adjacency[x] if y in span) for x in span}
    is_path = all(d <= 2 for d in induced_deg.values())
    longest = is_path and len(span) - 1 == diameter(t)
    condition = ecc_v == ecc_w and longest
    return _outcome(t, result, kept_branch=keep, equality_condition=condition)


def hanging_sizes(t: Tree, spine) -> list[int]:
    """Order of the branch hanging at each spine vertex (spine vertex included)."""
    on_spine = set(spine)
    sizes = []
    for x in spine:
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in t.adjacency[y]:
                if z not in seen and z not in on_spine:
                    seen.add(z)
                    stack.append(z)
        sizes.append(len(seen))
    return sizes


def _check_longest_path(t: Tree, spine) -> None:
    spine = list(spine)
    if len(set(spine)) != len(spine) or len(spine) < 2:
        raise TransformError("spine must list distinct vertices")
    for a, b in zip(spine, spine[1:]):
        _require_edge(t, a, b)
    if len(spine) - 1 != diameter(t):
        raise TransformError(f"spine has length {len(spine) - 1}, diameter is {diameter(t)}")


def slide_index(t: Tree, spine) -> int:
    """Smallest interior index ``r`` in ``2..d-2`` whose hanging branch is nontrivial."""
    sizes = hanging_sizes(t, spine)
    d = len(spine) - 1
    for r in range(2, d - 1):
        if sizes[r] > 1:
            return r
    raise TransformError("no interior branch: the tree is a double broom on this spine")


def leaf_block_slide(t: Tree, spine, r: int | None = None) -> TransformOutcome:
    """Move every off-spine neighbor of spine vertex ``v_r`` onto ``v_1``.

    ``spine`` is a longest path ``v_0 .. v_d`` whose branch at ``v_1`` is no
    larger than the one at ``v_{d-1}``; ``r`` defaults to (and must equal) the
    smallest interior index carrying a nontrivial branch.
    """
    spine = list(spine)
    _check_longest_path(t, spine)
    sizes = hanging_sizes(t, spine)
    d = len(spine) - 1
    if sizes[1] > sizes[d - 1]:
        raise TransformError("branch at v_1 is larger than branch at v_{d-1}; reverse the spine")
    first = slide_index(t, spine)
    if r is None:
        r = first
    elif r != first:
        raise TransformError(f"r must be the first nontrivial interior index {first}, got {r}")
    vr = spine[r]
    movers = [x for x in t.adjacency[vr] if x not in (spine[r - 1], spine[r + 1])]
    return _outcome(t, _move(t, vr, spine[1], movers), r=r)


def transformation_I(t: Tree, w: int, u: int, v: int) -> TransformOutcome:
    """Move the leaves of ``v`` onto ``w`` along the path ``w - u - v``."""
    _require_edge(t, w, u)
    _require_edge(t, u, v)
    if w == v:
        raise TransformError("w and v must differ")
    if t.degree(w) < 2:
        raise TransformError(f"vertex {w} must have degree >= 2")
    movers = [x for x in t.adjacency[v] if x != u]
    if not movers:
        raise TransformError(f"vertex {v} has no neighbors besides {u}")
    if any(t.degree(x) != 1 for x in movers):
        raise TransformError(f"every neighbor of {v} other than {u} must be a leaf")
    return _outcome(t, _move(t, v, w, movers))


OPERATIONS = {
    "egt": edge_growing,
    "rho": rho_transform,
    "slide": leaf_block_slide,
    "t1": transformation_I,
}
