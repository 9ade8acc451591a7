"""Named tree families with fixed, documented vertex labelings.

Constructors accept every parameter value that still yields a well-formed
tree of the intended shape (for instance a double broom with no leaves on one
end). The narrower ranges under which the extremal results are stated are
exposed separately through :func:`in_stated_range`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .tree import Tree, tree_from_edges


class FamilyError(ValueError):
    pass


def _leaves_on(edges: list, hub: int, count: int, next_id: int) -> int:
    for j in range(count):
        edges.append((hub, next_id + j))
    return next_id + count


def path(n: int) -> Tree:
    """Path ``0 - 1 - ... - (n-1)``."""
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """Star with center 0 and leaves ``1..n-1``."""
    if n < 1:
        raise FamilyError("star needs n >= 1")
    return tree_from_edges(n, [(0, i) for i in range(1, n)])


def double_broom(l: int, a: int, b: int) -> Tree:
    """``P_l(a, b)``: spine ``0..l-1``, ``a`` leaves on 0, then ``b`` leaves on ``l-1``."""
    if l < 2 or a < 0 or b < 0:
        raise FamilyError(f"double broom needs l >= 2 and a, b >= 0, got {(l, a, b)}")
    edges = [(i, i + 1) for i in range(l - 1)]
    nxt = _leaves_on(edges, 0, a, l)
    nxt = _leaves_on(edges, l - 1, b, nxt)
    return tree_from_edges(nxt, edges)


def t_n_beta(n: int, beta: int, supports=None) -> Tree:
    """Star ``S_{n-beta+1}`` with a pendant edge on ``beta - 1`` of its leaves.

    Center 0, star leaves ``1..n-beta``; the pendant on the k-th chosen
    support (k counted from 0) gets id ``n - beta + 1 + k``. ``supports`` defaults to
    ``1..beta-1``; any other choice of ``beta - 1`` star leaves gives an
    isomorphic tree.
    """
    if n < 2 or not 1 <= beta <= n // 2:
        raise FamilyError(f"t_n_beta needs 1 <= beta <= n/2, got n={n}, beta={beta}")
    m = n - beta
    if supports is None:
        supports = range(1, beta)
    supports = list(supports)
    if len(supports) != beta - 1 or len(set(supports)) != beta - 1 or any(
        not 1 <= s <= m for s in supports
    ):
        raise FamilyError(f"need {beta - 1} distinct supports among 1..{m}")
    edges = [(0, i) for i in range(1, m + 1)]
    edges += [(s, m + 1 + k) for k, s in enumerate(supports)]
    return tree_from_edges(n, edges)


def spider(legs) -> Tree:
    """Hub 0; each leg is laid out consecutively, its first vertex on the hub."""
    legs = list(legs)
    if any(a < 1 for a in legs):
        raise FamilyError(f"spider legs must be >= 1, got {legs}")
    edges = []
    nxt = 1
    for a in legs:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_from_edges(nxt, edges)


def balanced_spider_legs(n: int, k: int) -> list[int]:
    if k < 2 or n - 1 < k:
        raise FamilyError(f"balanced spider needs 2 <= k <= n-1, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    return [q + 1] * r + [q] * (k - r)


def balanced_spider(n: int, k: int) -> Tree:
    """Spider with ``k`` legs on ``n`` vertices, longer legs first."""
    return spider(balanced_spider_legs(n, k))


def pendant_expansion(t: Tree, p: int) -> Tree:
    """``t`` with ``p`` leaves on every vertex; pendant j of vertex i is ``n + i*p + j``."""
    if p < 1:
        raise FamilyError("pendant expansion needs p >= 1")
    n = t.n
    edges = list(t.edges)
    for i in range(n):
        for j in range(p):
            edges.append((i, n + i * p + j))
    return tree_from_edges((p + 1) * n, edges)


def corona_k1(t: Tree) -> Tree:
    return pendant_expansion(t, 1)


def double_star(p: int, q: int) -> Tree:
    """``T(p, q)``: centers 0 and 1; leaves ``2..p`` on 0 and ``p+1..p+q-1`` on 1."""
    if p < 2 or q < 2:
        raise FamilyError(f"double star needs p, q >= 2, got {(p, q)}")
    edges = [(0, 1)]
    nxt = _leaves_on(edges, 0, p - 1, 2)
    _leaves_on(edges, 1, q - 1, nxt)
    return tree_from_edges(p + q, edges)


def _three_hub(c_leaves: int, a_leaves: int, b_leaves: int) -> Tree:
    # c=0 adjacent to a=1 and b=2; then c's, a's, b's leaves in that order
    edges = [(0, 1), (0, 2)]
    nxt = _leaves_on(edges, 0, c_leaves, 3)
    nxt = _leaves_on(edges, 1, a_leaves, nxt)
    nxt = _leaves_on(edges, 2, b_leaves, nxt)
    return tree_from_edges(nxt, edges)


def t_s(p: int, q: int, s: int) -> Tree:
    """``T_s``: c=0 with ``q-2`` leaves, a=1 with ``p-s-1`` leaves, b=2 with ``s`` leaves."""
    if q < 2 or not 1 <= s <= p - 2:
        raise FamilyError(f"t_s needs q >= 2 and 1 <= s <= p-2, got {(p, q, s)}")
    return _three_hub(q - 2, p - s - 1, s)


def t_prime_t(p: int, q: int, t: int) -> Tree:
    """``T'_t``: c=0 with ``p-2`` leaves, a=1 with ``q-t-1`` leaves, b=2 with ``t`` leaves."""
    if p < 2 or not 1 <= t <= q - 2:
        raise FamilyError(f"t_prime_t needs p >= 2 and 1 <= t <= q-2, got {(p, q, t)}")
    return _three_hub(p - 2, q - t - 1, t)


def hat_t_s(p: int, q: int, s: int) -> Tree:
    """c=0 with ``q-3`` leaves and pendant path c-x-y (x=1, y=2); a=3 with
    ``p-s-2`` leaves and b=4 with ``s`` leaves hang on c."""
    if q < 3 or not 1 <= s <= p - 2:
        raise FamilyError(f"hat_t_s needs q >= 3 and 1 <= s <= p-2, got {(p, q, s)}")
    edges = [(0, 1), (1, 2), (0, 3), (0, 4)]
    nxt = _leaves_on(edges, 0, q - 3, 5)
    nxt = _leaves_on(edges, 3, p - s - 2, nxt)
    nxt = _leaves_on(edges, 4, s, nxt)
    return tree_from_edges(nxt, edges)


def tilde_t_t(p: int, q: int, t: int) -> Tree:
    """Spine w1=0, w2=1, w3=2, b=3 with ``p-2`` leaves on w1, ``q-t-2`` on w2, ``t`` on b."""
    if p < 2 or not 1 <= t <= q - 2:
        raise FamilyError(f"tilde_t_t needs p >= 2 and 1 <= t <= q-2, got {(p, q, t)}")
    edges = [(0, 1), (1, 2), (2, 3)]
    nxt = _leaves_on(edges, 0, p - 2, 4)
    nxt = _leaves_on(edges, 1, q - t - 2, nxt)
    nxt = _leaves_on(edges, 3, t, nxt)
    return tree_from_edges(nxt, edges)


def vec_t_r(p: int, q: int, r: int) -> Tree:
    """u=0 with ``p-3`` leaves, adjacent to b=1 (``r`` leaves) and v=2 (``q-r-2``
    leaves); pendant path v-x-y with x=3, y=4."""
    if p < 3 or not 1 <= r <= q - 2:
        raise FamilyError(f"vec_t_r needs p >= 3 and 1 <= r <= q-2, got {(p, q, r)}")
    edges = [(0, 1), (0, 2), (2, 3), (3, 4)]
    nxt = _leaves_on(edges, 0, p - 3, 5)
    nxt = _leaves_on(edges, 1, r, nxt)
    nxt = _leaves_on(edges, 2, q - r - 2, nxt)
    return tree_from_edges(nxt, edges)


def in_stated_range(family: str, *params: int) -> bool:
    """Whether the parameters lie in the range the extremal statements use."""
    if family == "ts":
        p, q, s = params
        return 3 <= p <= q and 1 <= s and 2 * s <= p - 1
    if family == "tprime":
        p, q, t = params
        return 3 <= p <= q and 1 <= t and 2 * t <= q - 1
    if family in ("hat", "tilde"):
        p, q, s = params
        return 4 <= p < q and 1 <= s <= p - 3
    if family == "vec":
        p, q, r = params
        return 4 <= p < q and 1 <= r <= q - 3
    if family == "tnbeta":
        n, beta = params
        return 1 <= beta <= n // 2
    if family == "broom":
        l, a, b = params
        return l >= 2 and a >= 1 and b >= 1
    raise FamilyError(f"no stated range for family {family!r}")


# --- textual family descriptors -------------------------------------------

_BUILDERS = {
    "path": (path, 1),
    "star": (star, 1),
    "broom": (double_broom, 3),
    "tnbeta": (t_n_beta, 2),
    "spider": (lambda *legs: spider(legs), None),
    "bspider": (balanced_spider, 2),
    "dstar": (double_star, 2),
    "ts": (t_s, 3),
    "tprime": (t_prime_t, 3),
    "hat": (hat_t_s, 3),
    "tilde": (tilde_t_t, 3),
    "vec": (vec_t_r, 3),
}

FAMILIES = tuple(_BUILDERS) + ("corona", "expand")


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus integer parameters, e.g. ``tnbeta:8,3``.

    ``corona`` and ``expand`` wrap an inner spec: ``corona:path:3`` and
    ``expand:2:star:4`` (two leaves on every vertex of ``S_4``).
    """

    family: str
    params: tuple[int, ...] = ()
    inner: "FamilySpec | None" = None

    def __str__(self) -> str:
        if self.family == "corona":
            return f"corona:{self.inner}"
        if self.family == "expand":
            return f"expand:{self.params[0]}:{self.inner}"
        return f"{self.family}:{','.join(map(str, self.params))}"

    def build(self) -> Tree:
        if self.family == "corona":
            return corona_k1(self.inner.build())
        if self.family == "expand":
            return pendant_expansion(self.inner.build(), self.params[0])
        builder, arity = _BUILDERS[self.family]
        if arity is not None and len(self.params) != arity:
            raise FamilyError(f"{self.family} takes {arity} parameters, got {len(self.params)}")
        return builder(*self.params)


_INT_LIST = re.compile(r"^\d+(,\d+)*$")


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    family, sep, rest = text.partition(":")
    family = family.lower()
    if not sep:
        raise FamilyError(f"family spec needs 'name:params', got {text!r}")
    if family == "corona":
        return FamilySpec("corona", (), parse_family(rest))
    if family == "expand":
        count, sep, inner = rest.partition(":")
        if not sep or not count.isdigit():
            raise FamilyError(f"expand spec is 'expand:p:<family>', got {text!r}")
        return FamilySpec("expand", (int(count),), parse_family(inner))
    if family not in _BUILDERS:
        raise FamilyError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    if not _INT_LIST.match(rest):
        raise FamilyError(f"parameters must be comma-separated integers, got {rest!r}")
    return FamilySpec(family, tuple(int(x) for x in rest.split(",")))


def build_family(text: str) -> Tree:
    return parse_family(text).build()
