"""Closed-form eccentric distance sums and related exact quantities.

Every evaluator returns the polynomial value together with a validity flag:
outside the stated parameter range the value is still computed, because
probing those boundaries against enumeration is the point. Only parameters
for which the expression is meaningless at all raise :class:`FormulaError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class FormulaValue:
    value: int
    valid: bool

    def as_dict(self) -> dict:
        return {"value": self.value, "valid": self.valid}


class FormulaId(enum.Enum):
    EDS_TN_BETA = "EdsTnBeta"
    CORONA_IDENTITY = "CoronaIdentity"
    F_S = "F_s"
    G_T = "G_t"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    EDS_T1 = "EdsT1"
    EDS_T1_PRIME = "EdsT1Prime"
    EDS_T2 = "EdsT2"
    EDS_DOUBLE_STAR = "EdsDoubleStar"
    TOTAL_ECC_PATH_BOUND = "TotalEccPathBound"
    THRESHOLD_PAPER = "ThresholdPaper"
    THRESHOLD_REDERIVED = "ThresholdRederived"


def eds_t_n_beta(n: int, beta: int) -> FormulaValue:
    """``6n^2 + b^2 + 9bn - 22n - 28b + 34``; valid only for ``beta >= 3``.

    For ``beta`` in {1, 2} the tree has diameter below 4 and the polynomial
    overshoots (``S_4`` has 33, the polynomial gives 51).
    """
    if beta < 1 or n < 2 * beta:
        raise FormulaError(f"no tree of order {n} with matching number {beta}")
    value = 6 * n * n + beta * beta + 9 * beta * n - 22 * n - 28 * beta + 34
    return FormulaValue(value, beta >= 3)


def corona_eds(n: int, m: int, eds_t: int, wiener_t: int, totecc_t: int) -> int:
    """EDS of ``T`` with ``m`` leaves on every vertex, from invariants of ``T`` (order n).

    Needs ``n >= 2``: the derivation uses ``ecc(v) >= 1`` for every vertex of ``T``.
    """
    if n < 2:
        raise FormulaError("corona identity needs n >= 2")
    if m < 1:
        raise FormulaError("pendant count m must be >= 1")
    return (
        (m + 1) ** 2 * eds_t
        + 2 * (2 * m + 1) * (m + 1) * wiener_t
        + 2 * m * (n * m + n - 1) * totecc_t
        + 4 * n * n * m * m
        + 3 * n * n * m
        - 4 * n * m
    )


def _bipartite_ok(n: int, p: int, strict: bool = False) -> bool:
    q = n - p
    return p < q if strict else p <= q


def f_s(n: int, p: int, s: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n - 4 * p + 16 * p * s - 16 * s * s - 16 * s + 18
    return FormulaValue(value, p >= 3 and _bipartite_ok(n, p) and 1 <= s and 2 * s <= p - 1)


def g_t(n: int, q: int, t: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * q - 7 * q * q - 22 * n - 4 * q + 16 * q * t - 16 * t * t - 16 * t + 18
    p = n - q
    return FormulaValue(value, 3 <= p <= q and 1 <= t and 2 * t <= q - 1)


def f1(n: int, p: int, s: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 12 * p + 16 * p * s - 16 * s * s - 32 * s - 14
    return FormulaValue(value, p >= 4 and _bipartite_ok(n, p, strict=True) and 1 <= s <= p - 3)


def f2(n: int, p: int, t: int) -> FormulaValue:
    value = (
        8 * n * n + 11 * n * p - 9 * p * p - 33 * n + 14 * p
        + 20 * n * t + 3 * p * t - 64 * t - 18 * t * t - 4
    )
    return FormulaValue(value, p >= 4 and _bipartite_ok(n, p, strict=True) and 1 <= t <= p - 3)


def f3(n: int, p: int, r: int) -> FormulaValue:
    value = (
        8 * n * n + 8 * n * p - 8 * p * p - 24 * n + 17 * p
        + 20 * n * r - 17 * p * r - 4 * r - 18 * r * r - 22
    )
    q = n - p
    return FormulaValue(value, p >= 4 and p < q and 1 <= r <= q - 3)


def eds_t1(n: int, p: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 12 * p - 14
    return FormulaValue(value, p >= 3 and _bipartite_ok(n, p))


def eds_t1_prime(n: int, q: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * q - 7 * q * q - 22 * n + 12 * q - 14
    return FormulaValue(value, 3 <= n - q <= q)


def eds_t2(n: int, p: int) -> FormulaValue:
    value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 28 * p - 78
    # T_2 needs s = 2 <= (p - 1) / 2
    return FormulaValue(value, p >= 5 and _bipartite_ok(n, p))


def eds_double_star(p: int, q: int) -> int:
    if p < 2 or q < 2:
        raise FormulaError(f"double star needs p, q >= 2, got {(p, q)}")
    return (
        2 * (p + 2 * q - 2)
        + 2 * (q + 2 * p - 2)
        + 3 * (p - 1) * (2 * p + 3 * q - 4)
        + 3 * (q - 1) * (2 * q + 3 * p - 4)
    )


def eds_star(n: int) -> int:
    if n < 3:
        raise FormulaError("star formula needs n >= 3")
    return (n - 1) * (4 * n - 5)


def total_ecc_path_bound(n: int, d: int) -> int:
    """Upper bound on total eccentricity of an n-vertex tree of diameter d.

    Equals ``n*d - d^2/4`` for even d and ``n*d - (d^2 - 1)/4`` for odd d;
    both are integers, written here as ``n*d - d*d // 4``.
    """
    if not 2 <= d <= n - 1:
        raise FormulaError(f"need 2 <= d <= n-1, got n={n}, d={d}")
    return n * d - (d * d) // 4


def threshold_paper(n: int, p: int) -> int:
    """Printed difference ``eds(T'_1) - eds(T_2)``."""
    return 2 * n * n + 12 * n - 4 * n * p - 30 * p + 64


def threshold_rederived(n: int, p: int) -> int:
    """``g_t(n, q, 1) - f_s(n, p, 2)`` expanded with ``q = n - p``."""
    return 2 * n * n - 4 * n * p + 12 * n - 40 * p + 64


T2 = "T2"
T1_PRIME = "T1Prime"
TIE = "Tie"


def third_min_winner(n: int, p: int, variant: str) -> str:
    """Which of ``T_2`` and ``T'_1`` has the smaller EDS according to ``variant``.

    Decided by the sign of an integer quadratic; no square roots involved.
    """
    if not 4 <= p < n - p:
        raise FormulaError(f"need 4 <= p < q, got p={p}, q={n - p}")
    if variant == "paper":
        diff = threshold_paper(n, p)
    elif variant == "rederived":
        diff = threshold_rederived(n, p)
    else:
        raise FormulaError(f"unknown variant {variant!r}")
    if diff > 0:
        return T2
    if diff < 0:
        return T1_PRIME
    return TIE


def _threshold_value(n: int, p: int, fn) -> FormulaValue:
    return FormulaValue(fn(n, p), 4 <= p < n - p)


_EVALUATORS = {
    FormulaId.EDS_TN_BETA: (eds_t_n_beta, ("n", "beta")),
    FormulaId.CORONA_IDENTITY: (
        lambda *a: FormulaValue(corona_eds(*a), True),
        ("n", "m", "eds", "wiener", "totecc"),
    ),
    FormulaId.F_S: (f_s, ("n", "p", "s")),
    FormulaId.G_T: (g_t, ("n", "q", "t")),
    FormulaId.F1: (f1, ("n", "p", "s")),
    FormulaId.F2: (f2, ("n", "p", "t")),
    FormulaId.F3: (f3, ("n", "p", "r")),
    FormulaId.EDS_T1: (eds_t1, ("n", "p")),
    FormulaId.EDS_T1_PRIME: (eds_t1_prime, ("n", "q")),
    FormulaId.EDS_T2: (eds_t2, ("n", "p")),
    FormulaId.EDS_DOUBLE_STAR: (lambda p, q: FormulaValue(eds_double_star(p, q), True), ("p", "q")),
    FormulaId.TOTAL_ECC_PATH_BOUND: (lambda n, d: FormulaValue(total_ecc_path_bound(n, d), True), ("n", "d")),
    FormulaId.THRESHOLD_PAPER: (lambda n, p: _threshold_value(n, p, threshold_paper), ("n", "p")),
    FormulaId.THRESHOLD_REDERIVED: (lambda n, p: _threshold_value(n, p, threshold_rederived), ("n", "p")),
}


def parameter_names(fid: FormulaId) -> tuple[str, ...]:
    return _EVALUATORS[fid][1]


def evaluate(fid: FormulaId | str, *args: int) -> FormulaValue:
    if isinstance(fid, str):
        try:
            fid = FormulaId(fid)
        except ValueError:
            raise FormulaError(f"unknown formula id {fid!r}") from None
    fn, names = _EVALUATORS[fid]
    if len(args) != len(names):
        raise FormulaError(f"{fid.value} takes ({', '.join(names)}), got {len(args)} values")
    return fn(*args)
