"""Lower-bound machinery: neighborhood expansion, girth-degree and Moore bounds,
and the exact check of the rational inequality used to close the main proof.

All comparisons go through :class:`fractions.Fraction`; floats never decide a
verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from .graph import Acyclic, Graph, VertexSet, average_degree, girth, min_degree, popcount

#: Subset evaluations allowed in :func:`delta_p` before refusing.
DEFAULT_BUDGET = 10**8

#: 1.64 as an exact rational.
GROWTH_BASE = Fraction(41, 25)


class BoundError(ValueError):
    pass


class MooreHypothesisError(BoundError):
    """Average degree below 2: the Moore bound does not apply."""


class BudgetExceeded(BoundError):
    pass


def _subsets(n: int, p: int) -> Iterator[VertexSet]:
    for combo in combinations(range(n), p):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def _neigh(adj: tuple[int, ...], X: VertexSet) -> VertexSet:
    out = 0
    m = X
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out & ~X


def delta_p(G: Graph, p: int, *, budget: int = DEFAULT_BUDGET) -> tuple[int, VertexSet]:
    """Minimum ``|N(X)|`` over ``p``-subsets X, and the lexicographically first minimizer."""
    if not 1 <= p <= G.n:
        raise BoundError(f"p={p} outside [1, {G.n}]")
    if comb(G.n, p) > budget:
        raise BudgetExceeded(f"C({G.n},{p}) = {comb(G.n, p)} subsets exceeds budget {budget}")
    best, arg = G.n + 1, 0
    adj = G.adj
    for X in _subsets(G.n, p):
        size = popcount(_neigh(adj, X))
        if size < best:
            best, arg = size, X
            if best == 0:
                break
    return best, arg


def delta_p_minimizers(G: Graph, p: int, *, budget: int = DEFAULT_BUDGET) -> list[VertexSet]:
    """Every ``p``-subset achieving :func:`delta_p`, in lexicographic order."""
    value, _ = delta_p(G, p, budget=budget)
    return [X for X in _subsets(G.n, p) if popcount(_neigh(G.adj, X)) == value]


def girth_degree_bound(g, delta: int) -> int:
    """``(g - 2)(delta - 2) + 2``, the lower bound on Z(G) for girth g, min degree delta."""
    if g is Acyclic:
        raise BoundError("bound needs a finite girth; got an acyclic graph")
    if g < 3 or delta < 2:
        raise BoundError(f"need g >= 3 and delta >= 2, got g={g}, delta={delta}")
    return (g - 2) * (delta - 2) + 2


def moore_sum(r: int, d: Fraction) -> Fraction:
    d = Fraction(d)
    return 2 * sum((d - 1) ** i for i in range(r))


def moore_check(n: int, r: int, d) -> bool:
    """``n >= 2 * sum_{i<r} (d-1)^i`` in exact arithmetic (girth >= 2r, average degree d)."""
    d = Fraction(d)
    if r < 1:
        raise BoundError(f"r must be >= 1, got {r}")
    if d < 2:
        raise MooreHypothesisError(f"average degree {d} < 2")
    return n >= moore_sum(r, d)


def lemma2_exponent(p: int) -> int:
    return (p + 1) // 2 + 1


def lemma2_lhs(p: int, f: int) -> Fraction:
    return (1 + Fraction(2 * (f - p), f + p)) ** lemma2_exponent(p)


def lemma2_holds(p: int, f: int) -> tuple[bool, Fraction]:
    """Strict ``(1 + 2(f-p)/(f+p))^(ceil(p/2)+1) > f - p + 1``, with the exact left side."""
    if p < 1 or f < 1:
        raise BoundError(f"need p, f >= 1, got p={p}, f={f}")
    lhs = lemma2_lhs(p, f)
    return lhs > f - p + 1, lhs


def lemma2_pairs(p_min: int, p_max: int) -> Iterator[tuple[int, int]]:
    for p in range(p_min, p_max + 1):
        for f in range(2 * p - 1, comb(p, 2) + 1):
            yield p, f


def lemma2_pair_count(p_min: int, p_max: int) -> int:
    return sum(max(0, comb(p, 2) - 2 * p + 2) for p in range(p_min, p_max + 1))


def lemma2_scan(p_min: int, p_max: int) -> list[tuple[int, int]]:
    """All pairs ``(p, f)`` with ``2p-1 <= f <= C(p,2)`` where the inequality fails."""
    if p_min < 5:
        raise BoundError(f"p_min must be >= 5, got {p_min}")
    return [(p, f) for p, f in lemma2_pairs(p_min, p_max) if not lemma2_holds(p, f)[0]]


def growth_check(p: int) -> bool:
    """The two exact facts behind the large-p case, checked at one p >= 17."""
    if p < 17:
        raise BoundError(f"growth check applies to p >= 17, got {p}")
    f = 2 * p - 1
    base_ok = 1 + Fraction(2 * (f - p), f + p) >= GROWTH_BASE
    power_ok = GROWTH_BASE ** lemma2_exponent(p) > comb(p, 2) - p + 1
    return base_ok and power_ok


@dataclass
class BoundReport:
    """Bound values for one graph at one ``p``."""

    p: int
    delta_p: int
    girth_bound: int | None
    moore_ok: dict[int, bool] = field(default_factory=dict)


def bound_report(G: Graph, p: int, g=None, delta: int | None = None) -> BoundReport:
    g = girth(G) if g is None else g
    delta = min_degree(G) if delta is None else delta
    value, _ = delta_p(G, p)
    try:
        gb = girth_degree_bound(g, delta)
    except BoundError:
        gb = None
    moore = {}
    d = average_degree(G)
    if d >= 2:
        for r in (1, 2, 3):
            if g is Acyclic or g >= 2 * r:
                moore[r] = moore_check(G.n, r, d)
    return BoundReport(p, value, gb, moore)
