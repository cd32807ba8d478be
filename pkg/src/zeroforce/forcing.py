"""Zero forcing closure, schedule checking, and the exact zero forcing number."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, SetLike, VertexSet, as_mask, iter_members, members


class HintError(ValueError):
    """A lower-bound hint was refuted: a zero forcing set below it exists."""

    def __init__(self, hint: int, witness: VertexSet):
        self.hint = hint
        self.witness = witness
        super().__init__(f"zero forcing set {members(witness)} has size below hint {hint}")


@dataclass(frozen=True)
class ForcingSchedule:
    """Initial set ``Z`` and the ordered forces ``forcers[i] -> forced[i]``."""

    Z: VertexSet
    forced: tuple[int, ...] = ()
    forcers: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.forced)


def closure_mask(G: Graph, Z: VertexSet) -> VertexSet:
    """Closure set only; the solver's hot path."""
    adj = G.adj
    S = Z
    changed = True
    while changed:
        changed = False
        for v in iter_members(S):
            out = adj[v] & ~S
            if out and not out & (out - 1):
                S |= out
                changed = True
    return S


def closure(G: Graph, Z: SetLike) -> tuple[VertexSet, ForcingSchedule]:
    """Apply the forcing rule to a fixpoint.

    Each round scans colored vertices in ascending order; a vertex with
    exactly one uncolored neighbor colors it immediately.  Rounds repeat
    while anything changed.
    """
    Z = as_mask(Z)
    if Z >> G.n:
        raise GraphError(f"initial set {members(Z)} exceeds [0, {G.n})")
    adj = G.adj
    S = Z
    forced: list[int] = []
    forcers: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in range(G.n):
            if not S >> v & 1:
                continue
            out = adj[v] & ~S
            if out and not out & (out - 1):
                S |= out
                forced.append(out.bit_length() - 1)
                forcers.append(v)
                changed = True
    return S, ForcingSchedule(Z, tuple(forced), tuple(forcers))


def is_zero_forcing_set(G: Graph, Z: SetLike) -> bool:
    Z = as_mask(Z)
    if Z >> G.n:
        raise GraphError(f"initial set {members(Z)} exceeds [0, {G.n})")
    return closure_mask(G, Z) == G.vertices


def verify_schedule(G: Graph, s: ForcingSchedule) -> bool:
    """Check every step of ``s`` against the forcing rule, from scratch."""
    if len(s.forced) != len(s.forcers):
        return False
    for v in list(s.forced) + list(s.forcers) + members(s.Z):
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    colored = s.Z
    for u, v in zip(s.forced, s.forcers):
        if colored >> u & 1 or not colored >> v & 1:
            return False
        if G.adj[v] & ~colored != 1 << u:
            return False
        colored |= 1 << u
    return True


def is_schedule_complete(G: Graph, s: ForcingSchedule) -> bool:
    return verify_schedule(G, s) and s.Z | sum(1 << u for u in s.forced) == G.vertices


def _first_forcing_set(G: Graph, size: int) -> VertexSet | None:
    full = G.vertices
    adj = G.adj
    for combo in combinations(range(G.n), size):
        S = 0
        for v in combo:
            S |= 1 << v
        # inline of closure_mask
        changed = True
        while changed:
            changed = False
            for v in iter_members(S):
                out = adj[v] & ~S
                if out and not out & (out - 1):
                    S |= out
                    changed = True
        if S == full:
            m = 0
            for v in combo:
                m |= 1 << v
            return m
    return None


def zero_forcing_number(
    G: Graph, lower_bound_hint: int | None = None, *, check_hint: bool = True
) -> tuple[int, VertexSet]:
    """Exact Z(G) and the lexicographically smallest minimum zero forcing set.

    Sizes are tried upward from the hint.  With ``check_hint`` the solver
    first confirms no zero forcing set of size ``hint - 1`` exists (enough,
    since supersets of forcing sets are forcing), so a wrong hint raises
    :class:`HintError` instead of silently inflating the answer.
    """
    if G.n == 0:
        raise GraphError("zero forcing number of the empty graph is undefined")
    start = 1 if lower_bound_hint is None else min(max(lower_bound_hint, 1), G.n)
    if check_hint and start > 1:
        below = _first_forcing_set(G, start - 1)
        if below is not None:
            raise HintError(start, below)
    for size in range(start, G.n + 1):
        found = _first_forcing_set(G, size)
        if found is not None:
            return size, found
    raise AssertionError("V(G) is always a zero forcing set")
