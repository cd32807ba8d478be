"""Re-execute the structural argument behind ``Z(G) >= (g-2)(delta-2) + 2``
on a concrete graph of girth at least 5.

The argument picks a set X of ``g - 2`` vertices with the smallest open
neighborhood N, splits X into the components K_1..K_p of G[X], contracts each
component to one vertex to get a bipartite graph H on ``parts + N``, and
prunes degree-1 vertices of H once to get H'.  Each check below turns one
step of that argument into an assertion; a failing check on a graph that
meets the hypotheses is a counterexample record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .bounds import delta_p, delta_p_minimizers, girth_degree_bound, lemma2_holds, moore_check
from .graph import (
    Acyclic,
    Graph,
    VertexSet,
    as_mask,
    components,
    contract_to_bipartite,
    girth,
    induced_edge_count,
    iter_members,
    members,
    min_degree,
    neighborhood,
    popcount,
)


class HypothesisError(ValueError):
    """The graph does not satisfy girth >= 5 and minimum degree >= 2."""


class ProofClaimError(AssertionError):
    """A claim of the argument failed on a graph meeting the hypotheses."""

    def __init__(self, claim: str, detail: str):
        self.claim = claim
        self.detail = detail
        super().__init__(f"{claim}: {detail}")


@dataclass(frozen=True)
class ProofDecomposition:
    G: Graph
    g: object
    delta: int
    X: VertexSet
    N: VertexSet
    parts: tuple[VertexSet, ...]
    H: Graph
    Hprime: Graph
    hprime_map: tuple[int, ...]  # H' vertex -> H vertex
    q: int
    f: int

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def n_list(self) -> list[int]:
        """Members of N in H-vertex order (H-vertex ``p + j`` is ``n_list[j]``)."""
        return members(self.N)

    def h_degree(self, h: int) -> int:
        return popcount(self.H.adj[h])

    def summary(self) -> dict:
        return {
            "X": members(self.X),
            "N": members(self.N),
            "parts": [members(P) for P in self.parts],
            "p": self.p,
            "q": self.q,
            "f": self.f,
        }


@dataclass
class CheckResult:
    name: str
    ok: bool
    values: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def check_hypotheses(G: Graph) -> tuple[int, int]:
    g = girth(G)
    if G.n == 0:
        raise HypothesisError("empty graph")
    delta = min_degree(G)
    if g is Acyclic or g < 5:
        raise HypothesisError(f"girth {g} < 5")
    if delta < 2:
        raise HypothesisError(f"minimum degree {delta} < 2")
    if G.n < g - 2:
        raise HypothesisError(f"n={G.n} < g-2={g - 2}")
    return g, delta


def decompose(G: Graph, X, g=None, delta: int | None = None) -> ProofDecomposition:
    """Build the decomposition for a given X without checking any claim.

    Usable on graphs outside the hypotheses, to show which claims break.
    """
    X = as_mask(X)
    g = girth(G) if g is None else g
    delta = min_degree(G) if delta is None else delta
    N = neighborhood(G, X)
    parts = tuple(components(G, X))
    H, _ = contract_to_bipartite(G, parts, N)
    p = len(parts)
    f = sum(popcount(H.adj[h]) - 1 for h in range(p, H.n))
    keep = [h for h in range(H.n) if popcount(H.adj[h]) != 1]
    Hprime, _ = H.induced(keep)
    q = sum(1 for h in keep if h >= p)
    return ProofDecomposition(G, g, delta, X, N, parts, H, Hprime, tuple(keep), q, f)


def decomposition_violations(d: ProofDecomposition) -> list[tuple[str, str]]:
    """Structural invariants of a decomposition, as ``(claim, detail)`` pairs."""
    G = d.G
    out = []
    if d.g is not Acyclic and popcount(d.X) != d.g - 2:
        out.append(("|X| = g-2", f"|X|={popcount(d.X)}, g={d.g}"))
    for P in d.parts:
        if induced_edge_count(G, P) != popcount(P) - 1:
            out.append(("components of G[X] are trees", f"part {members(P)} has a cycle"))
    for v in iter_members(d.N):
        for P in d.parts:
            if popcount(G.adj[v] & P) > 1:
                out.append(
                    ("N-vertex has at most one neighbor per component", f"vertex {v}, part {members(P)}")
                )
    if d.f < 0 or not 0 <= d.q <= popcount(d.N):
        out.append(("f >= 0 and 0 <= q <= |N|", f"f={d.f}, q={d.q}"))
    return out


def build_decomposition(G: Graph, X=None) -> ProofDecomposition:
    """Decomposition at the lexicographically first X minimizing ``|N(X)|``.

    Raises :class:`HypothesisError` unless girth >= 5 and minimum degree >= 2,
    and :class:`ProofClaimError` if a structural invariant fails.
    """
    g, delta = check_hypotheses(G)
    if X is None:
        _, X = delta_p(G, g - 2)
    d = decompose(G, X, g, delta)
    bad = decomposition_violations(d)
    if bad:
        raise ProofClaimError(*bad[0])
    return d


def all_decompositions(G: Graph) -> list[ProofDecomposition]:
    """One decomposition for every X attaining the minimum."""
    g, _ = check_hypotheses(G)
    return [build_decomposition(G, X) for X in delta_p_minimizers(G, g - 2)]


def pairwise_common(d: ProofDecomposition) -> dict[tuple[int, int], int]:
    G = d.G
    neigh = [neighborhood(G, P) for P in d.parts]
    return {
        (i, j): popcount(neigh[i] & neigh[j])
        for i in range(d.p)
        for j in range(i + 1, d.p)
    }


def pairwise_cap(p: int) -> int:
    return comb(p, 2) if p >= 3 else 2 * p - 2


def check_pairwise_caps(d: ProofDecomposition) -> CheckResult:
    """Sum of common neighborhoods over part pairs against its cap.

    The structural facts behind the cap are checked too: for ``p >= 3`` each
    pair of parts shares at most one neighbor; for ``p == 2`` at most two.
    """
    common = pairwise_common(d)
    total = sum(common.values())
    cap = pairwise_cap(d.p)
    per_pair = 1 if d.p >= 3 else 2
    worst = max(common.values(), default=0)
    structural = worst <= per_pair
    numeric = total <= cap
    return CheckResult(
        "pairwise_caps",
        structural and numeric,
        {"sum": total, "cap": cap, "max_pair": worst, "structural": structural, "numeric": numeric},
    )


def hprime_girth_floor(p: int) -> int:
    return p + 2 if p % 2 == 0 else p + 3


def check_hprime_girth(d: ProofDecomposition) -> CheckResult:
    gp = girth(d.Hprime)
    floor = hprime_girth_floor(d.p)
    ok = gp is Acyclic or (gp % 2 == 0 and gp >= floor)
    return CheckResult(
        "hprime_girth", ok, {"girth": None if gp is Acyclic else gp, "floor": floor}
    )


def check_counting_chain(G: Graph, d: ProofDecomposition) -> CheckResult:
    """Each line of the count ``|N| >= bound + (2p - 2) - f``.

    (i) ``|N| = sum of part-vertex degrees in H - f`` holds with equality.
    (ii) each part-vertex has H-degree equal to its G-degree sum minus twice
    its tree edges, hence at least ``delta|K| - 2(|K| - 1)``.
    (iii) the sum of those floors is ``(g-2)(delta-2) + 2p``, giving the chain.
    """
    p = d.p
    size_n = popcount(d.N)
    part_degrees = [d.h_degree(i) for i in range(p)]
    identity = size_n == sum(part_degrees) - d.f

    floors = []
    per_part = True
    for i, P in enumerate(d.parts):
        k = popcount(P)
        exact = sum(G.degree(v) for v in iter_members(P)) - 2 * (k - 1)
        floor = d.delta * k - 2 * (k - 1)
        floors.append(floor)
        if part_degrees[i] != exact or part_degrees[i] < floor:
            per_part = False

    bound = girth_degree_bound(d.g, d.delta)
    algebra = sum(floors) == bound + 2 * p - 2
    chain = size_n >= bound + (2 * p - 2) - d.f
    return CheckResult(
        "counting_chain",
        identity and per_part and algebra and chain,
        {"N": size_n, "f": d.f, "p": p, "bound": bound,
         "identity": identity, "per_part": per_part, "chain": chain},
    )


def check_moore_contradiction_branch(G: Graph, d: ProofDecomposition) -> CheckResult:
    """Follow the case split on ``f``.

    With ``f <= 2p - 2`` the count alone proves the bound (branch
    ``counting``).  Otherwise every step of the Moore-bound contradiction is
    evaluated; the branch is *consistent* only if all steps go through and the
    final inequality contradicts nothing, which would refute the theorem.
    ``ok`` is true exactly when no consistent end state is reached.
    """
    p, f, q = d.p, d.f, d.q
    bound = girth_degree_bound(d.g, d.delta)
    if f <= 2 * p - 2:
        ok = popcount(d.N) >= bound
        return CheckResult("moore_branch", ok, {"branch": "counting", "fired": None})

    steps = {}
    common_sum = sum(pairwise_common(d).values())
    steps["f_le_pair_sum"] = f <= sum(comb(d.h_degree(h), 2) for h in range(p, d.H.n)) <= common_sum
    steps["p_ge_5"] = p >= 5
    steps["parts_survive"] = all(h in d.hprime_map for h in range(p))
    avg = Fraction(2 * (f + q), p + q)
    steps["avg_degree_ge_2"] = avg >= 2
    r = (p + 1) // 2 + 1
    if steps["avg_degree_ge_2"]:
        steps["moore"] = moore_check(p + q, r, avg)
    else:
        steps["moore"] = False
    steps["f_le_cap"] = f <= comb(p, 2)
    # the Moore inequality rearranges to the negation of the rational inequality
    steps["lemma2_fails"] = not lemma2_holds(p, f)[0]
    fired = next((k for k, v in steps.items() if not v), None)
    return CheckResult(
        "moore_branch", fired is not None, {"branch": "contradiction", "fired": fired, "steps": steps}
    )


def run_battery(G: Graph, *, all_minimizers: bool = False) -> list[CheckResult]:
    """Every check on every decomposition built for ``G``."""
    decs = all_decompositions(G) if all_minimizers else [build_decomposition(G)]
    results = []
    for d in decs:
        results += [
            check_pairwise_caps(d),
            check_hprime_girth(d),
            check_counting_chain(G, d),
            check_moore_contradiction_branch(G, d),
        ]
    return results
