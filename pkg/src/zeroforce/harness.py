"""Per-graph verification records and the batch driver behind ``zeroforce verify``."""

from __future__ import annotations

import json
import os
import time
from contextlib import contextmanager
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bounds import BoundError, BudgetExceeded, delta_p, girth_degree_bound, growth_check, lemma2_pair_count, lemma2_scan
from .forcing import HintError, zero_forcing_number
from .formats import FormatError, encode_graph6, parse_line
from .graph import Acyclic, Graph, girth, members, min_degree
from .proof import ProofClaimError, run_battery

DEFAULT_CAP = 22
THREADS_ENV = "ZEROFORCE_THREADS"

PASS, FAIL = "pass", "fail"


@dataclass
class VerifyOptions:
    exact: bool = False
    proof: bool = False
    cap: int = DEFAULT_CAP
    deterministic: bool = False
    all_minimizers: bool = False


@dataclass
class VerificationReport:
    graph_id: str
    n: int | None = None
    edge_count: int | None = None
    delta: int | None = None
    girth: int | str | None = None
    zf: int | None = None
    delta_g_minus_2: int | None = None
    bound: int | None = None
    verdicts: dict[str, str] = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)
    status: str = "ok"
    graph6: str | None = None
    witness: list[int] | None = None

    @property
    def counterexample(self) -> bool:
        return self.status == "COUNTEREXAMPLE"

    def to_json(self) -> str:
        record = {
            "graph_id": self.graph_id,
            "n": self.n,
            "edge_count": self.edge_count,
            "delta": self.delta,
            "girth": self.girth,
            "zf": self.zf,
            "zf_witness": self.witness,
            "delta_g_minus_2": self.delta_g_minus_2,
            "bound": self.bound,
            "verdicts": self.verdicts,
            "timing_ms": self.timing,
            "status": self.status,
        }
        if self.counterexample:
            record["graph6"] = self.graph6
        return json.dumps(record, separators=(",", ":"))


@contextmanager
def _timed(report: VerificationReport, name: str, zeroed: bool):
    t0 = time.perf_counter()
    try:
        yield
    finally:
        report.timing[name] = 0.0 if zeroed else round((time.perf_counter() - t0) * 1000, 3)


def verify_graph(G: Graph, graph_id: str, opts: VerifyOptions) -> VerificationReport:
    """Compute invariants and run every requested check on one graph."""
    rep = VerificationReport(graph_id, n=G.n, edge_count=G.edge_count)
    zeroed = opts.deterministic
    failed = []

    with _timed(rep, "basic", zeroed):
        g = girth(G) if G.n else Acyclic
        rep.girth = "Acyclic" if g is Acyclic else g
        rep.delta = min_degree(G) if G.n else None

    hypotheses = g is not Acyclic and rep.delta is not None and rep.delta >= 2
    if hypotheses:
        rep.bound = girth_degree_bound(g, rep.delta)
        rep.verdicts["hypotheses"] = PASS
    else:
        rep.verdicts["hypotheses"] = "skipped: needs cycle and delta >= 2"

    if hypotheses and G.n <= opts.cap:
        with _timed(rep, "delta_p", zeroed):
            try:
                rep.delta_g_minus_2, _ = delta_p(G, g - 2)
            except BudgetExceeded:
                rep.verdicts["delta_p"] = "skipped: budget"

    if not opts.exact:
        rep.verdicts["exact"] = "skipped: not requested"
    elif G.n == 0:
        rep.verdicts["exact"] = "skipped: empty"
    elif G.n > opts.cap:
        rep.verdicts["exact"] = "skipped: size"
    else:
        hint = max(x for x in (rep.bound, rep.delta_g_minus_2, 1) if x is not None)
        with _timed(rep, "zf", zeroed):
            try:
                rep.zf, witness = zero_forcing_number(G, hint)
                rep.witness = members(witness)
            except HintError as exc:
                # the hint itself is a proven lower bound; a smaller forcing set refutes it
                rep.witness = members(exc.witness)
                rep.verdicts["exact"] = FAIL
                failed.append("exact")
        if rep.zf is not None:
            if hypotheses:
                ok = rep.zf >= rep.bound
                rep.verdicts["exact"] = PASS if ok else FAIL
                if not ok:
                    failed.append("exact")
            else:
                rep.verdicts["exact"] = "computed"
            if rep.delta_g_minus_2 is not None:
                ok = rep.zf >= rep.delta_g_minus_2
                rep.verdicts["lemma1"] = PASS if ok else FAIL
                if not ok:
                    failed.append("lemma1")

    if opts.proof:
        if hypotheses and g >= 5 and G.n <= opts.cap:
            with _timed(rep, "proof", zeroed):
                try:
                    for res in run_battery(G, all_minimizers=opts.all_minimizers):
                        prev = rep.verdicts.get(res.name, PASS)
                        rep.verdicts[res.name] = PASS if res.ok and prev == PASS else FAIL
                        if not res.ok:
                            failed.append(res.name)
                except ProofClaimError as exc:
                    rep.verdicts["decomposition"] = f"fail: {exc.claim}"
                    failed.append("decomposition")
        elif not hypotheses or g < 5:
            rep.verdicts["proof"] = "skipped: needs girth >= 5 and delta >= 2"
        else:
            rep.verdicts["proof"] = "skipped: size"

    if failed:
        rep.status = "COUNTEREXAMPLE"
        rep.graph6 = encode_graph6(G)
    return rep


def parse_error_report(graph_id: str, message: str) -> VerificationReport:
    return VerificationReport(graph_id, verdicts={"parse": f"error: {message}"}, status="parse-error")


def read_graphs(lines: Iterable[str], fmt: str = "graph6") -> Iterator[tuple[str, Graph | FormatError]]:
    """``(line-number id, graph or the parse error)`` for every non-blank line."""
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or (fmt == "graph6" and text == ">>graph6<<"):
            continue
        try:
            yield str(lineno), parse_line(text, fmt)
        except (FormatError, ValueError) as exc:
            yield str(lineno), FormatError(str(exc))


def _verify_item(args):
    graph_id, item, opts = args
    if isinstance(item, Exception):
        return parse_error_report(graph_id, str(item))
    return verify_graph(item, graph_id, opts)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_verify(
    items: Iterable[tuple[str, Graph | Exception]], opts: VerifyOptions, workers: int | None = None
) -> Iterator[VerificationReport]:
    """Reports in input order; the worker count never changes the output."""
    workers = thread_count() if workers is None else workers
    jobs = ((gid, item, opts) for gid, item in items)
    if workers <= 1:
        yield from map(_verify_item, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_verify_item, jobs, chunksize=8)


def run_lemma2(p_min: int, p_max: int) -> dict:
    """Exact scan of ``[p_min, p_max]`` plus the growth facts for ``p`` in ``[17, p_max]``."""
    if p_min < 5:
        raise BoundError(f"p_min must be >= 5, got {p_min}")
    violations = lemma2_scan(p_min, p_max)
    growth_failures = [p for p in range(max(17, p_min), p_max + 1) if not growth_check(p)]
    return {
        "p_min": p_min,
        "p_max": p_max,
        "pairs_checked": lemma2_pair_count(p_min, p_max),
        "violations": [list(v) for v in violations],
        "growth_checked": max(0, p_max - max(17, p_min) + 1),
        "growth_failures": growth_failures,
    }
