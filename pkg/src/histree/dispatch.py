"""Automatic method selection and the benchmark runner."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from . import cvd, modular, poly
from .classes import is_block_split, is_chordal, split_partition
from .errors import BudgetExceeded, HistError, KernelUndecided, TooLarge
from .exact import decide_exact
from .graph import Graph, diameter, parse_edge_list
from .oracle import oracle_hist
from .verdict import Verdict

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    exact_max_n: int = 14  # auto fallback: about 15 s, every extra vertex costs ~5x
    exact_method_max_n: int = 16  # explicit --method exact: 512 MiB table
    quotient_max: int = 14
    cvd_budget: int = 6
    use_cvd: bool = True
    seed: int = 0


DEFAULT_LIMITS = Limits()


def dispatch_auto(g: Graph, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Try the deciders from cheapest to most expensive.

    An UNDECIDED answer from one stage passes control to the next; the
    first undecided reason is kept if nothing settles the instance.
    """
    early = poly.trivial_verdict(g)
    if early is not None:
        return early
    pending: Verdict | None = None

    def keep(v: Verdict) -> Verdict | None:
        nonlocal pending
        if v.answer.value != "UNDECIDED":
            return v
        pending = pending or v
        return None

    d = diameter(g)
    if d <= 2:
        v = keep(poly.decide_diameter2(g, seed=limits.seed))
        if v:
            return v
    p = split_partition(g)
    if p is not None:
        v = keep(poly.decide_block_split(g, p) if is_block_split(g, p) else poly.decide_split(g, p))
        if v:
            return v
    elif d == 3 and is_chordal(g):
        v = keep(poly.decide_chordal_d3(g))
        if v:
            return v
    if modular.has_nontrivial_module(g):
        try:
            v = keep(modular.decide_modular(g, max_k=limits.quotient_max))
            if v:
                return v
        except TooLarge:
            log.debug("quotient too large for the modular decider")
    if limits.use_cvd:
        v = _try_kernel(g, limits)
        if v:
            return v
    if g.n <= limits.exact_max_n:
        return decide_exact(g, max_n=limits.exact_max_n)
    if pending is not None:
        return pending
    return Verdict.undecided("auto", "open class: diameter-3 general / size too large")


def _try_kernel(g: Graph, limits: Limits) -> Verdict | None:
    s = cvd.minimum_cvd(g, limits.cvd_budget)
    if s is None:
        return None
    kernel = cvd.kernelize(g, cvd.decompose(g, s))
    if not kernel.shrunk:
        return None
    inner = replace(limits, use_cvd=False)
    try:
        return cvd.decide_via_kernel(g, decide=lambda h: dispatch_auto(h, inner), s=s)
    except (KernelUndecided, BudgetExceeded):
        return None


def _progress(fraction: float) -> None:
    log.info("exact: %.0f%% of states filled", 100 * fraction)


METHODS = {
    "auto": lambda g, lim: dispatch_auto(g, lim),
    "diam2": lambda g, lim: poly.decide_diameter2(g, seed=lim.seed),
    "blocksplit": lambda g, lim: poly.decide_block_split(g),
    "split": lambda g, lim: poly.decide_split(g),
    "chordal3": lambda g, lim: poly.decide_chordal_d3(g),
    "moddp": lambda g, lim: modular.decide_modular(g, max_k=lim.quotient_max),
    "exact": lambda g, lim: decide_exact(g, max_n=lim.exact_method_max_n, progress=_progress),
    "oracle": lambda g, lim: oracle_hist(g, max_n=max(10, lim.exact_max_n)),
    "cvd": lambda g, lim: cvd.decide_via_kernel(g, budget=lim.cvd_budget),
}


def run_method(g: Graph, method: str, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(g, limits)


# ---------------------------------------------------------------------------
# bench


def _bench_one(args) -> list[dict]:
    path, methods, limits = args
    rows = []
    try:
        g = parse_edge_list(Path(path).read_bytes())
    except (HistError, OSError) as exc:
        return [{"file": str(path), "n": None, "m": None, "method": None, "answer": "ERROR", "seconds": 0.0, "error": str(exc)}]
    for method in methods:
        start = time.perf_counter()
        try:
            answer = run_method(g, method, limits).answer.value
            error = None
        except HistError as exc:
            answer, error = "ERROR", f"{type(exc).__name__}: {exc}"
        rows.append(
            {
                "file": str(path),
                "n": g.n,
                "m": g.m,
                "method": method,
                "answer": answer,
                "seconds": round(time.perf_counter() - start, 6),
                "error": error,
            }
        )
    return rows


def bench(corpus: str | Path, methods=("auto",), limits: Limits = DEFAULT_LIMITS, jobs: int = 1) -> list[dict]:
    """One row per (file, method); parse errors become rows, the run continues."""
    files = sorted(p for p in Path(corpus).iterdir() if p.is_file())
    tasks = [(p, tuple(methods), limits) for p in files]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_bench_one, tasks))
    else:
        chunks = [_bench_one(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]
