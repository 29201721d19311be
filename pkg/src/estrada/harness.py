"""Verification campaigns over exhaustive, family, and random corpora.

Exhaustive scans run on the vectorized kernel path: adjacency bitmasks go
through the batch stats kernel in chunks, bounds and radius checks are
evaluated columnwise, and only interesting rows (violations, equality
hits, or an explicit row sink) ever materialize Python objects. Family
sweeps and random campaigns use the per-graph object path. Both paths
keep a deterministic row order, so serialized reports are byte-stable.
"""

from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels, bounds, io, spectral
from .errors import CapacityError, ConvergenceError, ParameterError
from .families import bipartite_random, er_random, generate_family
from .graphs import ENUMERATION_MAX_N, Graph
from .invariants import InvariantSet, invariant_set

_CHUNK = 1 << 16

MODES = ("all", "connected", "bipartite-connected")


def resolve_jobs(jobs: Optional[int]) -> int:
    """Explicit count, else ESTRADA_JOBS, else available parallelism."""
    if jobs is not None:
        if jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {jobs}")
        return int(jobs)
    env = os.environ.get("ESTRADA_JOBS", "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ParameterError(f"ESTRADA_JOBS must be an integer, got {env!r}")
        if value < 1:
            raise ParameterError(f"ESTRADA_JOBS must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# report structure


@dataclass
class BoundSummary:
    bound_id: str
    applicable: int = 0
    violations: int = 0
    equality: int = 0
    strict: int = 0
    min_gap: Optional[float] = None
    max_gap: Optional[float] = None
    quantiles: Optional[Dict[str, float]] = None

    @property
    def held(self) -> int:
        return self.applicable - self.violations

    def _absorb_gap_extremes(self, lo: float, hi: float) -> None:
        self.min_gap = lo if self.min_gap is None else min(self.min_gap, lo)
        self.max_gap = hi if self.max_gap is None else max(self.max_gap, hi)


@dataclass
class LemmaSummary:
    lemma_id: str
    applicable: int = 0
    violations: int = 0
    equality: int = 0
    min_slack: Optional[float] = None


@dataclass(frozen=True)
class Violation:
    graph6: str
    bound_id: str
    gap: float


@dataclass(frozen=True)
class GraphRow:
    """One serialized-report row: invariants, EE, and all bound cells.

    bounds holds one (applicable, value, gap) triple per catalog entry,
    in catalog order, with None value/gap when inapplicable.
    """

    graph6: str
    n: int
    m: int
    delta_max: int
    delta_min: int
    diam: float  # math.inf when disconnected
    triangles: int
    randic: float
    randic_half: float
    ee: float
    bounds: Tuple[Tuple[bool, Optional[float], Optional[float]], ...]


@dataclass
class VerificationReport:
    corpus: Dict[str, object]
    tol: float
    row_count: int
    summaries: Dict[str, BoundSummary]
    lemma_summaries: Dict[str, LemmaSummary]
    violations: List[Violation]
    equality_cases: Dict[str, List[str]]
    lemma_equality: Dict[str, List[str]]
    structural_families: Optional[Dict[str, List[str]]] = None
    b_bounds_on_nonbipartite: Optional[Dict[str, Dict[str, object]]] = None
    rows: Optional[List[GraphRow]] = None

    @property
    def total_violations(self) -> int:
        return sum(s.violations for s in self.summaries.values())


def _new_summaries() -> Dict[str, BoundSummary]:
    return {bid: BoundSummary(bound_id=bid) for bid in bounds.BOUND_IDS}


def _new_lemma_summaries() -> Dict[str, LemmaSummary]:
    return {lid: LemmaSummary(lemma_id=lid) for lid in bounds.LEMMA_IDS}


# ---------------------------------------------------------------------------
# per-graph object path


@dataclass(frozen=True)
class GraphVerdict:
    graph6: str
    invariants: InvariantSet
    spectrum: spectral.Spectrum
    ee: float
    bounds: List[bounds.BoundResult]
    lemmas: List[bounds.LemmaResult]


def verify_graph(g: Graph, tol: float = 1e-8) -> GraphVerdict:
    """Every bound and radius check against one graph."""
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    g6 = io.write_graph6(g)
    inv = invariant_set(g)
    try:
        s = spectral.spectrum(g)
    except ConvergenceError as exc:
        raise ConvergenceError(f"eigensolver failed on {g6}: {exc}") from exc
    ee = spectral.estrada_index(s)
    return GraphVerdict(
        graph6=g6,
        invariants=inv,
        spectrum=s,
        ee=ee,
        bounds=bounds.evaluate_all_bounds(inv, ee, tol),
        lemmas=bounds.evaluate_lemmas(inv, s.values[0]),
    )


def row_from_verdict(v: GraphVerdict) -> GraphRow:
    inv = v.invariants
    cells = tuple(
        (r.applicable, r.bound_value, r.gap) for r in v.bounds
    )
    return GraphRow(
        graph6=v.graph6,
        n=inv.n,
        m=inv.m,
        delta_max=inv.delta_max,
        delta_min=inv.delta_min,
        diam=float(inv.diam),
        triangles=inv.triangles,
        randic=inv.randic,
        randic_half=inv.randic_half,
        ee=v.ee,
        bounds=cells,
    )


class _Aggregator:
    """Order-preserving tally shared by the object-path campaigns."""

    def __init__(self, tol: float, keep_rows: bool, collect_gaps: bool = False):
        self.tol = tol
        self.summaries = _new_summaries()
        self.lemma_summaries = _new_lemma_summaries()
        self.violations: List[Violation] = []
        self.equality_cases: Dict[str, List[str]] = {b: [] for b in bounds.BOUND_IDS}
        self.lemma_equality: Dict[str, List[str]] = {
            s.id: [] for s in bounds.LEMMAS if s.equality_family
        }
        self.rows: Optional[List[GraphRow]] = [] if keep_rows else None
        self.gaps: Optional[Dict[str, List[float]]] = (
            {b: [] for b in bounds.BOUND_IDS} if collect_gaps else None
        )
        self.row_count = 0

    def add(self, verdict: GraphVerdict) -> None:
        self.row_count += 1
        tol = self.tol
        for res in verdict.bounds:
            summary = self.summaries[res.id]
            if not res.applicable:
                continue
            summary.applicable += 1
            gap = res.gap
            summary._absorb_gap_extremes(gap, gap)
            if self.gaps is not None:
                self.gaps[res.id].append(gap)
            if gap < -tol:
                summary.violations += 1
                self.violations.append(Violation(verdict.graph6, res.id, gap))
            elif gap > tol:
                summary.strict += 1
            else:
                summary.equality += 1
                self.equality_cases[res.id].append(verdict.graph6)
        for lres in verdict.lemmas:
            ls = self.lemma_summaries[lres.id]
            if not lres.applicable:
                continue
            ls.applicable += 1
            slack = lres.slack
            ls.min_slack = slack if ls.min_slack is None else min(ls.min_slack, slack)
            if slack < -tol:
                ls.violations += 1
            elif abs(slack) <= tol:
                ls.equality += 1
                if lres.id in self.lemma_equality:
                    self.lemma_equality[lres.id].append(verdict.graph6)
        if self.rows is not None:
            self.rows.append(row_from_verdict(verdict))

    def finish_quantiles(self) -> None:
        if self.gaps is None:
            return
        for bid, values in self.gaps.items():
            if not values:
                continue
            arr = np.asarray(values)
            q = np.quantile(arr, [0.0, 0.01, 0.5, 0.99, 1.0])
            self.summaries[bid].quantiles = {
                "min": float(q[0]),
                "p01": float(q[1]),
                "p50": float(q[2]),
                "p99": float(q[3]),
                "max": float(q[4]),
            }

    def report(self, corpus: Dict[str, object]) -> VerificationReport:
        return VerificationReport(
            corpus=corpus,
            tol=self.tol,
            row_count=self.row_count,
            summaries=self.summaries,
            lemma_summaries=self.lemma_summaries,
            violations=self.violations,
            equality_cases=self.equality_cases,
            lemma_equality=self.lemma_equality,
            rows=self.rows,
        )


# ---------------------------------------------------------------------------
# exhaustive kernel path


def _scan_chunk(n: int, start: int, stop: int):
    masks = np.arange(start, stop, dtype=np.int64)
    return masks, _kernels.batch_graph_stats(n, masks)


def _iter_stat_chunks(n: int, jobs: int):
    """Yield (masks, stats) chunks in deterministic mask order.

    Chunks are computed by a bounded pool of workers but consumed in
    submission order, so aggregation order never depends on scheduling.
    """
    total = 1 << (n * (n - 1) // 2)
    spans = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if jobs <= 1 or len(spans) == 1:
        for s, e in spans:
            yield _scan_chunk(n, s, e)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        pending = deque()
        spans_iter = iter(spans)
        for _ in range(min(len(spans), jobs + 2)):
            s, e = next(spans_iter)
            pending.append(pool.submit(_scan_chunk, n, s, e))
        while pending:
            yield pending.popleft().result()
            nxt = next(spans_iter, None)
            if nxt is not None:
                pending.append(pool.submit(_scan_chunk, n, *nxt))


def _mode_mask(mode: str, n: int, cols: np.ndarray) -> np.ndarray:
    conn = cols[:, _kernels.COL_CONNECTED] > 0.5
    if mode == "connected":
        return conn
    if mode == "bipartite-connected":
        return conn & (cols[:, _kernels.COL_BIPARTITE] > 0.5)
    return np.ones(cols.shape[0], dtype=bool)


def _structural_masks(n: int, cols: np.ndarray):
    """Cycle and path membership straight from degree statistics."""
    conn = cols[:, _kernels.COL_CONNECTED] > 0.5
    dmax = cols[:, _kernels.COL_DMAX]
    dmin = cols[:, _kernels.COL_DMIN]
    deg1 = cols[:, _kernels.COL_DEG1]
    cycle = conn & (dmax == 2.0) & (dmin == 2.0) if n >= 3 else np.zeros(
        cols.shape[0], dtype=bool
    )
    if n <= 2:
        path = conn
    else:
        path = conn & (deg1 == 2.0) & (dmax == 2.0)
    return cycle, path


def _batch_rows(
    n: int,
    masks: np.ndarray,
    cols: np.ndarray,
    bound_eval: Dict[str, tuple],
) -> List[GraphRow]:
    rows = []
    per_bound = [bound_eval[bid] for bid in bounds.BOUND_IDS]
    for idx in range(masks.shape[0]):
        cells = []
        for app, values, gaps in per_bound:
            if app[idx]:
                cells.append((True, float(values[idx]), float(gaps[idx])))
            else:
                cells.append((False, None, None))
        rows.append(
            GraphRow(
                graph6=io.encode_graph6_mask(n, int(masks[idx])),
                n=n,
                m=int(cols[idx, _kernels.COL_M]),
                delta_max=int(cols[idx, _kernels.COL_DMAX]),
                delta_min=int(cols[idx, _kernels.COL_DMIN]),
                diam=float(cols[idx, _kernels.COL_DIAM]),
                triangles=int(cols[idx, _kernels.COL_TRI]),
                randic=float(cols[idx, _kernels.COL_RANDIC]),
                randic_half=float(cols[idx, _kernels.COL_RHALF]),
                ee=float(cols[idx, _kernels.COL_EE]),
                bounds=tuple(cells),
            )
        )
    return rows


def exhaustive_verify(
    n_max: int,
    mode: str = "all",
    tol: float = 1e-8,
    jobs: Optional[int] = None,
    keep_rows: bool = False,
    row_sink: Optional[Callable[[List[GraphRow]], None]] = None,
) -> VerificationReport:
    """Verify every labeled graph with 1..n_max vertices in the mode's class.

    Rows stream through row_sink (when given) in (n, bitmask) order; the
    returned report carries summaries, violations, equality hits, radius
    check tallies, and the cycle/path membership lists the equality tests
    compare against.
    """
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    if n_max > ENUMERATION_MAX_N:
        raise CapacityError(
            f"exhaustive verification capped at n={ENUMERATION_MAX_N}, got {n_max}"
        )
    if mode not in MODES:
        raise ParameterError(f"mode must be one of {MODES}, got {mode!r}")
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    workers = resolve_jobs(jobs)

    summaries = _new_summaries()
    lemma_summaries = _new_lemma_summaries()
    violations: List[Violation] = []
    equality_cases: Dict[str, List[str]] = {b: [] for b in bounds.BOUND_IDS}
    lemma_equality: Dict[str, List[str]] = {
        s.id: [] for s in bounds.LEMMAS if s.equality_family
    }
    structural: Dict[str, List[str]] = {"cycle": [], "path": []}
    explore: Optional[Dict[str, Dict[str, object]]] = None
    if mode != "bipartite-connected":
        explore = {
            bid: {"checked": 0, "held": 0, "violated": 0, "min_gap": None}
            for bid in bounds.BOUND_IDS
            if bid.startswith("B")
        }
    rows: Optional[List[GraphRow]] = [] if keep_rows else None
    row_count = 0

    for n in range(1, n_max + 1):
        for masks, cols in _iter_stat_chunks(n, workers):
            keep = _mode_mask(mode, n, cols)
            if not keep.all():
                masks = masks[keep]
                cols = cols[keep]
            if masks.size == 0:
                continue
            row_count += int(masks.size)
            bound_eval = bounds.evaluate_bounds_batch(n, cols)

            for bid in bounds.BOUND_IDS:
                app, values, gaps = bound_eval[bid]
                count = int(app.sum())
                if count == 0:
                    continue
                summary = summaries[bid]
                summary.applicable += count
                agaps = gaps[app]
                summary._absorb_gap_extremes(float(agaps.min()), float(agaps.max()))
                viol = app & (gaps < -tol)
                eq = app & (np.abs(gaps) <= tol)
                summary.violations += int(viol.sum())
                summary.equality += int(eq.sum())
                summary.strict += int((app & (gaps > tol)).sum())
                for idx in np.flatnonzero(viol):
                    violations.append(
                        Violation(
                            io.encode_graph6_mask(n, int(masks[idx])),
                            bid,
                            float(gaps[idx]),
                        )
                    )
                for idx in np.flatnonzero(eq):
                    equality_cases[bid].append(
                        io.encode_graph6_mask(n, int(masks[idx]))
                    )

            lemma_eval = bounds.evaluate_lemmas_batch(n, cols)
            for spec in bounds.LEMMAS:
                app, slack = lemma_eval[spec.id]
                count = int(app.sum())
                if count == 0:
                    continue
                ls = lemma_summaries[spec.id]
                ls.applicable += count
                aslack = slack[app]
                low = float(aslack.min())
                ls.min_slack = low if ls.min_slack is None else min(ls.min_slack, low)
                ls.violations += int((app & (slack < -tol)).sum())
                eq = app & (np.abs(slack) <= tol)
                ls.equality += int(eq.sum())
                if spec.equality_family:
                    for idx in np.flatnonzero(eq):
                        lemma_equality[spec.id].append(
                            io.encode_graph6_mask(n, int(masks[idx]))
                        )

            cycle_mask, path_mask = _structural_masks(n, cols)
            for idx in np.flatnonzero(cycle_mask):
                structural["cycle"].append(io.encode_graph6_mask(n, int(masks[idx])))
            for idx in np.flatnonzero(path_mask):
                structural["path"].append(io.encode_graph6_mask(n, int(masks[idx])))

            if explore is not None:
                nonbip = ~(cols[:, _kernels.COL_BIPARTITE] > 0.5)
                view = bounds.view_from_columns(n, cols)
                forced = replace(view, bipartite=True)
                for bid in explore:
                    spec = bounds.CATALOG_BY_ID[bid]
                    shadow = np.broadcast_to(
                        np.asarray(spec.applicable(forced), bool), (cols.shape[0],)
                    )
                    probe = shadow & nonbip
                    hits = int(probe.sum())
                    if hits == 0:
                        continue
                    _, _, gaps = bound_eval[bid]
                    cell = explore[bid]
                    cell["checked"] = int(cell["checked"]) + hits
                    pgaps = gaps[probe]
                    cell["held"] = int(cell["held"]) + int((pgaps >= -tol).sum())
                    cell["violated"] = int(cell["violated"]) + int(
                        (pgaps < -tol).sum()
                    )
                    low = float(pgaps.min())
                    cell["min_gap"] = (
                        low
                        if cell["min_gap"] is None
                        else min(float(cell["min_gap"]), low)
                    )

            if keep_rows or row_sink is not None:
                chunk_rows = _batch_rows(n, masks, cols, bound_eval)
                if row_sink is not None:
                    row_sink(chunk_rows)
                if rows is not None:
                    rows.extend(chunk_rows)

    corpus = {"kind": "exhaustive", "max_n": n_max, "mode": mode}
    return VerificationReport(
        corpus=corpus,
        tol=tol,
        row_count=row_count,
        summaries=summaries,
        lemma_summaries=lemma_summaries,
        violations=violations,
        equality_cases=equality_cases,
        lemma_equality=lemma_equality,
        structural_families=structural,
        b_bounds_on_nonbipartite=explore,
        rows=rows,
    )


def find_equality_cases(
    bound_id: str, n_max: int, tol: float = 1e-8, jobs: Optional[int] = None
) -> List[str]:
    """graph6 strings of every labeled graph (n <= n_max) attaining the bound."""
    if bound_id not in bounds.CATALOG_BY_ID:
        raise ParameterError(
            f"unknown bound id {bound_id!r}; known: {', '.join(bounds.BOUND_IDS)}"
        )
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    if n_max > ENUMERATION_MAX_N:
        raise CapacityError(
            f"equality search capped at n={ENUMERATION_MAX_N}, got {n_max}"
        )
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    workers = resolve_jobs(jobs)
    spec = bounds.CATALOG_BY_ID[bound_id]
    found: List[str] = []
    for n in range(1, n_max + 1):
        for masks, cols in _iter_stat_chunks(n, workers):
            view = bounds.view_from_columns(n, cols)
            ee = cols[:, _kernels.COL_EE]
            with np.errstate(all="ignore"):
                app = np.broadcast_to(
                    np.asarray(spec.applicable(view), bool), (cols.shape[0],)
                )
                x = np.broadcast_to(
                    np.asarray(spec.argument(view), np.float64), (cols.shape[0],)
                )
                if spec.framework == "phi":
                    values = np.exp(x) + (n - 1) - x
                else:
                    values = 2.0 * np.cosh(x) + (n - 2)
                eq = app & (np.abs(ee - values) <= tol)
            for idx in np.flatnonzero(eq):
                found.append(io.encode_graph6_mask(n, int(masks[idx])))
    return list(dict.fromkeys(found))


# ---------------------------------------------------------------------------
# family sweeps and random campaigns


def verify_collection(
    graphs: Iterable[Graph],
    tol: float = 1e-8,
    keep_rows: bool = True,
    corpus: Optional[Dict[str, object]] = None,
) -> VerificationReport:
    """Object-path verification of an explicit graph sequence, in order."""
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    agg = _Aggregator(tol, keep_rows=keep_rows)
    for g in graphs:
        agg.add(verify_graph(g, tol))
    return agg.report(corpus or {"kind": "collection"})


def family_sweep(
    family: str,
    param_ranges: Dict[str, Sequence[int]],
    tol: float = 1e-8,
    keep_rows: bool = True,
) -> VerificationReport:
    """One verification row per point of the family's parameter grid."""
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    if not param_ranges:
        raise ParameterError("family sweep needs at least one parameter range")
    names = sorted(param_ranges)
    grids = [list(param_ranges[k]) for k in names]
    agg = _Aggregator(tol, keep_rows=keep_rows)
    points = []

    def _walk(prefix):
        if len(prefix) == len(names):
            points.append(dict(zip(names, prefix)))
            return
        for value in grids[len(prefix)]:
            _walk(prefix + (value,))

    _walk(())
    for point in points:
        g = generate_family(family, **point)
        agg.add(verify_graph(g, tol))
    agg.finish_quantiles()
    corpus = {
        "kind": "family-sweep",
        "family": family,
        "params": {k: list(v) for k, v in sorted(param_ranges.items())},
    }
    return agg.report(corpus)


def random_campaign(
    model: str = "er",
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-8,
    n: int = 20,
    p: float = 0.3,
    parts: Tuple[int, int] = (8, 8),
    keep_rows: bool = False,
) -> VerificationReport:
    """Seeded random-graph campaign; same seed means the same report."""
    if model not in ("er", "bipartite"):
        raise ParameterError(f"model must be 'er' or 'bipartite', got {model!r}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    agg = _Aggregator(tol, keep_rows=keep_rows, collect_gaps=True)
    children = np.random.SeedSequence(seed).spawn(trials)
    for child in children:
        if model == "er":
            g = er_random(n, p, child)
        else:
            g = bipartite_random(parts[0], parts[1], p, child)
        agg.add(verify_graph(g, tol))
    agg.finish_quantiles()
    corpus: Dict[str, object] = {
        "kind": "random",
        "model": model,
        "trials": trials,
        "seed": seed,
        "p": p,
    }
    if model == "er":
        corpus["n"] = n
    else:
        corpus["parts"] = list(parts)
    return agg.report(corpus)
