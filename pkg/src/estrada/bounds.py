"""Lower bounds for the Estrada index and their equality classes.

Fourteen bounds share two scaffolds. The general scaffold phi(x, n) =
e^x + (n-1) - x feeds on any lower bound x for the spectral radius; the
bipartite scaffold phi_bipartite(x, n) = 2cosh(x) + (n-2) additionally
exploits the plus/minus symmetry of bipartite spectra. Each catalog entry
pins the argument, the applicability predicate, whether the inequality is
strict, and (for the non-strict ones) the structural family attaining
equality.

Predicates and arguments are written once against a QuantityView, which
holds either scalars (one graph) or numpy columns (a whole enumeration
batch), so the scalar and vectorized evaluators cannot drift apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

from . import _kernels
from .errors import DomainError, ParameterError
from .families import disjoint_union, empty_graph, regular_circulant
from .graphs import Classification, Graph
from .invariants import InvariantSet
from .spectral import spectrum

Scalar = Union[int, float, bool]
Column = Union[Scalar, np.ndarray]


def phi(x: float, n: int) -> float:
    """General scaffold e^x + (n-1) - x, increasing on x >= 0."""
    if x < 0:
        raise DomainError(f"scaffold argument must be >= 0, got {x}")
    if n < 1:
        raise DomainError(f"scaffold needs n >= 1, got {n}")
    return float(np.exp(x) + (n - 1) - x)


def phi_bipartite(x: float, n: int) -> float:
    """Bipartite scaffold 2cosh(x) + (n-2), increasing on x >= 0."""
    if x < 0:
        raise DomainError(f"scaffold argument must be >= 0, got {x}")
    if n < 2:
        raise DomainError(f"bipartite scaffold needs n >= 2, got {n}")
    return float(2.0 * np.cosh(x) + (n - 2))


@dataclass(frozen=True)
class QuantityView:
    """Scalar-or-column bundle of the graph quantities bounds consume."""

    n: int
    m: Column
    dmax: Column
    dmin: Column
    diam: Column
    randic: Column
    rhalf: Column
    connected: Column
    bipartite: Column


def view_from_invariants(inv: InvariantSet) -> QuantityView:
    c = inv.classification
    return QuantityView(
        n=inv.n,
        m=inv.m,
        dmax=inv.delta_max,
        dmin=inv.delta_min,
        diam=float(inv.diam),
        randic=inv.randic,
        rhalf=inv.randic_half,
        connected=c.connected,
        bipartite=c.bipartite,
    )


def view_from_columns(n: int, cols: np.ndarray) -> QuantityView:
    return QuantityView(
        n=n,
        m=cols[:, _kernels.COL_M],
        dmax=cols[:, _kernels.COL_DMAX],
        dmin=cols[:, _kernels.COL_DMIN],
        diam=cols[:, _kernels.COL_DIAM],
        randic=cols[:, _kernels.COL_RANDIC],
        rhalf=cols[:, _kernels.COL_RHALF],
        connected=cols[:, _kernels.COL_CONNECTED] > 0.5,
        bipartite=cols[:, _kernels.COL_BIPARTITE] > 0.5,
    )


EqualityPredicate = Callable[[Classification, int], bool]


@dataclass(frozen=True)
class BoundSpec:
    id: str
    name: str
    framework: str  # "phi" | "phi_bipartite"
    strict: bool
    applicable: Callable[[QuantityView], Column]
    argument: Callable[[QuantityView], Column]
    equality: Optional[EqualityPredicate]


@dataclass(frozen=True)
class BoundResult:
    id: str
    applicable: bool
    bound_value: Optional[float]
    ee_value: float
    gap: Optional[float]
    equality_detected: bool
    equality_class_match: bool


# equality families, decided structurally


def _eq_empty(c: Classification, n: int) -> bool:
    return c.empty


def _eq_complete_bipartite(c: Classification, n: int) -> bool:
    return c.complete_bipartite is not None


def _eq_star_plus_isolated(c: Classification, n: int) -> bool:
    core = c.core_complete_bipartite
    return core is not None and core[0] == 1


def _eq_complete_bipartite_plus_isolated(c: Classification, n: int) -> bool:
    return c.core_complete_bipartite is not None


def _eq_star(c: Classification, n: int) -> bool:
    return c.star


def _eq_balanced_plus_one_or_empty(c: Classification, n: int) -> bool:
    # numerically confirmed: besides the balanced complete bipartite graph
    # with one extra isolated vertex, every edgeless graph attains this
    # bound exactly (argument 0, and the scaffold at 0 equals n)
    if c.empty:
        return True
    core = c.core_complete_bipartite
    return (
        core is not None
        and core[0] == core[1]
        and c.isolated_count == 1
        and n == 2 * core[0] + 1
    )


def _eq_four_cycle(c: Classification, n: int) -> bool:
    return c.cycle and n == 4


def _eq_short_path(c: Classification, n: int) -> bool:
    # numerically confirmed: equality holds for the 2- and 3-vertex paths
    # and for no longer path (the 4-vertex gap is about 0.394)
    return c.path and n in (2, 3)


CATALOG: Tuple[BoundSpec, ...] = (
    BoundSpec(
        id="G1",
        name="general scaffold at m/R",
        framework="phi",
        strict=True,
        applicable=lambda v: v.connected & (v.m >= 1),
        argument=lambda v: v.m / v.randic,
        equality=None,
    ),
    BoundSpec(
        id="G2",
        name="general scaffold at sqrt(max degree)",
        framework="phi",
        strict=True,
        applicable=lambda v: v.m >= 1,
        argument=lambda v: np.sqrt(v.dmax),
        equality=None,
    ),
    BoundSpec(
        id="G3",
        name="general scaffold at R_half/m",
        framework="phi",
        strict=True,
        applicable=lambda v: v.m >= 1,
        argument=lambda v: v.rhalf / v.m,
        equality=None,
    ),
    BoundSpec(
        id="G4",
        name="general scaffold at (n-1)^(1/diameter)",
        framework="phi",
        strict=True,
        applicable=lambda v: v.connected & (v.n >= 2),
        argument=lambda v: (v.n - 1.0) ** (1.0 / v.diam),
        equality=None,
    ),
    BoundSpec(
        id="G5",
        name="general scaffold at 2(m - min degree)/(n-1)",
        framework="phi",
        strict=False,
        applicable=lambda v: v.n >= 2,
        argument=lambda v: 2.0 * (v.m - v.dmin) / (v.n - 1.0),
        equality=_eq_empty,
    ),
    BoundSpec(
        id="G6",
        name="general scaffold at 2 (unicyclic)",
        framework="phi",
        strict=True,
        applicable=lambda v: v.connected & (v.m == v.n),
        argument=lambda v: 2.0,
        equality=None,
    ),
    BoundSpec(
        id="G7",
        name="general scaffold at 2cos(pi/(n+1))",
        framework="phi",
        strict=True,
        applicable=lambda v: v.connected,
        argument=lambda v: 2.0 * math.cos(math.pi / (v.n + 1)),
        equality=None,
    ),
    BoundSpec(
        id="B1",
        name="bipartite scaffold at m/R",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & v.connected & (v.m >= 1),
        argument=lambda v: v.m / v.randic,
        equality=_eq_complete_bipartite,
    ),
    BoundSpec(
        id="B2",
        name="bipartite scaffold at sqrt(max degree)",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & (v.m >= 1),
        argument=lambda v: np.sqrt(v.dmax),
        equality=_eq_star_plus_isolated,
    ),
    BoundSpec(
        id="B3",
        name="bipartite scaffold at R_half/m",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & (v.m >= 1),
        argument=lambda v: v.rhalf / v.m,
        equality=_eq_complete_bipartite_plus_isolated,
    ),
    BoundSpec(
        id="B4",
        name="bipartite scaffold at (n-1)^(1/diameter)",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & v.connected & (v.n >= 2),
        argument=lambda v: (v.n - 1.0) ** (1.0 / v.diam),
        equality=_eq_star,
    ),
    BoundSpec(
        id="B5",
        name="bipartite scaffold at 2(m - min degree)/(n-1)",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & (v.n >= 2),
        argument=lambda v: 2.0 * (v.m - v.dmin) / (v.n - 1.0),
        equality=_eq_balanced_plus_one_or_empty,
    ),
    BoundSpec(
        id="B6",
        name="bipartite scaffold at 2 (unicyclic)",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & v.connected & (v.m == v.n),
        argument=lambda v: 2.0,
        equality=_eq_four_cycle,
    ),
    BoundSpec(
        id="B7",
        name="bipartite scaffold at 2cos(pi/(n+1))",
        framework="phi_bipartite",
        strict=False,
        applicable=lambda v: v.bipartite & v.connected & (v.n >= 2),
        argument=lambda v: 2.0 * math.cos(math.pi / (v.n + 1)),
        equality=_eq_short_path,
    ),
)

CATALOG_BY_ID = {spec.id: spec for spec in CATALOG}
BOUND_IDS: Tuple[str, ...] = tuple(spec.id for spec in CATALOG)
EQUALITY_BOUND_IDS: Tuple[str, ...] = tuple(
    spec.id for spec in CATALOG if spec.equality is not None
)


def _get_spec(bound_id: str) -> BoundSpec:
    try:
        return CATALOG_BY_ID[bound_id]
    except KeyError:
        raise ParameterError(
            f"unknown bound id {bound_id!r}; known: {', '.join(BOUND_IDS)}"
        )


def evaluate_bound(
    bound_id: str, inv: InvariantSet, ee: float, tol: float = 1e-8
) -> BoundResult:
    """One bound against one graph; counterexamples are data, not errors."""
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    spec = _get_spec(bound_id)
    view = view_from_invariants(inv)
    if not bool(spec.applicable(view)):
        return BoundResult(
            id=spec.id,
            applicable=False,
            bound_value=None,
            ee_value=ee,
            gap=None,
            equality_detected=False,
            equality_class_match=False,
        )
    x = float(spec.argument(view))
    value = phi(x, inv.n) if spec.framework == "phi" else phi_bipartite(x, inv.n)
    gap = ee - value
    matches = (
        spec.equality(inv.classification, inv.n) if spec.equality is not None else False
    )
    return BoundResult(
        id=spec.id,
        applicable=True,
        bound_value=value,
        ee_value=ee,
        gap=gap,
        equality_detected=abs(gap) <= tol,
        equality_class_match=matches,
    )


def evaluate_all_bounds(inv: InvariantSet, ee: float, tol: float = 1e-8):
    return [evaluate_bound(spec.id, inv, ee, tol) for spec in CATALOG]


def equality_class_check(bound_id: str, g: Graph) -> bool:
    """Structural membership in the bound's equality family (never spectral)."""
    spec = _get_spec(bound_id)
    if spec.equality is None:
        return False
    return spec.equality(g.classify(), g.n)


def evaluate_bounds_batch(n: int, cols: np.ndarray):
    """Vectorized pass over a kernel stats matrix.

    Returns {bound id: (applicable mask, bound values, gaps)}; values and
    gaps are meaningful only where the mask is set (masked-out slots may
    hold inf/nan from guarded divisions).
    """
    view = view_from_columns(n, cols)
    ee = cols[:, _kernels.COL_EE]
    rows = cols.shape[0]
    out = {}
    with np.errstate(all="ignore"):
        for spec in CATALOG:
            app = np.broadcast_to(np.asarray(spec.applicable(view), bool), (rows,))
            x = np.broadcast_to(
                np.asarray(spec.argument(view), np.float64), (rows,)
            )
            if spec.framework == "phi":
                values = np.exp(x) + (n - 1) - x
            else:
                values = 2.0 * np.cosh(x) + (n - 2)
            out[spec.id] = (app, values, ee - values)
    return out


# spectral-radius lower bounds used as numeric cross-checks


@dataclass(frozen=True)
class LemmaSpec:
    id: str
    name: str
    applicable: Callable[[QuantityView], Column]
    bound: Callable[[QuantityView], Column]
    equality_family: Optional[str]  # "cycle" | "path" when characterized


LEMMAS: Tuple[LemmaSpec, ...] = (
    LemmaSpec(
        id="L1",
        name="radius >= 2m/n",
        applicable=lambda v: v.connected,
        bound=lambda v: 2.0 * v.m / v.n,
        equality_family=None,
    ),
    LemmaSpec(
        id="L3",
        name="radius >= m/R",
        applicable=lambda v: v.connected & (v.m >= 1),
        bound=lambda v: v.m / v.randic,
        equality_family=None,
    ),
    LemmaSpec(
        id="L4",
        name="radius >= sqrt(max degree)",
        applicable=lambda v: v.connected,
        bound=lambda v: np.sqrt(v.dmax),
        equality_family=None,
    ),
    LemmaSpec(
        id="L5",
        name="radius >= R_half/m",
        applicable=lambda v: v.connected & (v.m >= 1),
        bound=lambda v: v.rhalf / v.m,
        equality_family=None,
    ),
    LemmaSpec(
        id="L7",
        name="radius >= (n-1)^(1/diameter)",
        applicable=lambda v: v.connected & (v.n >= 2),
        bound=lambda v: (v.n - 1.0) ** (1.0 / v.diam),
        equality_family=None,
    ),
    LemmaSpec(
        id="L8",
        name="radius >= 2(m - min degree)/(n-1)",
        applicable=lambda v: v.connected & (v.n >= 2),
        bound=lambda v: 2.0 * (v.m - v.dmin) / (v.n - 1.0),
        equality_family=None,
    ),
    LemmaSpec(
        id="L9",
        name="unicyclic radius >= 2, equality on cycles",
        applicable=lambda v: v.connected & (v.m == v.n),
        bound=lambda v: 2.0,
        equality_family="cycle",
    ),
    LemmaSpec(
        id="L10",
        name="radius >= 2cos(pi/(n+1)), equality on paths",
        applicable=lambda v: v.connected,
        bound=lambda v: 2.0 * math.cos(math.pi / (v.n + 1)),
        equality_family="path",
    ),
)

LEMMA_IDS: Tuple[str, ...] = tuple(spec.id for spec in LEMMAS)


@dataclass(frozen=True)
class LemmaResult:
    id: str
    applicable: bool
    bound_value: Optional[float]
    slack: Optional[float]  # lambda_1 - bound


def evaluate_lemmas(inv: InvariantSet, lam1: float):
    """Scalar lemma chain for one graph; slack < 0 breaks the lemma."""
    view = view_from_invariants(inv)
    out = []
    for spec in LEMMAS:
        if not bool(spec.applicable(view)):
            out.append(LemmaResult(spec.id, False, None, None))
            continue
        value = float(spec.bound(view))
        out.append(LemmaResult(spec.id, True, value, lam1 - value))
    return out


def evaluate_lemmas_batch(n: int, cols: np.ndarray):
    """{lemma id: (applicable mask, slack array)} over a stats matrix."""
    view = view_from_columns(n, cols)
    lam1 = cols[:, _kernels.COL_LAM1]
    rows = cols.shape[0]
    out = {}
    with np.errstate(all="ignore"):
        for spec in LEMMAS:
            app = np.broadcast_to(np.asarray(spec.applicable(view), bool), (rows,))
            bound = np.broadcast_to(
                np.asarray(spec.bound(view), np.float64), (rows,)
            )
            out[spec.id] = (app, lam1 - bound)
    return out


@dataclass(frozen=True)
class RemarkVerdict:
    """Spectral radius of an r-regular graph plus one isolated vertex."""

    r: int
    n: int
    lam1: float
    expected: float
    ok: bool


def remark_family_check(r: int, n: int, tol: float = 1e-8) -> RemarkVerdict:
    """Check lambda_1(G + K_1) = r = 2(m - 0)/((n+1) - 1) for circulant G.

    Adding the isolated vertex makes the minimum degree 0 while keeping
    the spectral radius at r, so the degree-surplus radius bound is tight
    on this family.
    """
    if tol <= 0:
        raise ParameterError(f"tolerance must be > 0, got {tol}")
    g = disjoint_union(regular_circulant(n, r), empty_graph(1))
    lam1 = spectrum(g).values[0]
    m = n * r // 2
    expected = 2.0 * m / ((n + 1) - 1)
    return RemarkVerdict(
        r=r, n=n, lam1=lam1, expected=expected, ok=abs(lam1 - expected) <= tol
    )
