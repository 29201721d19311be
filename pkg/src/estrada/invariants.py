"""Degree-based indices and the consolidated per-graph invariant bundle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateGraphError
from .graphs import Classification, Graph


def general_randic(g: Graph, alpha: float) -> float:
    """Sum over edges of (d(i) d(j))^alpha; 0 for an edgeless graph.

    Endpoints of an edge always have degree >= 1, so negative alpha is
    safe whenever there is anything to sum.
    """
    degs = g.degrees()
    total = 0.0
    for i, j in g.edges():
        total += float(degs[i] * degs[j]) ** alpha
    return total


def randic_index(g: Graph) -> float:
    return general_randic(g, -0.5)


@dataclass(frozen=True)
class InvariantSet:
    """Everything the bound catalog needs about one graph, computed once."""

    n: int
    m: int
    delta_max: int
    delta_min: int
    diam: Union[int, float]  # math.inf when disconnected
    triangles: int
    randic: float
    randic_half: float
    classification: Classification


def invariant_set(g: Graph) -> InvariantSet:
    if g.n < 1:
        raise DegenerateGraphError("invariants undefined on zero vertices")
    degs = g.degrees()
    return InvariantSet(
        n=g.n,
        m=g.m,
        delta_max=max(degs),
        delta_min=min(degs),
        diam=g.diameter(),
        triangles=g.triangle_count(),
        randic=general_randic(g, -0.5),
        randic_half=general_randic(g, 0.5),
        classification=g.classify(),
    )
