"""Named graph families and seeded random models.

Every generator returns a plain Graph. Random generators are functions of
their seed alone: the same seed always yields the same edge set.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import ParameterError
from .graphs import Graph


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"empty graph needs n >= 0, got {n}")
    return Graph(n)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"complete graph needs n >= 0, got {n}")
    return Graph(n, [(i, j) for j in range(1, n) for i in range(j)])


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: parts 0..p-1 and p..p+q-1, all cross edges."""
    if p < 1 or q < 1:
        raise ParameterError(f"complete bipartite needs p, q >= 1, got ({p}, {q})")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(n: int) -> Graph:
    """S_n = K_{1,n-1}; the single vertex for n=1."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1, got {n}")
    if n == 1:
        return Graph(1)
    return complete_bipartite(1, n - 1)


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel the inputs onto consecutive blocks and take their union."""
    n = sum(g.n for g in graphs)
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges())
        offset += g.n
    return Graph(n, edges)


def regular_circulant(n: int, r: int) -> Graph:
    """r-regular circulant on n vertices: offsets 1..r//2, plus the
    antipodal offset n/2 when r is odd (which forces n even)."""
    if n < 1:
        raise ParameterError(f"circulant needs n >= 1, got {n}")
    if r < 0 or r >= n:
        raise ParameterError(f"degree r must satisfy 0 <= r < n, got r={r}, n={n}")
    if (n * r) % 2:
        raise ParameterError(f"no {r}-regular graph on {n} vertices (odd degree sum)")
    edges = []
    for k in range(1, r // 2 + 1):
        for v in range(n):
            edges.append((v, (v + k) % n))
    if r % 2:
        half = n // 2
        for v in range(half):
            edges.append((v, v + half))
    return Graph(n, edges)


def er_random(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p); each pair drawn once, pair-index order."""
    if n < 0:
        raise ParameterError(f"er_random needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    mask = 0
    for k in np.flatnonzero(draws < p):
        mask |= 1 << int(k)
    return Graph.from_bitmask(n, mask)


def bipartite_random(p: int, q: int, prob: float, seed) -> Graph:
    """Random bipartite graph on parts of size p and q; cross pairs drawn
    in (i, j) row order."""
    if p < 0 or q < 0:
        raise ParameterError(f"part sizes must be >= 0, got ({p}, {q})")
    if not 0.0 <= prob <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {prob}")
    rng = np.random.default_rng(seed)
    draws = rng.random(p * q)
    edges = []
    k = 0
    for i in range(p):
        for j in range(q):
            if draws[k] < prob:
                edges.append((i, p + j))
            k += 1
    return Graph(p + q, edges)


_FAMILIES = {
    "complete": complete_graph,
    "empty": empty_graph,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "path": path,
    "cycle": cycle,
    "disjoint_union": disjoint_union,
    "regular_circulant": regular_circulant,
    "er_random": er_random,
    "bipartite_random": bipartite_random,
}


def generate_family(family: str, *args, **kwargs) -> Graph:
    """Dispatch to a named generator; unknown names raise ParameterError."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(_FAMILIES))
        raise ParameterError(f"unknown family {family!r}; known: {known}")
    return fn(*args, **kwargs)


FAMILY_NAMES = tuple(sorted(_FAMILIES))
