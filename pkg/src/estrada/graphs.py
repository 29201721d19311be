"""Graph representation, traversal, and structural classification.

Vertices are labeled 0..n-1. Adjacency lives in packed bit rows, one
Python int per vertex, which keeps neighborhood intersection, BFS, and
exhaustive enumeration cheap at the scales this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Tuple

import numpy as np

from .errors import (
    CapacityError,
    DegenerateGraphError,
    GraphConstructionError,
    ParameterError,
)

ENUMERATION_MAX_N = 7


def _popcount(x: int) -> int:
    return bin(x).count("1")


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair (i, j) with i < j.

    Pairs are ordered (0,1), (0,2), (1,2), (0,3), ... which is both the
    enumeration-mask order and the graph6 payload order.
    """
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Classification:
    """Structural verdicts for one graph, all decided combinatorially."""

    connected: bool
    bipartite: bool
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    unicyclic: bool
    regular: Optional[int]
    empty: bool
    complete: bool
    complete_bipartite: Optional[Tuple[int, int]]
    star: bool
    path: bool
    cycle: bool
    union_of_completes: bool
    component_sizes: Tuple[int, ...]
    isolated_count: int
    core_complete_bipartite: Optional[Tuple[int, int]]


class Graph:
    """Immutable simple undirected graph.

    Construct with an explicit vertex count and an iterable of endpoint
    pairs; duplicates and both orientations collapse to one edge. Loops
    and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "m", "_rows")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
        rows = [0] * n
        m = 0
        for i, j in edges:
            if i == j:
                raise GraphConstructionError(f"loop edge ({i}, {j}) not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphConstructionError(
                    f"edge ({i}, {j}) out of range for n={n}"
                )
            if not (rows[i] >> j) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                m += 1
        self.n = n
        self.m = m
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, n: int, rows, m: int) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.m = m
        g._rows = tuple(rows)
        return g

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> "Graph":
        """Decode an upper-triangle bitmask (pair_index order) into a graph."""
        if n < 0:
            raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
        npairs = n * (n - 1) // 2
        if mask < 0 or mask >> npairs:
            raise GraphConstructionError(
                f"bitmask {mask} out of range for n={n} ({npairs} pair bits)"
            )
        rows = [0] * n
        m = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    m += 1
                k += 1
        return cls._from_rows(n, rows, m)

    def to_bitmask(self) -> int:
        mask = 0
        for j in range(1, self.n):
            row = self._rows[j]
            base = j * (j - 1) // 2
            for i in range(j):
                if (row >> i) & 1:
                    mask |= 1 << (base + i)
        return mask

    # -- basic accessors ------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise GraphConstructionError(f"vertex pair ({i}, {j}) out of range")
        return bool((self._rows[i] >> j) & 1)

    def neighbors(self, v: int):
        row = self._rows[v]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def degree(self, v: int) -> int:
        return _popcount(self._rows[v])

    def degrees(self):
        return [_popcount(r) for r in self._rows]

    @property
    def max_degree(self) -> int:
        if self.n == 0:
            raise DegenerateGraphError("max degree undefined on zero vertices")
        return max(self.degrees())

    @property
    def min_degree(self) -> int:
        if self.n == 0:
            raise DegenerateGraphError("min degree undefined on zero vertices")
        return min(self.degrees())

    def edges(self):
        out = []
        for j in range(1, self.n):
            row = self._rows[j]
            for i in range(j):
                if (row >> i) & 1:
                    out.append((i, j))
        return out

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, j in self.edges():
            a[i, j] = 1.0
            a[j, i] = 1.0
        return a

    # -- traversal ------------------------------------------------------

    def _component_mask(self, start: int) -> int:
        comp = 1 << start
        while True:
            nxt = comp
            f = comp
            while f:
                low = f & -f
                nxt |= self._rows[low.bit_length() - 1]
                f ^= low
            if nxt == comp:
                return comp
            comp = nxt

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self._component_mask(0) == (1 << self.n) - 1

    def components(self):
        """Vertex lists of connected components, each sorted, in label order."""
        out = []
        remaining = (1 << self.n) - 1
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self._component_mask(start)
            out.append([v for v in range(self.n) if (comp >> v) & 1])
            remaining &= ~comp
        return out

    def bipartition(self):
        """Two color classes if the graph is 2-colorable, else None.

        Isolated vertices land in the first class. The split is canonical
        only up to per-component color swaps; callers needing sizes for a
        connected graph get the unique ones.
        """
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in self.neighbors(v):
                    if color[u] < 0:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        v1 = tuple(v for v in range(self.n) if color[v] == 0)
        v2 = tuple(v for v in range(self.n) if color[v] == 1)
        return v1, v2

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def diameter(self):
        """Longest shortest path; math.inf when disconnected, 0 for n=1."""
        if self.n == 0:
            raise DegenerateGraphError("diameter undefined on zero vertices")
        full = (1 << self.n) - 1
        if self._component_mask(0) != full:
            return math.inf
        best = 0
        for start in range(self.n):
            seen = 1 << start
            frontier = seen
            dist = 0
            while seen != full:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self._rows[low.bit_length() - 1]
                    f ^= low
                nxt &= ~seen
                if not nxt:
                    break
                seen |= nxt
                frontier = nxt
                dist += 1
            best = max(best, dist)
        return best

    def triangle_count(self) -> int:
        total = 0
        for i, j in self.edges():
            total += _popcount(self._rows[i] & self._rows[j])
        return total // 3

    # -- classification ---------------------------------------------------

    def classify(self) -> Classification:
        n, m = self.n, self.m
        degs = self.degrees()
        comps = self.components()
        connected = len(comps) == 1
        bip = self.bipartition()
        component_sizes = tuple(sorted((len(c) for c in comps), reverse=True))
        isolated = sum(1 for d in degs if d == 0)

        regular = degs[0] if n >= 1 and min(degs) == max(degs) else None
        empty = m == 0
        complete = n >= 1 and m == n * (n - 1) // 2
        cb = _complete_bipartite_parts(self)
        star = cb is not None and cb[0] == 1
        dmax = max(degs) if n else 0
        path = connected and (
            n == 1 or (dmax <= 2 and sum(1 for d in degs if d == 1) == 2)
        )
        cycle = connected and n >= 3 and regular == 2
        unicyclic = connected and m == n

        union_of_completes = n >= 1 and all(
            all(degs[v] == len(c) - 1 for v in c) for c in comps
        )

        core_cb = None
        if m >= 1 and isolated > 0:
            support = [v for v in range(n) if degs[v] >= 1]
            relabel = {v: k for k, v in enumerate(support)}
            sub_edges = [(relabel[i], relabel[j]) for i, j in self.edges()]
            core_cb = _complete_bipartite_parts(Graph(len(support), sub_edges))
        elif cb is not None:
            core_cb = cb

        return Classification(
            connected=connected,
            bipartite=bip is not None,
            bipartition=bip,
            unicyclic=unicyclic,
            regular=regular,
            empty=empty,
            complete=complete,
            complete_bipartite=cb,
            star=star,
            path=path,
            cycle=cycle,
            union_of_completes=union_of_completes,
            component_sizes=component_sizes,
            isolated_count=isolated,
            core_complete_bipartite=core_cb,
        )

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _complete_bipartite_parts(g: Graph) -> Optional[Tuple[int, int]]:
    """(p, q) with p <= q if g is exactly K_{p,q}, else None."""
    if g.n < 2 or g.m == 0:
        return None
    bip = g.bipartition()
    if bip is None:
        return None
    p, q = len(bip[0]), len(bip[1])
    if p >= 1 and q >= 1 and g.m == p * q:
        # all cross pairs present forces connectivity as well
        return (p, q) if p <= q else (q, p)
    return None


def enumerate_graphs(
    n: int, predicate: Optional[Callable[[Graph], bool]] = None
) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices in bitmask order.

    Covers all 2^(n(n-1)/2) adjacency masks; no isomorphism reduction.
    The ceiling is deliberate: beyond n=7 the labeled count outgrows
    desk-scale verification.
    """
    if n < 0:
        raise ParameterError(f"vertex count must be >= 0, got {n}")
    if n > ENUMERATION_MAX_N:
        raise CapacityError(
            f"exhaustive enumeration capped at n={ENUMERATION_MAX_N}, got {n}"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        g = Graph.from_bitmask(n, mask)
        if predicate is None or predicate(g):
            yield g
