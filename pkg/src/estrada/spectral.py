"""Eigenvalues of adjacency matrices and the quantities built from them.

The eigensolver is a cyclic Jacobi iteration (see _kernels); everything
here is a thin, validated layer over it. estrada_index_series is a
deliberately independent oracle: it never touches eigenvalues and sums
the power-trace series instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DegenerateGraphError, DomainError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, plus solver diagnostics."""

    values: Tuple[float, ...]
    residual: float
    sweeps: int

    @property
    def n(self) -> int:
        return len(self.values)


def eigen_symmetric(a: np.ndarray) -> Spectrum:
    """Full spectrum of a dense symmetric real matrix.

    Rotations run until the off-diagonal Frobenius norm falls below
    1e-12 * max(1, ||A||_F); a symmetric input that fails to get there
    within 100 sweeps raises ConvergenceError.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"need a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise DomainError("need at least a 1x1 matrix")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not exactly symmetric")
    work = a.copy()
    vals, residual, sweeps = _kernels.jacobi_eigenvalues(
        work, _kernels.JACOBI_RELTOL, _kernels.JACOBI_MAX_SWEEPS
    )
    if sweeps < 0:
        raise ConvergenceError(
            f"Jacobi did not converge in {_kernels.JACOBI_MAX_SWEEPS} sweeps "
            f"(residual {residual:.3e})"
        )
    ordered = tuple(float(v) for v in vals[::-1])
    return Spectrum(values=ordered, residual=float(residual), sweeps=int(sweeps))


def spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise DegenerateGraphError("spectrum undefined on zero vertices")
    return eigen_symmetric(g.adjacency_matrix())


def spectral_moment(s: Spectrum, k: int) -> float:
    """M_k, the sum of k-th powers of the eigenvalues."""
    if k < 0:
        raise ParameterError(f"moment order must be >= 0, got {k}")
    if k == 0:
        return float(s.n)
    return float(sum(v**k for v in s.values))


def estrada_index(s: Spectrum) -> float:
    """Sum of exp(eigenvalue), accumulated in ascending-magnitude order."""
    total = 0.0
    for v in sorted(s.values, key=abs):
        total += np.exp(v)
    return float(total)


def graph_energy(s: Spectrum) -> float:
    """Sum of absolute eigenvalues, accumulated in ascending-magnitude order."""
    total = 0.0
    for v in sorted(s.values, key=abs):
        total += abs(v)
    return float(total)


def estrada_index_series(g: Graph, tol: float = 1e-10) -> float:
    """Estrada index through the spectral-moment series, no eigenvalues.

    Sums trace(A^k)/k! using the scaled-power recurrence B_k = B_{k-1} A / k
    (so B_k = A^k/k! and the trace is already the series term; the scaling
    only avoids overflow in k!). Truncates at the first K where
    n * rho^K / K! * 1/(1 - rho/(K+1)) < tol, rho being the max degree,
    which bounds the dropped tail because |lambda| <= rho.
    """
    if tol <= 0.0:
        raise ParameterError(f"series tolerance must be > 0, got {tol}")
    n = g.n
    if n == 0:
        return 0.0
    rho = float(g.max_degree)
    a = g.adjacency_matrix()
    b = np.eye(n)
    total = float(n)
    t_k = float(n)  # n * rho^K / K!
    k = 0
    while True:
        k += 1
        t_k *= rho / k
        if rho < k + 1 and t_k / (1.0 - rho / (k + 1)) < tol:
            break
        b = b @ a / k
        total += float(np.trace(b))
    return total
