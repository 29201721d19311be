"""Hot numeric kernels: cyclic Jacobi eigensolver and the batch graph scanner.

Each kernel is written once as a plain Python/numpy function. When numba is
importable and ESTRADA_PURE_NUMPY is unset/0, the kernels are compiled with
@njit(cache=True, nogil=True); otherwise the uncompiled functions run as-is
(same code, Python speed). ``USING_NUMBA`` reports which path is active.

The batch scanner decodes labeled-graph bitmasks (pair (i,j), i<j, at bit
j*(j-1)/2 + i, the graph6 bit order) and computes per graph every structural
and spectral quantity the bound catalog consumes. Bit rows live in int64, so
the scanner accepts n <= 62; the enumeration modules only ever pass n <= 7.
"""

import os

import numpy as np

JACOBI_RELTOL = 1e-12
JACOBI_MAX_SWEEPS = 100

# batch_graph_stats column layout
COL_M = 0
COL_DMAX = 1
COL_DMIN = 2
COL_DEG1 = 3
COL_CONNECTED = 4
COL_BIPARTITE = 5
COL_DIAM = 6
COL_TRI = 7
COL_RANDIC = 8
COL_RHALF = 9
COL_LAM1 = 10
COL_LAMN = 11
COL_EE = 12
COL_RESID = 13
NCOLS = 14

_FORCE_PURE = os.environ.get("ESTRADA_PURE_NUMPY", "").strip() not in ("", "0")

USING_NUMBA = False
if not _FORCE_PURE:
    try:
        from numba import njit as _njit

        USING_NUMBA = True
    except ImportError:
        USING_NUMBA = False


def _py_jacobi_eigenvalues(a, rel_tol, max_sweeps):
    """Cyclic Jacobi on a symmetric matrix, destroying ``a``.

    Sweeps rotate every (p, q) pair in row order until the off-diagonal
    Frobenius norm drops below rel_tol * max(1, ||A||_F) of the input.
    Returns (eigenvalues ascending, final off-diagonal norm, sweeps used);
    sweeps is -1 when max_sweeps was exhausted without convergence.
    """
    n = a.shape[0]
    fro = 0.0
    off2 = 0.0
    for i in range(n):
        for j in range(n):
            v = a[i, j] * a[i, j]
            fro += v
            if i != j:
                off2 += v
    thresh = rel_tol * max(1.0, fro ** 0.5)

    sweeps = 0
    off = off2 ** 0.5
    while off >= thresh and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + (1.0 + tau * tau) ** 0.5)
                else:
                    t = -1.0 / (-tau + (1.0 + tau * tau) ** 0.5)
                c = 1.0 / (1.0 + t * t) ** 0.5
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off2 = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off2 += a[i, j] * a[i, j]
        off = off2 ** 0.5

    d = np.empty(n)
    for i in range(n):
        d[i] = a[i, i]
    vals = np.sort(d)
    if off >= thresh:
        return vals, off, -1
    return vals, off, sweeps


def _py_batch_graph_stats(n, masks):
    """Structural + spectral stats for each adjacency bitmask, as (B, NCOLS).

    Columns per the COL_* constants. Diameter is +inf for disconnected
    graphs. COL_RESID holds the Jacobi off-diagonal norm at convergence,
    or -1.0 on non-convergence (never expected).
    """
    b = masks.shape[0]
    out = np.empty((b, NCOLS))
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    color = np.zeros(n, np.int64)
    queue = np.zeros(n, np.int64)
    a = np.zeros((n, n))
    full = (np.int64(1) << np.int64(n)) - 1
    one = np.int64(1)

    for g in range(b):
        mask = masks[g]
        for i in range(n):
            rows[i] = 0
        k = 0
        m = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> k) & one != 0:
                    rows[i] |= one << np.int64(j)
                    rows[j] |= one << np.int64(i)
                    m += 1
                k += 1

        dmax = 0
        dmin = n
        deg1 = 0
        for i in range(n):
            d = 0
            r = rows[i]
            while r != 0:
                r &= r - one
                d += 1
            deg[i] = d
            if d > dmax:
                dmax = d
            if d < dmin:
                dmin = d
            if d == 1:
                deg1 += 1

        comp = one
        while True:
            nxt = comp
            for i in range(n):
                if (comp >> np.int64(i)) & one != 0:
                    nxt |= rows[i]
            if nxt == comp:
                break
            comp = nxt
        connected = comp == full

        for i in range(n):
            color[i] = -1
        bipartite = True
        for start in range(n):
            if not bipartite:
                break
            if color[start] >= 0:
                continue
            color[start] = 0
            queue[0] = start
            head = 0
            tail = 1
            while head < tail and bipartite:
                v = queue[head]
                head += 1
                r = rows[v]
                for u in range(n):
                    if (r >> np.int64(u)) & one != 0:
                        if color[u] < 0:
                            color[u] = 1 - color[v]
                            queue[tail] = u
                            tail += 1
                        elif color[u] == color[v]:
                            bipartite = False
                            break

        if connected:
            diam = 0
            for start in range(n):
                seen = one << np.int64(start)
                frontier = seen
                dist = 0
                while seen != full:
                    nf = np.int64(0)
                    for i in range(n):
                        if (frontier >> np.int64(i)) & one != 0:
                            nf |= rows[i]
                    nf &= ~seen
                    if nf == 0:
                        break
                    seen |= nf
                    frontier = nf
                    dist += 1
                if dist > diam:
                    diam = dist
            diam_f = float(diam)
        else:
            diam_f = np.inf

        t2 = 0
        for j in range(1, n):
            for i in range(j):
                if (rows[j] >> np.int64(i)) & one != 0:
                    c = rows[i] & rows[j]
                    while c != 0:
                        c &= c - one
                        t2 += 1
        tri = t2 // 3

        randic = 0.0
        rhalf = 0.0
        for j in range(1, n):
            for i in range(j):
                if (rows[j] >> np.int64(i)) & one != 0:
                    sq = float(deg[i] * deg[j]) ** 0.5
                    rhalf += sq
                    randic += 1.0 / sq

        for i in range(n):
            for j in range(n):
                a[i, j] = 0.0
        for j in range(1, n):
            for i in range(j):
                if (rows[j] >> np.int64(i)) & one != 0:
                    a[i, j] = 1.0
                    a[j, i] = 1.0
        vals, resid, sweeps = jacobi_eigenvalues(a, JACOBI_RELTOL, JACOBI_MAX_SWEEPS)

        # sum exp(lambda) in ascending-magnitude order: vals is ascending,
        # merge outward from the sign change
        split = 0
        while split < n and vals[split] < 0.0:
            split += 1
        lo = split - 1
        hi = split
        ee = 0.0
        while lo >= 0 or hi < n:
            if lo < 0:
                ee += np.exp(vals[hi])
                hi += 1
            elif hi >= n:
                ee += np.exp(vals[lo])
                lo -= 1
            elif -vals[lo] <= vals[hi]:
                ee += np.exp(vals[lo])
                lo -= 1
            else:
                ee += np.exp(vals[hi])
                hi += 1

        out[g, COL_M] = float(m)
        out[g, COL_DMAX] = float(dmax)
        out[g, COL_DMIN] = float(dmin)
        out[g, COL_DEG1] = float(deg1)
        out[g, COL_CONNECTED] = 1.0 if connected else 0.0
        out[g, COL_BIPARTITE] = 1.0 if bipartite else 0.0
        out[g, COL_DIAM] = diam_f
        out[g, COL_TRI] = float(tri)
        out[g, COL_RANDIC] = randic
        out[g, COL_RHALF] = rhalf
        out[g, COL_LAM1] = vals[n - 1]
        out[g, COL_LAMN] = vals[0]
        out[g, COL_EE] = ee
        out[g, COL_RESID] = resid if sweeps >= 0 else -1.0
    return out


if USING_NUMBA:
    jacobi_eigenvalues = _njit(cache=True, nogil=True)(_py_jacobi_eigenvalues)
    batch_graph_stats = _njit(cache=True, nogil=True)(_py_batch_graph_stats)
else:
    jacobi_eigenvalues = _py_jacobi_eigenvalues
    batch_graph_stats = _py_batch_graph_stats
