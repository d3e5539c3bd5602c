"""Pure-python (numpy) eigensolver backend.

Same contracts as the compiled core in ``_eigen_cy``. The bisection paths
vectorize over eigenvalue indices (and over matrix batches) so the fallback
stays usable for the band sweeps, at roughly an order of magnitude slower
than the compiled loops; the QL path is scalar and is only meant for
validation-sized problems.
"""

import numpy as np

backend = "python"

_EPS = float(np.finfo(np.float64).eps)
_SAFE_MIN = float(np.finfo(np.float64).tiny)
_MAX_BISECT = 110


def _guard(p, pivmin):
    return np.where(np.abs(p) < pivmin, -pivmin, p)


def tridiag_eigvals_bisect(d, e):
    """Ascending eigenvalues of the symmetric tridiagonal matrix (d, e)."""
    d = np.asarray(d, dtype=np.float64)
    e = np.asarray(e, dtype=np.float64)
    n = d.shape[0]
    if n == 0:
        return np.empty(0)
    if n == 1:
        return d.copy()
    e2 = e * e
    rad = np.zeros(n)
    rad[:-1] += np.abs(e)
    rad[1:] += np.abs(e)
    lo0 = float(np.min(d - rad))
    hi0 = float(np.max(d + rad))
    pivmin = _SAFE_MIN * max(1.0, float(e2.max()))
    tol = max(_EPS * max(abs(lo0), abs(hi0)), 4.0 * _SAFE_MIN)
    ks = np.arange(n)
    los = np.full(n, lo0)
    his = np.full(n, hi0)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (los + his)
        p = _guard(d[0] - mid, pivmin)
        cnt = (p < 0).astype(np.int64)
        for i in range(1, n):
            p = _guard(d[i] - mid - e2[i - 1] / p, pivmin)
            cnt += p < 0
        geq = cnt >= ks + 1
        his = np.where(geq, mid, his)
        los = np.where(geq, los, mid)
        if float(np.max(his - los)) <= tol:
            break
    return 0.5 * (los + his)


def tridiag_eigvals_ql(d_in, e_in):
    """Ascending eigenvalues of tridiag(d, e) by implicit-shift QL iteration."""
    d = np.array(d_in, dtype=np.float64, copy=True)
    n = d.shape[0]
    if n <= 1:
        return d
    e = np.zeros(n)
    e[: n - 1] = np.asarray(e_in, dtype=np.float64)
    for l in range(n):
        it = 0
        while True:
            m = n - 1
            for i in range(l, n - 1):
                dd = abs(d[i]) + abs(d[i + 1])
                if abs(e[i]) <= _EPS * dd:
                    m = i
                    break
            if m == l:
                break
            it += 1
            if it > 100:
                raise RuntimeError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0 else -r))
            s = c = 1.0
            p = 0.0
            broke = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    broke = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if broke:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    d.sort()
    return d


def hermitian_tridiagonalize(A):
    """Reduce Hermitian A (overwritten) to tridiagonal (d, e), e real >= 0."""
    A = np.asarray(A)
    n = A.shape[0]
    d = np.empty(n)
    e = np.empty(max(n - 1, 0))
    for k in range(n - 2):
        x = A[k + 1:, k]
        nx2 = float(np.sum((x * x.conj()).real))
        nx = np.sqrt(nx2)
        if nx == 0.0:
            e[k] = 0.0
            continue
        x0 = x[0]
        ax0 = abs(x0)
        ph = x0 / ax0 if ax0 > 0 else 1.0
        alpha = -ph * nx
        v = x.copy()
        v[0] -= alpha
        vn2 = float(np.sum((v * v.conj()).real))
        e[k] = nx
        if vn2 == 0.0:
            continue
        beta = 2.0 / vn2
        A22 = A[k + 1:, k + 1:]
        w = A22 @ v
        s = float(np.real(np.vdot(v, w)))
        z = beta * w - (0.5 * beta * beta * s) * v
        A22 -= np.outer(v, z.conj()) + np.outer(z, v.conj())
    if n >= 2:
        e[n - 2] = abs(A[n - 1, n - 2])
    d[:] = np.real(np.diagonal(A))
    return d, e


def _ptridiag_counts(V, hop, corner, mids, pivmin):
    """Vectorized inertia counts for the corner-augmented tridiagonal.

    V has shape (N, q); mids has shape (N, m): counts for every row of V at
    every shift in the matching row of mids.
    """
    q = V.shape[1]
    e2 = hop * hop
    p = _guard(V[:, 0:1] - mids, pivmin)
    cnt = (p < 0).astype(np.int64)
    fill = np.full_like(mids, corner)
    ld = V[:, q - 1: q] - mids
    for i in range(1, q - 1):
        ld = ld - fill * fill / p
        nf = -hop * fill / p
        if i == q - 2:
            nf = nf + hop
        p = _guard(V[:, i: i + 1] - mids - e2 / p, pivmin)
        cnt += p < 0
        fill = nf
    ld = _guard(ld - fill * fill / p, pivmin)
    cnt += ld < 0
    return cnt


def _ptridiag_eigvals_rows(V, hop, corner):
    N, q = V.shape
    rad = max(2.0 * abs(hop), abs(hop) + abs(corner))
    lo0 = V.min(axis=1) - rad
    hi0 = V.max(axis=1) + rad
    pivmin = _SAFE_MIN * max(1.0, hop * hop)
    scale = max(float(np.max(np.abs(lo0))), float(np.max(np.abs(hi0))))
    tol = max(_EPS * scale, 4.0 * _SAFE_MIN)
    ks = np.arange(q)[None, :]
    los = np.repeat(lo0[:, None], q, axis=1)
    his = np.repeat(hi0[:, None], q, axis=1)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (los + his)
        cnt = _ptridiag_counts(V, hop, corner, mid, pivmin)
        geq = cnt >= ks + 1
        his = np.where(geq, mid, his)
        los = np.where(geq, los, mid)
        if float(np.max(his - los)) <= tol:
            break
    return 0.5 * (los + his)


def ptridiag_eigvals(d, e, c):
    """Ascending eigenvalues of tridiag(d, e) + corner c. Requires len(d) >= 3."""
    d = np.asarray(d, dtype=np.float64)
    if d.shape[0] < 3:
        raise ValueError("periodic tridiagonal solver requires q >= 3")
    return _ptridiag_eigvals_rows(d[None, :], float(e), float(c))[0]


def edge_eigvals_batch(V, hop):
    """Per-row eigenvalues for corner=+hop and corner=-hop; shape (N, 2, q)."""
    V = np.ascontiguousarray(V, dtype=np.float64)
    N, q = V.shape
    if q < 3:
        raise ValueError("edge_eigvals_batch requires q >= 3")
    out = np.empty((N, 2, q))
    out[:, 0, :] = _ptridiag_eigvals_rows(V, hop, hop)
    out[:, 1, :] = _ptridiag_eigvals_rows(V, hop, -hop)
    return out
