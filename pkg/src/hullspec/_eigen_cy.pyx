# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigensolver core.

Scalar loops for the three hot kernels:

* Householder reduction of a dense Hermitian matrix to real symmetric
  tridiagonal form,
* all eigenvalues of a symmetric tridiagonal matrix by bisection on
  Sturm-sequence inertia counts (deterministic, per-eigenvalue brackets),
* all eigenvalues of a "periodic tridiagonal" matrix (constant off-diagonal
  plus a single symmetric corner entry) by the same inertia bisection with
  an O(n) corner-aware LDL^T pivot recurrence,
* implicit-shift QL iteration as an independent validation path.

The numpy backend in ``_eigen_py`` implements the same contracts; the
dispatcher in ``eigen`` picks whichever is importable.
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

backend = "compiled"

cdef double EPS = 2.220446049250313e-16
cdef double SAFE_MIN = 2.2250738585072014e-308
cdef int MAX_BISECT = 110


# ---------------------------------------------------------------------------
# symmetric tridiagonal: Sturm-count bisection
# ---------------------------------------------------------------------------

cdef inline int _tridiag_count(const double* d, const double* e2, int n,
                               double x, double pivmin) nogil:
    """Number of eigenvalues of tridiag(d, e) strictly below x.

    Counts negative pivots of the LDL^T factorization of (T - x); zero
    pivots are replaced by -pivmin as in LAPACK's stebz.
    """
    cdef int i, cnt = 0
    cdef double p = d[0] - x
    if fabs(p) < pivmin:
        p = -pivmin
    if p < 0.0:
        cnt += 1
    for i in range(1, n):
        p = d[i] - x - e2[i - 1] / p
        if fabs(p) < pivmin:
            p = -pivmin
        if p < 0.0:
            cnt += 1
    return cnt


cdef void _tridiag_eigvals(const double* d, const double* e, int n,
                           double* out) nogil:
    cdef int i, k, it, cnt
    cdef double lo0, hi0, rad, lo, hi, mid, tol, pivmin, emax
    if n == 1:
        out[0] = d[0]
        return
    # Gershgorin bracket
    lo0 = d[0] - fabs(e[0])
    hi0 = d[0] + fabs(e[0])
    for i in range(1, n):
        rad = fabs(e[i - 1])
        if i < n - 1:
            rad += fabs(e[i])
        if d[i] - rad < lo0:
            lo0 = d[i] - rad
        if d[i] + rad > hi0:
            hi0 = d[i] + rad
    emax = 0.0
    for i in range(n - 1):
        if fabs(e[i]) > emax:
            emax = fabs(e[i])
    pivmin = SAFE_MIN * (emax * emax if emax > 1.0 else 1.0)
    tol = EPS * (fabs(lo0) if fabs(lo0) > fabs(hi0) else fabs(hi0))
    if tol < 4.0 * SAFE_MIN:
        tol = 4.0 * SAFE_MIN
    for k in range(n):
        lo = lo0
        hi = hi0
        for it in range(MAX_BISECT):
            if hi - lo <= tol:
                break
            mid = 0.5 * (lo + hi)
            # inline count with e^2 on the fly
            cnt = 0
            rad = d[0] - mid
            if fabs(rad) < pivmin:
                rad = -pivmin
            if rad < 0.0:
                cnt += 1
            for i in range(1, n):
                rad = d[i] - mid - (e[i - 1] * e[i - 1]) / rad
                if fabs(rad) < pivmin:
                    rad = -pivmin
                if rad < 0.0:
                    cnt += 1
            if cnt >= k + 1:
                hi = mid
            else:
                lo = mid
        out[k] = 0.5 * (lo + hi)


def tridiag_eigvals_bisect(double[::1] d, double[::1] e):
    """Ascending eigenvalues of the symmetric tridiagonal matrix (d, e)."""
    cdef int n = d.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    if n == 0:
        return out
    if n == 1:
        out[0] = d[0]
        return out
    with nogil:
        _tridiag_eigvals(&d[0], &e[0], n, &ov[0])
    return out


# ---------------------------------------------------------------------------
# symmetric tridiagonal: implicit-shift QL (validation path)
# ---------------------------------------------------------------------------

def tridiag_eigvals_ql(double[::1] d_in, double[::1] e_in):
    """Ascending eigenvalues of tridiag(d, e) by implicit-shift QL iteration.

    Independent of the bisection path; used for cross-validation.
    """
    cdef int n = d_in.shape[0]
    out = np.array(d_in, dtype=np.float64, copy=True)
    if n <= 1:
        return out
    work = np.zeros(n, dtype=np.float64)
    work[: n - 1] = e_in
    cdef double[::1] d = out
    cdef double[::1] e = work
    cdef int l, m, i, it, broke
    cdef double dd, g, r, s, c, p, f, b
    for l in range(n):
        it = 0
        while True:
            m = n - 1
            for i in range(l, n - 1):
                dd = fabs(d[i]) + fabs(d[i + 1])
                if fabs(e[i]) <= EPS * dd:
                    m = i
                    break
            if m == l:
                break
            it += 1
            if it > 100:
                raise RuntimeError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            if g >= 0.0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            broke = 0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    broke = 1
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
    out.sort()
    return out


# ---------------------------------------------------------------------------
# dense Hermitian -> real symmetric tridiagonal (Householder)
# ---------------------------------------------------------------------------

def hermitian_tridiagonalize(double complex[:, ::1] A):
    """Reduce Hermitian A (overwritten) to tridiagonal (d, e), e real >= 0.

    The eigenvalues are preserved; the subdiagonal phases are dropped at the
    end, which is a diagonal unitary similarity.
    """
    cdef int n = A.shape[0]
    d = np.empty(n, dtype=np.float64)
    e = np.empty(max(n - 1, 0), dtype=np.float64)
    cdef double[::1] dv = d
    cdef double[::1] ev = e
    vbuf = np.empty(n, dtype=np.complex128)
    wbuf = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] v = vbuf
    cdef double complex[::1] w = wbuf
    cdef int k, i, j, m
    cdef double nx2, nx, vn2, beta, s, ax0
    cdef double complex x0, alpha, ph, acc, zi, vi
    for k in range(n - 2):
        m = n - k - 1  # size of the trailing block
        nx2 = 0.0
        for i in range(k + 1, n):
            nx2 += A[i, k].real * A[i, k].real + A[i, k].imag * A[i, k].imag
        nx = sqrt(nx2)
        x0 = A[k + 1, k]
        ax0 = sqrt(x0.real * x0.real + x0.imag * x0.imag)
        if nx == 0.0:
            ev[k] = 0.0
            continue
        # reflect x onto a multiple of e1 with phase matching x0
        if ax0 > 0.0:
            ph = x0 / ax0
        else:
            ph = 1.0
        alpha = -ph * nx
        vn2 = 0.0
        for i in range(m):
            v[i] = A[k + 1 + i, k]
        v[0] = v[0] - alpha
        for i in range(m):
            vn2 += v[i].real * v[i].real + v[i].imag * v[i].imag
        ev[k] = nx  # |alpha|
        if vn2 == 0.0:
            continue  # column already in tridiagonal position
        beta = 2.0 / vn2
        # w = A22 @ v
        for i in range(m):
            acc = 0.0
            for j in range(m):
                acc = acc + A[k + 1 + i, k + 1 + j] * v[j]
            w[i] = acc
        # s = Re(v^H w)
        s = 0.0
        for i in range(m):
            s += v[i].real * w[i].real + v[i].imag * w[i].imag
        # z = beta*w - (beta^2 s / 2) v ; A22 -= v z^H + z v^H
        for i in range(m):
            w[i] = beta * w[i] - (0.5 * beta * beta * s) * v[i]
        for i in range(m):
            vi = v[i]
            zi = w[i]
            for j in range(m):
                A[k + 1 + i, k + 1 + j] = A[k + 1 + i, k + 1 + j] \
                    - vi * w[j].conjugate() - zi * v[j].conjugate()
    if n >= 2:
        x0 = A[n - 1, n - 2]
        ev[n - 2] = sqrt(x0.real * x0.real + x0.imag * x0.imag)
    for i in range(n):
        dv[i] = A[i, i].real
    return d, e


# ---------------------------------------------------------------------------
# periodic tridiagonal (constant off-diagonal + symmetric corner)
# ---------------------------------------------------------------------------

cdef inline int _ptridiag_count(const double* d, int q, double e, double c,
                                double x, double pivmin) nogil:
    """Inertia count for tridiag(d, e) + corner entries c at (0, q-1).

    Symmetric Gaussian elimination; the corner creates fill only in the last
    row/column, tracked by one scalar per step. Requires q >= 3.
    """
    cdef int i, cnt = 0
    cdef double p, fill, nf, ld
    p = d[0] - x
    if fabs(p) < pivmin:
        p = -pivmin
    if p < 0.0:
        cnt += 1
    fill = c
    ld = d[q - 1] - x
    for i in range(1, q - 1):
        ld -= fill * fill / p
        nf = -e * fill / p
        if i == q - 2:
            nf += e
        p = d[i] - x - e * e / p
        if fabs(p) < pivmin:
            p = -pivmin
        if p < 0.0:
            cnt += 1
        fill = nf
    ld -= fill * fill / p
    if fabs(ld) < pivmin:
        ld = -pivmin
    if ld < 0.0:
        cnt += 1
    return cnt


cdef void _ptridiag_eigvals(const double* d, int q, double e, double c,
                            double* out) nogil:
    cdef int i, k, it, cnt
    cdef double lo0, hi0, lo, hi, mid, tol, pivmin, rad
    rad = 2.0 * fabs(e) if 2.0 * fabs(e) > fabs(e) + fabs(c) else fabs(e) + fabs(c)
    lo0 = d[0]
    hi0 = d[0]
    for i in range(1, q):
        if d[i] < lo0:
            lo0 = d[i]
        if d[i] > hi0:
            hi0 = d[i]
    lo0 -= rad
    hi0 += rad
    pivmin = SAFE_MIN * (e * e if e * e > 1.0 else 1.0)
    tol = EPS * (fabs(lo0) if fabs(lo0) > fabs(hi0) else fabs(hi0))
    if tol < 4.0 * SAFE_MIN:
        tol = 4.0 * SAFE_MIN
    for k in range(q):
        lo = lo0
        hi = hi0
        for it in range(MAX_BISECT):
            if hi - lo <= tol:
                break
            mid = 0.5 * (lo + hi)
            cnt = _ptridiag_count(d, q, e, c, mid, pivmin)
            if cnt >= k + 1:
                hi = mid
            else:
                lo = mid
        out[k] = 0.5 * (lo + hi)


def ptridiag_eigvals(double[::1] d, double e, double c):
    """Ascending eigenvalues of tridiag(d, e) + corner c. Requires len(d) >= 3."""
    cdef int q = d.shape[0]
    if q < 3:
        raise ValueError("periodic tridiagonal solver requires q >= 3")
    out = np.empty(q, dtype=np.float64)
    cdef double[::1] ov = out
    with nogil:
        _ptridiag_eigvals(&d[0], q, e, c, &ov[0])
    return out


def edge_eigvals_batch(double[:, ::1] V, double hop):
    """Eigenvalues of the corner=+hop and corner=-hop matrices per row of V.

    Returns an array of shape (N, 2, q): out[i, 0] for corner +hop,
    out[i, 1] for corner -hop. Requires q >= 3.
    """
    cdef int N = V.shape[0]
    cdef int q = V.shape[1]
    if q < 3:
        raise ValueError("edge_eigvals_batch requires q >= 3")
    out = np.empty((N, 2, q), dtype=np.float64)
    cdef double[:, :, ::1] ov = out
    cdef int i
    with nogil:
        for i in range(N):
            _ptridiag_eigvals(&V[i, 0], q, hop, hop, &ov[i, 0, 0])
            _ptridiag_eigvals(&V[i, 0], q, hop, -hop, &ov[i, 1, 0])
    return out
