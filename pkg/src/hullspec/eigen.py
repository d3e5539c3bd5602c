"""Hermitian eigenvalue computation.

Public entry points wrap one of two interchangeable backends: a compiled
extension (``_eigen_cy``) and a numpy implementation (``_eigen_py``).
Selection happens at import time; set ``HULLSPEC_BACKEND=python`` or
``=compiled`` to force one.

The primary path reduces a dense Hermitian matrix to real symmetric
tridiagonal form by Householder reflections and extracts all eigenvalues by
bisection on Sturm-sequence inertia counts: deterministic brackets, each
eigenvalue accurate to a few ulp of the spectral radius. An implicit-shift
QL iteration is kept as an independent cross-check (``method="ql"``).
"""

import os

import numpy as np

_forced = os.environ.get("HULLSPEC_BACKEND", "").strip().lower()
if _forced == "python":
    from . import _eigen_py as _impl
elif _forced == "compiled":
    from . import _eigen_cy as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _eigen_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _eigen_py as _impl

HERMITICITY_RTOL = 1e-12
#: guaranteed relative accuracy of returned eigenvalues (vs spectral radius)
EIG_RTOL = 1e-10


def backend_name():
    """Name of the active backend: "compiled" or "python"."""
    return _impl.backend


def get_backend(name=None):
    """Return a backend module by name (active backend when name is None)."""
    if name is None:
        return _impl
    if name == "python":
        from . import _eigen_py

        return _eigen_py
    if name == "compiled":
        from . import _eigen_cy

        return _eigen_cy
    raise ValueError(f"unknown backend {name!r}")


def _check_hermitian(A):
    scale = float(np.max(np.abs(A))) if A.size else 0.0
    defect = float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0
    if defect > HERMITICITY_RTOL * max(1.0, scale):
        raise ValueError(
            f"matrix is not Hermitian (defect {defect:.3e}, scale {scale:.3e})"
        )


def eig_hermitian(A, method="bisect", impl=None):
    """All eigenvalues of a Hermitian matrix, ascending.

    method: "bisect" (Householder + Sturm bisection, the default) or "ql"
    (Householder + implicit-shift QL, the validation path).
    """
    mod = impl if impl is not None else _impl
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    n = A.shape[0]
    if n == 0:
        return np.empty(0)
    _check_hermitian(A)
    work = np.array(A, dtype=np.complex128, order="C", copy=True)
    d, e = mod.hermitian_tridiagonalize(work)
    if method == "bisect":
        return np.asarray(mod.tridiag_eigvals_bisect(d, e))
    if method == "ql":
        return np.asarray(mod.tridiag_eigvals_ql(d, e))
    raise ValueError(f"unknown method {method!r}")


def eigvals_tridiagonal(d, e, method="bisect", impl=None):
    """All eigenvalues of the real symmetric tridiagonal matrix (d, e)."""
    mod = impl if impl is not None else _impl
    d = np.ascontiguousarray(d, dtype=np.float64)
    e = np.ascontiguousarray(e, dtype=np.float64)
    if e.shape[0] != max(d.shape[0] - 1, 0):
        raise ValueError("off-diagonal must have length n-1")
    if method == "bisect":
        return np.asarray(mod.tridiag_eigvals_bisect(d, e))
    if method == "ql":
        return np.asarray(mod.tridiag_eigvals_ql(d, e))
    raise ValueError(f"unknown method {method!r}")


def eigvals_periodic_tridiagonal(d, hop, corner, impl=None):
    """Eigenvalues of tridiag(d, hop) plus symmetric corner entries.

    This is the Bloch matrix shape of a one-dimensional nearest-neighbor
    operator over one period; q >= 3 (smaller periods collapse to dense
    2x2 / 1x1 problems handled by the callers).
    """
    mod = impl if impl is not None else _impl
    d = np.ascontiguousarray(d, dtype=np.float64)
    return np.asarray(mod.ptridiag_eigvals(d, float(hop), float(corner)))


def edge_eigvals_batch(V, hop, impl=None):
    """Batched periodic/antiperiodic eigenvalues, shape (N, 2, q).

    Row i of V is the diagonal of one period; out[i, 0] are the eigenvalues
    with corner +hop (periodic boundary phase), out[i, 1] with corner -hop
    (antiperiodic). Requires q >= 3.
    """
    mod = impl if impl is not None else _impl
    V = np.ascontiguousarray(V, dtype=np.float64)
    return np.asarray(mod.edge_eigvals_batch(V, float(hop)))
