"""Build script for the optional compiled eigensolver core.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the extension speeds up the band-structure sweeps
by one to two orders of magnitude.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/hullspec/_eigen_cy.pyx",
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - build environments without a toolchain
    warnings.warn(f"compiled core skipped ({exc}); installing pure-python backend only")

setup(ext_modules=ext_modules)
