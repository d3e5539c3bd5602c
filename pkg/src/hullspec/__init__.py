"""Dynamically-defined lattice operators, their spectra, and quantitative
continuity of the spectrum map.

Subpackages by concern:

* ``lattice``   -- geometry of Z^d: norms, balls, growth constants, tent
                   cutoffs, translation defects
* ``hulls``     -- frequency-torus and subshift dynamical hulls, actions,
                   metrics, Hausdorff distance between invariant sets
* ``kernels``   -- finite-range operator kernels, Schur-type norms,
                   regularity moduli, self-adjointness audits
* ``operators`` -- finite sections, covariance and norm-bound checks,
                   cutoff localization of approximate eigenfunctions
* ``eigen``     -- Hermitian eigensolvers (compiled core + numpy fallback)
* ``spectra``   -- Bloch band spectra of periodic points, hull-union spectra
                   with certified error radii
* ``hausdorff`` -- exact Hausdorff distances between band sets / point sets
* ``approx``    -- continued-fraction and substitution approximants, scaling
                   series, power-law exponent fits
* ``bounds``    -- explicit Holder / Lipschitz constants and per-pair bound
                   verdicts
* ``cli``       -- command-line front end and result cache
"""

__version__ = "0.1.0"

from .eigen import backend_name, eig_hermitian

__all__ = ["__version__", "backend_name", "eig_hermitian"]
