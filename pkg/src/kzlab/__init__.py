"""Exact verification lab for symmetric translation surfaces and their cocycles.

Subpackages are intentionally flat: cyclotomic (exact field arithmetic),
surface (cone-angle bookkeeping and homology pairings), characters (dihedral-
style group representation data), rauzy (induction diagrams), cocycle
(generator matrices and invariant Hermitian forms), density (group closure
certificates), lyapunov (Monte-Carlo spectra), reports/cli (verification
runner and entry point).
"""

from .cyclotomic import AlphaParam, CyclotomicNumber, cyclotomic_polynomial, root_of_unity

__version__ = "0.1.0"

__all__ = [
    "AlphaParam",
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "root_of_unity",
    "__version__",
]
