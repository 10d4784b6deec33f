"""Exact-rational calculus for G2-structures and associative submanifolds.

Everything is computed over the rationals in declared-orthonormal frames:
exterior algebra, the model G2 cross-product calculus, left-invariant
connections from structure constants, intrinsic torsion and its
Fernandez-Gray class, and the Weitzenbock identity for the twisted Dirac
operator on normal sections of an associative subalgebra.
"""

__version__ = "0.1.0"

from .exterior import KForm, Vector, wedge, interior, hodge, form_inner
from .g2algebra import G2Data, model_phi, cross, associator
from .liealgebra import LieAlgebraStructure, christoffel, curvature, jacobi_check
from .torsion import TorsionData, torsion_forms, classify
from .geometry import load_geometry, bundled_path

__all__ = [
    "KForm",
    "Vector",
    "wedge",
    "interior",
    "hodge",
    "form_inner",
    "G2Data",
    "model_phi",
    "cross",
    "associator",
    "LieAlgebraStructure",
    "christoffel",
    "curvature",
    "jacobi_check",
    "TorsionData",
    "torsion_forms",
    "classify",
    "load_geometry",
    "bundled_path",
    "__version__",
]
