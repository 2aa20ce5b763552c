"""Exact self-stress spaces of rational tensegrity frameworks.

Two independent routes: the direct balancing kernel over the quotient
lattices (``framework.self_stress_basis``) and the toric route through the
lifted fan, intersection numbers and constrained divisor classes
(``chow.constrained_stress_space``), with ``chow.compare_routes`` verifying
exact agreement. All arithmetic is exact.
"""

from stressfan._kernels import backend_name
from stressfan.chow import compare_routes, constrained_stress_space
from stressfan.framework import (
    KEdge,
    KFace,
    KFramework,
    KIncidence,
    PlanarFramework,
    self_stress_basis,
    validate_general,
    validate_planar,
)

__version__ = "0.1.0"

__all__ = [
    "KEdge",
    "KFace",
    "KFramework",
    "KIncidence",
    "PlanarFramework",
    "backend_name",
    "compare_routes",
    "constrained_stress_space",
    "self_stress_basis",
    "validate_general",
    "validate_planar",
    "__version__",
]
