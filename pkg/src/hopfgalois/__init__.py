"""hopfgalois: exact verification toolkit for Hopf-Galois extensions.

Structure-constant Hopf algebras and comodule algebras over Q or F_p,
canonical/translation maps, the two-object convolution categories and their
isomorphism onto the module category, cleft/crossed-product structure
theory, Sweedler H^1, and the action-lifting correspondence.
"""

from .fields import QQ, PrimeField, RationalField, field_from_name
from .linalg import BACKEND, Matrix, NoSolution, NotInvertible

__all__ = [
    "QQ",
    "PrimeField",
    "RationalField",
    "field_from_name",
    "BACKEND",
    "Matrix",
    "NoSolution",
    "NotInvertible",
]

__version__ = "0.1.0"
