"""Exact computations for the complex euclidean reflection group of type G4~
acting on the Hurwitz quaternions."""

__version__ = "0.1.0"

from .hquat import Quat, ComplexScalar, ZETA, OMEGA
from .isometry import EuclideanMap
from .lattices import PHI, LatticeTag, in_lattice
from .verify import VerifyConfig, verify_all

__all__ = [
    "Quat", "ComplexScalar", "ZETA", "OMEGA", "EuclideanMap", "PHI",
    "LatticeTag", "in_lattice", "VerifyConfig", "verify_all", "__version__",
]
