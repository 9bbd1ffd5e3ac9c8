"""Exact verifier for 2x2 quantum-torus realizations of the rank-1 double
affine Hecke algebra, its confluent degenerations, the underlying classical
monodromy geometry, and the braid-group action relating them.

Everything is decided by zero-residual normal-form computation over exact
Gaussian-rational coefficients; there is no numerical tolerance anywhere.
"""

from .classical import ClassicalElement, parameter_bridge
from .families import (
    FAMILIES,
    GeneratorTuple,
    build_family,
    build_qmonodromy,
    relation_suite,
    sign_oracle,
)
from .matrices import Matrix2, inverse_via_quadratic, mat_scalar, quadratic_residual
from .scalars import GaussianRational, Scalar
from .torus import SIGMA, TorusElement, omega, u0_element

__version__ = "0.1.0"

__all__ = [
    "ClassicalElement",
    "FAMILIES",
    "GaussianRational",
    "GeneratorTuple",
    "Matrix2",
    "SIGMA",
    "Scalar",
    "TorusElement",
    "build_family",
    "build_qmonodromy",
    "inverse_via_quadratic",
    "mat_scalar",
    "omega",
    "parameter_bridge",
    "quadratic_residual",
    "relation_suite",
    "sign_oracle",
    "u0_element",
]
