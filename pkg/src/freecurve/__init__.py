"""Exact analysis of reduced plane projective curves.

Freeness and nearly-freeness via Jacobian syzygies and the du Plessis–Wall
bound, local singularity invariants (Milnor/Tjurina numbers, tangent cones,
Hessian contact), inflection censuses, modular points and supersolvability,
plus constructors and a verification catalog for the known line-addition
families.  All arithmetic is exact over Q, GF(p), or simple algebraic
extensions.
"""

__version__ = "0.1.0"

from .fields import QQ, Extension, PrimeField, Rationals, field_from_config

__all__ = [
    "QQ",
    "Extension",
    "PrimeField",
    "Rationals",
    "field_from_config",
    "__version__",
]
