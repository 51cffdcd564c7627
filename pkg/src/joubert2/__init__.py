"""Finite-field engine and verification suite for degree-6 Joubert-style
generator questions in small characteristic.

The package computes in GF(p^m), searches for trace-constrained generators
of relative field extensions, enumerates the sextic minimal polynomials they
produce, counts points on the associated diagonal-trace cubic surfaces and
Artin-Schreier curves, and checks a representation-theoretic fixed-plane
obstruction.  `joubert2 verify-all` runs every check and emits a manifest.
"""

from .errors import BudgetError, DomainError
from .ffield import (
    DEFAULT_LIMIT,
    ExtDesc,
    FElt,
    FieldDesc,
    canonical_modulus,
    in_subfield,
    iter_elements,
    make_ext,
    make_field,
    rel_frobenius,
    rel_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "DomainError",
    "DEFAULT_LIMIT",
    "ExtDesc",
    "FElt",
    "FieldDesc",
    "canonical_modulus",
    "in_subfield",
    "iter_elements",
    "make_ext",
    "make_field",
    "rel_frobenius",
    "rel_trace",
    "__version__",
]
