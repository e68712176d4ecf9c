"""Parameterized evaluation codes over algebraic toric sets in P^(s-1) over GF(q)."""
from .codes import code_params
from .errors import (
    BoundViolationError,
    CapExceededError,
    ClutterError,
    DiscrepancyError,
    FieldMismatchError,
    PreconditionError,
    ToricCodesError,
)
from .gf import field_for_order, make_field

__version__ = "0.1.0"

__all__ = [
    "BoundViolationError",
    "CapExceededError",
    "ClutterError",
    "DiscrepancyError",
    "FieldMismatchError",
    "PreconditionError",
    "ToricCodesError",
    "code_params",
    "field_for_order",
    "make_field",
]
