from .field import FieldElement, FiniteField, field_for_order, make_field, nonzero_elements
from .linalg import null_space, rank, row_echelon

__all__ = [
    'FiniteField',
    'FieldElement',
    'make_field',
    'field_for_order',
    'nonzero_elements',
    'row_echelon',
    'rank',
    'null_space',
]
