from .clutter import (
    Clutter,
    ExponentVector,
    characteristic_vectors,
    clutter_validate,
    complete_bipartite_clutter,
    load_clutter,
    singleton_clutter,
)
from .toric_set import (
    ProjectivePoint,
    ToricSet,
    is_complete_intersection,
    projective_torus,
    toric_set_from_exponents,
)

__all__ = [
    'Clutter',
    'ExponentVector',
    'ProjectivePoint',
    'ToricSet',
    'characteristic_vectors',
    'clutter_validate',
    'complete_bipartite_clutter',
    'is_complete_intersection',
    'load_clutter',
    'projective_torus',
    'singleton_clutter',
    'toric_set_from_exponents',
]
