from ..polyeval import monomials_of_degree
from .evaluation import (
    EvaluationMatrix,
    dimension,
    evaluation_matrix,
    generator_basis,
    min_distance_oracle,
    span_table,
    vanishing_forms_basis,
)
from .formulas import (
    bipartite_params,
    decompose_degree,
    decomposition_monotone,
    dimension_torus_formula,
    max_zeros_formula,
    min_distance_p1_p2,
    min_distance_torus_formula,
)
from .service import code_params

__all__ = [
    "EvaluationMatrix",
    "bipartite_params",
    "code_params",
    "decompose_degree",
    "decomposition_monotone",
    "dimension",
    "dimension_torus_formula",
    "evaluation_matrix",
    "generator_basis",
    "max_zeros_formula",
    "min_distance_oracle",
    "min_distance_p1_p2",
    "min_distance_torus_formula",
    "monomials_of_degree",
    "span_table",
    "vanishing_forms_basis",
]
