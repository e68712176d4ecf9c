import logging
from typing import Dict, Optional, Tuple

from ..errors import DiscrepancyError
from ..geometry import ToricSet, is_complete_intersection
from ..gf import rank
from ..interfaces import CodeParameters
from .evaluation import evaluation_matrix, min_distance_oracle
from .formulas import bipartite_params, dimension_torus_formula, min_distance_p1_p2, min_distance_torus_formula

logger = logging.getLogger(__name__)


def _closed_forms(x: ToricSet, d: int, bipartite_shape: Optional[Tuple[int, int]]) -> Dict[str, int]:
    q = x.field.q
    found: Dict[str, int] = {}
    if q < 3 or d < 1:
        return found
    if is_complete_intersection(x):
        found["k_torus"] = dimension_torus_formula(q, x.s, d)
        found["delta_torus"] = min_distance_torus_formula(q, x.s, d)
        if x.s in (2, 3):
            found["delta_line_plane"] = min_distance_p1_p2(q, x.s, d)
    if bipartite_shape is not None:
        product = bipartite_params(q, bipartite_shape[0], bipartite_shape[1], d)
        found["n_bipartite"] = product.n
        found["k_bipartite"] = product.k
        found["delta_bipartite"] = product.delta
    return found


def code_params(x: ToricSet, d: int, cap: Optional[int] = None, codeword_cap: Optional[int] = None,
                workers: Optional[int] = None,
                bipartite_shape: Optional[Tuple[int, int]] = None) -> CodeParameters:
    """(n, k, delta) of C_X(d) by rank and exhaustive oracle, checked against every closed form that applies.

    `bipartite_shape` = (k, l) states that X comes from K_{k,l}; the product
    formulas are then compared as well. Any disagreement raises DiscrepancyError.
    """
    m = evaluation_matrix(x, d, cap)
    n = len(x)
    k = rank(x.field, m.entries)
    delta = min_distance_oracle(m, codeword_cap, workers)
    values = {"q": x.field.q, "s": x.s, "d": d, "n": n, "k": k, "delta_oracle": delta}
    if delta > n - k + 1:
        raise DiscrepancyError(f"delta={delta} exceeds the Singleton bound n-k+1={n - k + 1}", values)

    closed = _closed_forms(x, d, bipartite_shape)
    values.update(closed)
    mismatched = sorted(
        name for name, value in closed.items()
        if value != {"n": n, "k": k, "delta": delta}[name.split("_")[0]]
    )
    if mismatched:
        logger.error("closed forms disagree with the oracle: %s", values)
        raise DiscrepancyError(f"closed formulas disagree with the oracle on {', '.join(mismatched)}", values)

    k_formula = closed.get("k_torus", closed.get("k_bipartite"))
    delta_formula = closed.get("delta_torus", closed.get("delta_bipartite"))
    logger.info("C_X(%d) over GF(%d), s=%d: n=%d k=%d delta=%d", d, x.field.q, x.s, n, k, delta)
    return CodeParameters(
        q=x.field.q, s=x.s, d=d, n=n, k=k, delta=delta,
        source="both-agree" if closed else "oracle",
        k_formula=k_formula, delta_formula=delta_formula, delta_oracle=delta,
    )
