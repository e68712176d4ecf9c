"""Closed formulas for codes over projective tori and complete bipartite clutters.

The torus formulas accept s = 1 (a single point, H = 1, delta = 1) so that
bipartite factors with one vertex on a side need no special case.
"""
from math import comb
from typing import List, Tuple

from ..errors import PreconditionError
from ..interfaces import CodeParameters, DegreeDecomposition


def _require_q3(q: int) -> None:
    if q < 3:
        raise PreconditionError(f"q < 3: the degree decomposition needs 1 <= ell <= q-2, got q={q}")


def decompose_degree(d: int, q: int) -> DegreeDecomposition:
    _require_q3(q)
    if d < 1:
        raise PreconditionError(f"degree decomposition needs d >= 1, got {d}")
    ell = (d - 1) % (q - 2) + 1
    return DegreeDecomposition(d=d, q=q, k=(d - ell) // (q - 2), ell=ell)


def min_distance_torus_formula(q: int, s: int, d: int) -> int:
    _require_q3(q)
    if s < 1 or d < 1:
        raise PreconditionError(f"torus minimum distance needs s >= 1 and d >= 1, got s={s}, d={d}")
    if d >= (q - 2) * (s - 1):
        return 1
    dec = decompose_degree(d, q)
    return (q - 1) ** (s - dec.k - 2) * (q - 1 - dec.ell)


def dimension_torus_formula(q: int, s: int, d: int) -> int:
    """Alternating binomial sum for H_T(d)."""
    if q < 2 or s < 1 or d < 0:
        raise PreconditionError(f"torus dimension needs q >= 2, s >= 1, d >= 0, got q={q}, s={s}, d={d}")
    return sum((-1) ** j * comb(s - 1, j) * comb(s - 1 + d - j * (q - 1), s - 1)
               for j in range(d // (q - 1) + 1))


def min_distance_p1_p2(q: int, s: int, d: int) -> int:
    """Piecewise minimum distance on the tori of the projective line and plane."""
    if s not in (2, 3):
        raise PreconditionError(f"the line/plane formulas need s in {{2, 3}}, got {s}")
    _require_q3(q)
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")
    if s == 2:
        return q - 1 - d if d <= q - 3 else 1
    if d <= q - 2:
        return (q - 1) ** 2 - d * (q - 1)
    if d <= 2 * q - 5:
        return 2 * q - d - 3
    return 1


def max_zeros_formula(q: int, s: int, d: int) -> int:
    """Largest number of torus zeros of a degree-d form not vanishing on the torus."""
    _require_q3(q)
    if not 1 <= d <= (q - 2) * (s - 1) - 1:
        raise PreconditionError(f"closed zero count needs 1 <= d <= (q-2)(s-1)-1, got d={d}")
    dec = decompose_degree(d, q)
    return (q - 1) ** (s - dec.k - 2) * ((q - 1) ** (dec.k + 1) - (q - 1) + dec.ell)


def bipartite_params(q: int, k: int, l: int, d: int) -> CodeParameters:
    """Parameters of the code of K_{k,l} as products of the two torus factors."""
    _require_q3(q)
    if k < 1 or l < 1:
        raise PreconditionError(f"K_{{{k},{l}}} needs k, l >= 1")
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")
    dim = dimension_torus_formula(q, l, d) * dimension_torus_formula(q, k, d)
    delta = min_distance_torus_formula(q, l, d) * min_distance_torus_formula(q, k, d)
    return CodeParameters(q=q, s=k * l, d=d, n=(q - 1) ** (k + l - 2), k=dim, delta=delta,
                          source="formula", k_formula=dim, delta_formula=delta)


def decomposition_monotone(q: int, s: int) -> List[Tuple[int, int]]:
    """Pairs d' <= d <= (s-1)(q-2) breaking the monotonicity of the decomposition.

    For a valid pair k' <= k and
    -(q-1)^(s-k') + ell'(q-1)^(s-k'-1) <= -(q-1)^(s-k) + ell(q-1)^(s-k-1).
    An empty list means the inequality holds on the whole range.
    """
    top = (s - 1) * (q - 2)
    decs = [decompose_degree(d, q) for d in range(1, top + 1)]
    violations: List[Tuple[int, int]] = []
    for j, hi in enumerate(decs):
        if hi.k > s - 1:
            continue
        rhs = -(q - 1) ** (s - hi.k) + hi.ell * (q - 1) ** (s - hi.k - 1)
        for lo in decs[: j + 1]:
            lhs = -(q - 1) ** (s - lo.k) + lo.ell * (q - 1) ** (s - lo.k - 1)
            if lo.k > hi.k or lhs > rhs:
                violations.append((lo.d, hi.d))
    return violations
