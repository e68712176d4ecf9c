"""Named cross-checks between closed formulas, exhaustive oracles and structural properties.

Each check returns a CheckResult: a failure carries the compared values, a
skip carries the violated precondition (for example "q < 3").
"""
import functools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Tuple

from ..bounds import bound_sweep, max_zero_consistency
from ..codes import (
    decompose_degree,
    decomposition_monotone,
    dimension,
    dimension_torus_formula,
    evaluation_matrix,
    min_distance_oracle,
    min_distance_p1_p2,
    min_distance_torus_formula,
)
from ..codes.service import code_params
from ..errors import DiscrepancyError, PreconditionError
from ..geometry import (
    Clutter,
    characteristic_vectors,
    clutter_validate,
    complete_bipartite_clutter,
    projective_torus,
    singleton_clutter,
    toric_set_from_exponents,
)
from ..gf import field_for_order, rank
from ..interfaces import CheckResult, RegularityReport
from ..invariants import check_regularity_bound, ci_hilbert_series, ci_regularity, hilbert_numerator, hilbert_profile

logger = logging.getLogger(__name__)

ORACLE_CACHE_SIZE = 512
CLUTTER_CACHE_SIZE = 64


@dataclass(frozen=True)
class VerifyContext:
    cap_points: Optional[int] = None
    cap_codewords: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    inject_fault: bool = False


def check(name: str, theorem: str) -> Callable:
    """Register a cross-check under `name`; `theorem` is the statement a failure refutes."""
    def wrap(fn: Callable[..., Dict[str, Any]]) -> Callable[..., CheckResult]:
        @functools.wraps(fn)
        def run(ctx: VerifyContext, **params) -> CheckResult:
            try:
                values = fn(ctx, **params)
            except DiscrepancyError as e:
                logger.error("%s %s failed (%s): %s", name, params, theorem, e.message)
                details = e.details if isinstance(e.details, dict) else {"details": e.details}
                return CheckResult(check=name, theorem=theorem, params=params, status="fail", reason=e.message,
                                   values=details)
            except PreconditionError as e:
                logger.info("%s %s skipped: %s", name, params, e.message)
                return CheckResult(check=name, theorem=theorem, params=params, status="skip", reason=e.message)
            logger.info("%s %s passed", name, params)
            return CheckResult(check=name, theorem=theorem, params=params, status="pass", values=values or {})
        run.check_name = name
        run.theorem = theorem
        return run
    return wrap


def _expect(condition: bool, message: str, values: Dict[str, Any]) -> Dict[str, Any]:
    if not condition:
        raise DiscrepancyError(message, values)
    return values


@lru_cache(maxsize=ORACLE_CACHE_SIZE)
def _torus_code(q: int, s: int, d: int, cap_points: Optional[int], cap_codewords: Optional[int]) -> Tuple[int, int, int]:
    x = projective_torus(field_for_order(q), s, cap_points)
    m = evaluation_matrix(x, d, cap_points)
    return len(x), rank(x.field, m.entries), min_distance_oracle(m, cap_codewords)


def _oracle(ctx: VerifyContext, q: int, s: int, d: int) -> Tuple[int, int, int]:
    return _torus_code(q, s, d, ctx.cap_points, ctx.cap_codewords)


def _off_by_one_formula(q: int, s: int, d: int) -> int:
    """The minimum-distance formula with ell shifted by one, used by --inject-fault."""
    if d >= (q - 2) * (s - 1):
        return min_distance_torus_formula(q, s, d)
    dec = decompose_degree(d, q)
    return (q - 1) ** (s - dec.k - 2) * (q - 1 - (dec.ell + 1))


@check("torus_min_distance_formula", "Theorem: minimum distance of the projective torus code")
def torus_min_distance(ctx: VerifyContext, q: int, s: int, d: int) -> Dict[str, Any]:
    formula = (_off_by_one_formula if ctx.inject_fault else min_distance_torus_formula)(q, s, d)
    n, k, delta = _oracle(ctx, q, s, d)
    dec = decompose_degree(d, q)
    values = {"n": n, "k": k, "delta_oracle": delta, "delta_formula": formula, "k_dec": dec.k, "ell": dec.ell}
    return _expect(delta == formula, "minimum distance formula disagrees with the oracle", values)


@check("torus_dimension_formula", "Lemma: Hilbert function of the projective torus")
def torus_dimension(ctx: VerifyContext, q: int, s: int, d: int) -> Dict[str, Any]:
    x = projective_torus(field_for_order(q), s, ctx.cap_points)
    values = {"rank": dimension(x, d, ctx.cap_points), "formula": dimension_torus_formula(q, s, d)}
    return _expect(values["rank"] == values["formula"], "dimension formula disagrees with the rank", values)


@check("line_plane_formulas", "Proposition: minimum distance on the tori of the projective line and plane")
def line_plane(ctx: VerifyContext, q: int, s: int, d: int) -> Dict[str, Any]:
    piecewise = min_distance_p1_p2(q, s, d)
    general = min_distance_torus_formula(q, s, d)
    n, k, delta = _oracle(ctx, q, s, d)
    values = {"piecewise": piecewise, "general": general, "delta_oracle": delta, "n": n, "k": k}
    _expect(piecewise == general == delta, "line/plane formulas disagree", values)
    if s == 2 and d <= q - 2:
        values["mds"] = delta == n - k + 1
        _expect(values["mds"], "torus code on the line is not MDS", values)
    return values


@check("extremal_tightness", "Theorem: maximum number of torus zeros of a non-vanishing form")
def extremal_tightness(ctx: VerifyContext, q: int, s: int, d: int) -> Dict[str, Any]:
    report = max_zero_consistency(q, s, d, ctx.cap_points, ctx.cap_codewords)
    return report.model_dump()


@check("regularity_plateau", "Theorem: minimum distance is 1 from the regularity index on")
def regularity_plateau(ctx: VerifyContext, q: int, s: int, d: int) -> Dict[str, Any]:
    reg = ci_regularity(q, s)
    if d < reg:
        raise PreconditionError(f"d={d} below the regularity {reg}")
    _, _, delta = _oracle(ctx, q, s, d)
    return _expect(delta == 1, "minimum distance above 1 past the regularity", {"regularity": reg, "delta": delta})


@check("min_distance_decrease", "Proposition: minimum distance decreases strictly until it reaches 1")
def min_distance_decrease(ctx: VerifyContext, q: int, s: int) -> Dict[str, Any]:
    deltas: Dict[int, int] = {}
    for d in range(1, ci_regularity(q, s) + 3):
        try:
            deltas[d] = _oracle(ctx, q, s, d)[2]
        except PreconditionError:
            continue
    pairs = [(d, d + 1) for d in deltas if d + 1 in deltas]
    if not pairs:
        raise PreconditionError("no two consecutive degrees within the caps")
    values = {"deltas": {str(d): v for d, v in sorted(deltas.items())}}
    for a, b in pairs:
        if deltas[a] > 1:
            _expect(deltas[a] > deltas[b], f"delta_{a} > 1 but delta_{a + 1} is not smaller", values)
        else:
            _expect(deltas[b] == 1, f"delta_{a} = 1 but delta_{a + 1} != 1", values)
    return values


@check("hilbert_monotone", "Lemma: the Hilbert function increases to |X| and stays there")
def hilbert_monotone(ctx: VerifyContext, q: int, s: int) -> Dict[str, Any]:
    x = projective_torus(field_for_order(q), s, ctx.cap_points)
    profile = hilbert_profile(x, cap=ctx.cap_points)
    formulas = [dimension_torus_formula(q, s, d) for d in range(len(profile.values))]
    values = {"values": profile.values, "formulas": formulas, "size": len(x)}
    _expect(all(h >= 0 for h in hilbert_numerator(profile)), "Hilbert function decreases", values)
    _expect(profile.values[-1] == len(x), "Hilbert function does not stabilize at |X|", values)
    return _expect(profile.values == formulas, "Hilbert function differs from the dimension formula", values)


@check("torus_invariants", "Theorem: Hilbert series and regularity of the projective torus")
def torus_invariants(ctx: VerifyContext, q: int, s: int) -> Dict[str, Any]:
    x = projective_torus(field_for_order(q), s, ctx.cap_points)
    profile = hilbert_profile(x, cap=ctx.cap_points)
    series = ci_hilbert_series(q, s)
    values = {
        "size": len(x), "regularity": profile.regularity, "ci_regularity": ci_regularity(q, s),
        "numerator": hilbert_numerator(profile), "ci_numerator": series.numerator,
    }
    _expect(len(x) == (q - 1) ** (s - 1) == sum(series.numerator), "torus size mismatch", values)
    _expect(profile.regularity == values["ci_regularity"] == series.regularity, "regularity mismatch", values)
    return _expect(values["numerator"] == series.numerator, "Hilbert numerator mismatch", values)


@check("zero_count_bounds", "Theorem: zero-count bounds on affine space and the affine torus")
def zero_count_bounds(ctx: VerifyContext, q: int, s: int) -> Dict[str, Any]:
    return bound_sweep(q, s, ctx.samples, ctx.seed, ctx.cap_points).model_dump()


@check("decomposition_monotone", "Lemma: monotonicity of the degree decomposition")
def decomposition_monotonicity(ctx: VerifyContext, q: int, s: int) -> Dict[str, Any]:
    violations = decomposition_monotone(q, s)
    return _expect(not violations, "degree decomposition is not monotone",
                   {"violations": [list(pair) for pair in violations]})


@check("bipartite_product", "Theorem: parameters of codes over complete bipartite graphs")
def bipartite_product(ctx: VerifyContext, q: int, k: int, l: int, d: int) -> Dict[str, Any]:
    x = _clutter_set(q, complete_bipartite_clutter(k, l), ctx.cap_points)
    return code_params(x, d, ctx.cap_points, ctx.cap_codewords, bipartite_shape=(k, l)).report()


CLUTTERS: Dict[str, Callable[[int], Clutter]] = {
    "singleton": singleton_clutter,
    "triangle": lambda _s: clutter_validate(3, [(1, 2), (2, 3), (1, 3)]),
    "K22": lambda _s: complete_bipartite_clutter(2, 2),
    "K23": lambda _s: complete_bipartite_clutter(2, 3),
}


def _clutter_set(q: int, clutter: Clutter, cap: Optional[int]):
    return toric_set_from_exponents(field_for_order(q), characteristic_vectors(clutter), cap)


@lru_cache(maxsize=CLUTTER_CACHE_SIZE)
def _clutter_report(q: int, name: str, s: int, cap: Optional[int]) -> RegularityReport:
    return check_regularity_bound(_clutter_set(q, CLUTTERS[name](s), cap), cap)


@check("complete_intersection", "Theorem: X is a complete intersection iff it is the projective torus")
def complete_intersection(ctx: VerifyContext, q: int, clutter: str, s: int) -> Dict[str, Any]:
    report = _clutter_report(q, clutter, s, ctx.cap_points)
    expected = clutter in ("singleton", "triangle") or q == 2
    values = report.model_dump()
    values["expected_ci"] = expected
    _expect(report.ci == expected, "complete-intersection test gives the wrong answer", values)
    if report.ci:
        _expect(report.equality, "complete intersection below the regularity bound", values)
    return values


@check("regularity_bound", "Theorem: regularity of clutter-parameterized sets is at most (q-2)(s-1)")
def regularity_bound(ctx: VerifyContext, q: int, clutter: str, s: int) -> Dict[str, Any]:
    report = _clutter_report(q, clutter, s, ctx.cap_points)
    return _expect(report.regularity <= report.bound, "regularity above (q-2)(s-1)", report.model_dump())
