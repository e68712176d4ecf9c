"""Zero-count bounds for polynomials over GF(q) and the extremal form that attains them."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import numpy as np

from .codes import evaluation_matrix, max_zeros_formula, min_distance_oracle
from .codes.formulas import decompose_degree
from .config import get_settings
from .errors import BoundViolationError, DiscrepancyError, FieldMismatchError, PreconditionError
from .geometry import projective_torus
from .gf import FiniteField, field_for_order
from .interfaces import BoundCheck, BoundReport, MaxZeroReport, SweepReport
from .polyeval import (
    SparsePolynomial,
    constant,
    count_nontrivial_zeros,
    count_zeros_affine_space,
    count_zeros_affine_torus,
    count_zeros_projective,
    is_homogeneous,
    monomials_of_degree,
    random_polynomial,
    torus_canonical_form,
    torus_ideal_generators,
    variable,
)

logger = logging.getLogger(__name__)


def refined_bound(q: int, s: int, d: int) -> Optional[int]:
    """Torus zero bound for per-variable degrees <= q-2; None outside 0 <= k <= s-1."""
    if q < 3 or d < 1 or s < 1:
        return None
    dec = decompose_degree(d, q)
    if dec.k > s - 1:
        return None
    return (q - 1) ** (s - dec.k - 1) * ((q - 1) ** (dec.k + 1) - (q - 1) + dec.ell)


def zero_bounds(d: int, q: int, s: int) -> BoundReport:
    if d < 1 or q < 2 or s < 1:
        raise PreconditionError(f"zero bounds need d >= 1, q >= 2, s >= 1, got d={d}, q={q}, s={s}")
    refined = refined_bound(q, s, d)
    dec = decompose_degree(d, q) if q >= 3 else None
    return BoundReport(
        q=q, s=s, d=d,
        schmidt=d * q ** (s - 1),
        schmidt_homogeneous=d * (q ** (s - 1) - 1),
        torus=d * (q - 1) ** (s - 1),
        refined=refined,
        refined_applicable=refined is not None,
        k=dec.k if dec else None,
        ell=dec.ell if dec else None,
    )


def verify_bound_on(g: SparsePolynomial, field: Optional[FiniteField] = None, cap: Optional[int] = None) -> BoundCheck:
    """Count the zeros of g exhaustively and compare them with every bound that applies.

    The refined bound is applied to the torus canonical form of g, whose
    per-variable degrees are at most q-2 and whose torus zeros are those of g.
    """
    field = field or g.field
    if field != g.field:
        raise FieldMismatchError(f"polynomial over GF({g.field.q}) checked over GF({field.q})")
    if g.is_zero():
        raise PreconditionError("bounds apply to nonzero polynomials")
    if g.nvars < 1:
        raise PreconditionError("bounds need at least one variable")
    q, s, d = field.q, g.nvars, g.degree
    torus_zeros = count_zeros_affine_torus(g, cap=cap)
    affine_zeros = count_zeros_affine_space(g, cap)
    margins = {
        "schmidt": d * q ** (s - 1) - affine_zeros,
        "torus": d * (q - 1) ** (s - 1) - torus_zeros,
    }
    nontrivial = None
    homogeneous, _ = is_homogeneous(g)
    if homogeneous:
        nontrivial = count_nontrivial_zeros(g, cap)
        margins["schmidt_homogeneous"] = d * (q ** (s - 1) - 1) - nontrivial

    canonical = torus_canonical_form(g)
    canonical_degree = canonical.degree
    if canonical_degree:
        refined = refined_bound(q, s, canonical_degree)
        if refined is not None:
            margins["refined"] = refined - torus_zeros

    check = BoundCheck(polynomial=g.to_text(), q=q, s=s, degree=d, canonical_degree=canonical_degree,
                       torus_zeros=torus_zeros, affine_zeros=affine_zeros, nontrivial_zeros=nontrivial,
                       margins=margins)
    violated = sorted(name for name, margin in margins.items() if margin < 0)
    if violated:
        raise BoundViolationError(f"zero count exceeds the {', '.join(violated)} bound", check.model_dump())
    return check


def extremal_polynomial(field: FiniteField, s: int, d: int) -> SparsePolynomial:
    """F = f_1 ... f_k g_ell, a degree-d form with the most zeros on the projective torus.

    f_j = prod_{i=1}^{q-2} (beta^i t1 - t_{j+1}) and
    g_ell = prod_{i=1}^{ell} (beta^i t1 - t_{k+2}), with beta the primitive element.
    """
    q = field.q
    if q < 3:
        raise PreconditionError(f"q < 3: no extremal construction over GF({q})")
    if not 1 <= d <= (q - 2) * (s - 1) - 1:
        raise PreconditionError(f"extremal construction needs 1 <= d <= (q-2)(s-1)-1, got d={d}")
    dec = decompose_degree(d, q)
    beta = field.primitive_encoding
    t1 = variable(field, s, 0)

    def linear_factors(target: int, count: int) -> SparsePolynomial:
        product = constant(field, s, 1)
        for i in range(1, count + 1):
            product = product * (t1.scale(field.pow(beta, i)) - variable(field, s, target))
        return product

    form = linear_factors(dec.k + 1, dec.ell)
    for j in range(1, dec.k + 1):
        form = form * linear_factors(j, q - 2)
    return form


def max_zero_consistency(q: int, s: int, d: int, cap: Optional[int] = None,
                         codeword_cap: Optional[int] = None) -> MaxZeroReport:
    """Check M = |X| - delta_d three ways: extremal form, oracle and closed expression."""
    field = field_for_order(q)
    torus = projective_torus(field, s, cap)
    form = extremal_polynomial(field, s, d)
    extremal = count_zeros_projective(form, torus)
    oracle = len(torus) - min_distance_oracle(evaluation_matrix(torus, d, cap), codeword_cap)
    formula = max_zeros_formula(q, s, d)
    report = MaxZeroReport(q=q, s=s, d=d, size=len(torus), extremal_zeros=extremal,
                           oracle_zeros=oracle, formula_zeros=formula, polynomial=form.to_text())
    if not extremal == oracle == formula:
        raise DiscrepancyError("maximum zero counts disagree", report.model_dump())
    return report


def _homogeneous_part(g: SparsePolynomial) -> SparsePolynomial:
    return SparsePolynomial(g.field, g.nvars, {e: c for e, c in g.terms.items() if sum(e) == g.degree})


def _all_ones(field: FiniteField, s: int) -> SparsePolynomial:
    top = max(field.q - 2, 1)
    return SparsePolynomial(field, s, {e: 1 for d in range(top + 1) for e in monomials_of_degree(s, d)
                                       if max(e, default=0) <= top})


def sweep_polynomials(field: FiniteField, s: int, samples: int, rng: np.random.Generator) -> List[SparsePolynomial]:
    q = field.q
    cases = [_all_ones(field, s)] + torus_ideal_generators(field, s)
    for i in range(samples):
        restricted = q >= 3 and i % 3 != 1
        top = s * (q - 2) if restricted else 2 * (q - 1)
        g = random_polynomial(field, s, int(rng.integers(1, top + 1)), rng,
                              max_var_degree=q - 2 if restricted else None)
        cases.append(_homogeneous_part(g) if i % 3 == 2 else g)
    return cases


def bound_sweep(q: int, s: int, samples: Optional[int] = None, seed: Optional[int] = None,
                cap: Optional[int] = None, workers: Optional[int] = None) -> SweepReport:
    if s < 1:
        raise PreconditionError(f"bound sweeps need s >= 1, got {s}")
    settings = get_settings()
    samples = settings.sweep_samples if samples is None else samples
    seed = settings.seed if seed is None else seed
    workers = workers or settings.workers
    field = field_for_order(q)
    cases = sweep_polynomials(field, s, samples, np.random.default_rng(seed))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        checks = list(executor.map(lambda g: verify_bound_on(g, field, cap), cases))
    min_margins: Dict[str, int] = {}
    tight: Dict[str, int] = {}
    for check in checks:
        for name, margin in check.margins.items():
            min_margins[name] = min(margin, min_margins.get(name, margin))
            tight[name] = tight.get(name, 0) + (margin == 0)
    logger.info("bound sweep GF(%d) s=%d: %d cases, min margins %s", q, s, len(checks), min_margins)
    return SweepReport(q=q, s=s, seed=seed, samples=samples, cases=len(checks),
                       min_margins=min_margins, tight=tight)
