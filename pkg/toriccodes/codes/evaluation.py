"""Evaluation matrices of parameterized codes and their exact parameters.

Rows are indexed by the degree-d monomials (graded-lex descending), columns by
the points of X in canonical order, and every entry is m(P) / t1(P)^d.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..errors import PreconditionError, check_cap
from ..geometry import ToricSet
from ..gf import FiniteField, null_space, rank, row_echelon
from ..polyeval import Exponents, SparsePolynomial, monomials_of_degree

logger = logging.getLogger(__name__)

SPAN_TABLE_LIMIT = 1 << 14


@dataclass(frozen=True)
class EvaluationMatrix:
    field: FiniteField
    d: int
    monomials: Tuple[Exponents, ...]
    points: ToricSet
    entries: np.ndarray

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def to_text(self) -> str:
        return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in self.entries)

    def to_json(self) -> Dict:
        return {"q": self.field.q, "n": len(self.points), "k_rows": len(self.monomials),
                "entries": self.entries.tolist()}


def evaluation_matrix(x: ToricSet, d: int, cap: Optional[int] = None) -> EvaluationMatrix:
    if d < 0:
        raise PreconditionError(f"degree must be nonnegative, got {d}")
    rows = comb(x.s - 1 + d, x.s - 1)
    check_cap("evaluation matrix cells", rows * len(x), cap if cap is not None else get_settings().point_cap)
    monomials = monomials_of_degree(x.s, d)
    exps = np.array(monomials, dtype=np.int64)
    logs = x.logs()
    order = x.field.q - 1
    entries = x.field.exp_table[(exps @ logs.T - d * logs[:, 0][None, :]) % order]
    entries.setflags(write=False)
    return EvaluationMatrix(x.field, d, tuple(monomials), x, entries)


def dimension(x: ToricSet, d: int, cap: Optional[int] = None) -> int:
    """H_X(d), the rank of the evaluation matrix."""
    m = evaluation_matrix(x, d, cap)
    value = rank(x.field, m.entries)
    logger.debug("H_X(%d) = %d for %r", d, value, x)
    return value


def vanishing_forms_basis(x: ToricSet, d: int, cap: Optional[int] = None) -> List[SparsePolynomial]:
    """A basis of the degree-d forms vanishing on X (the kernel of evaluation)."""
    m = evaluation_matrix(x, d, cap)
    kernel = null_space(x.field, m.entries.T)
    return [SparsePolynomial(x.field, x.s, {e: int(c) for e, c in zip(m.monomials, row) if c})
            for row in kernel]


def generator_basis(m: EvaluationMatrix) -> np.ndarray:
    reduced, pivots = row_echelon(m.field, m.entries)
    return reduced[: len(pivots)]


def span_table(field: FiniteField, rows: np.ndarray) -> np.ndarray:
    """Every linear combination of the rows; row 0 is the zero vector."""
    table = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows:
        table = np.vstack([field.add(table, field.mul(c, row)[None, :]) for c in range(field.q)])
    return table


def _min_weight(field: FiniteField, low: np.ndarray, high: np.ndarray, indices: range) -> int:
    best = low.shape[1] + 1
    for h in indices:
        weights = np.count_nonzero(field.add(low, high[h][None, :]), axis=1)
        if h == 0:
            weights[0] = best
        best = min(best, int(weights.min()))
    return best


def min_distance_oracle(m: EvaluationMatrix, cap: Optional[int] = None, workers: Optional[int] = None) -> int:
    """Exact minimum distance by enumerating the whole message space."""
    settings = get_settings()
    basis = generator_basis(m)
    k, q = basis.shape[0], m.field.q
    check_cap("codeword enumeration q^k - 1", q ** k - 1, cap if cap is not None else settings.codeword_cap)
    split = 0
    while split < k and q ** (split + 1) <= SPAN_TABLE_LIMIT:
        split += 1
    split = max(split, 1)
    low = span_table(m.field, basis[:split])
    high = span_table(m.field, basis[split:])
    workers = workers or settings.workers
    logger.debug("oracle: q=%d k=%d n=%d, %d x %d span tables, %d workers",
                 q, k, basis.shape[1], low.shape[0], high.shape[0], workers)
    if workers <= 1 or high.shape[0] < 2:
        return _min_weight(m.field, low, high, range(high.shape[0]))
    parts = [range(i, high.shape[0], workers) for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return min(executor.map(lambda part: _min_weight(m.field, low, high, part), parts))
