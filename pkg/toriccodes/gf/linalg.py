import logging
from typing import List, Tuple

import numpy as np

from .field import FiniteField

logger = logging.getLogger(__name__)


def row_echelon(field: FiniteField, matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(q) and the list of pivot columns."""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("row_echelon expects a 2-d matrix")
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        a[r, :] = field.mul(field.inv(int(a[r, c])), a[r, :])
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            factors = a[others, c][:, None]
            a[others, :] = field.sub(a[others, :], field.mul(factors, a[r, :][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: FiniteField, matrix: np.ndarray) -> int:
    a = np.asarray(matrix)
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(row_echelon(field, a)[1])


def null_space(field: FiniteField, matrix: np.ndarray) -> np.ndarray:
    """Basis of {x : matrix @ x = 0} as the rows of the returned array."""
    a = np.asarray(matrix, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_echelon(field, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = field.neg(int(reduced[row, f]))
    return basis
