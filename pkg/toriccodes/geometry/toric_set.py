"""Projective tori and algebraic toric sets over GF(q).

Points are stored as rows of encodings with the last coordinate scaled to 1;
the rows are deduplicated and sorted lexicographically, so every toric set has
one canonical form.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..errors import PreconditionError, check_cap
from ..gf import FiniteField
from .clutter import ExponentVector

logger = logging.getLogger(__name__)

CHUNK = 1 << 18


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    coords: Tuple[int, ...]

    @classmethod
    def normalize(cls, field: FiniteField, coords: Sequence[int]) -> "ProjectivePoint":
        if any(int(c) == 0 for c in coords):
            raise PreconditionError("toric points have all coordinates nonzero")
        last = field.inv(int(coords[-1]))
        return cls(tuple(field.mul(int(c), last) for c in coords))


class ToricSet:
    def __init__(self, field: FiniteField, s: int, points: np.ndarray):
        self.field = field
        self.s = s
        self.array = np.unique(np.asarray(points, dtype=np.int64).reshape(-1, s), axis=0)
        self.array.setflags(write=False)

    def __len__(self) -> int:
        return int(self.array.shape[0])

    @property
    def points(self) -> Tuple[ProjectivePoint, ...]:
        return tuple(ProjectivePoint(tuple(int(c) for c in row)) for row in self.array)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ToricSet) and self.field == other.field and self.s == other.s
                and np.array_equal(self.array, other.array))

    def __repr__(self) -> str:
        return f"ToricSet(q={self.field.q}, s={self.s}, size={len(self)})"

    def contains(self, point: Sequence[int]) -> bool:
        target = np.array(ProjectivePoint.normalize(self.field, point).coords, dtype=np.int64)
        return bool(np.any(np.all(self.array == target, axis=1)))

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> ProjectivePoint:
        """Componentwise product; X is a group under it."""
        return ProjectivePoint.normalize(self.field, [self.field.mul(int(x), int(y)) for x, y in zip(a, b)])

    def logs(self) -> np.ndarray:
        return self.field.log_table[self.array]

    def to_json(self) -> Dict:
        return {"q": self.field.q, "s": self.s, "points": self.array.tolist()}


def _index_chunks(total: int, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    for start in range(0, total, chunk):
        yield np.arange(start, min(start + chunk, total), dtype=np.int64)


def torus_exponents(indices: np.ndarray, base: int, length: int) -> np.ndarray:
    """Mixed-radix digits of the indices, most significant first."""
    if length == 0:
        return np.zeros((indices.size, 0), dtype=np.int64)
    weights = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // weights) % base


def projective_torus(field: FiniteField, s: int, cap: Optional[int] = None) -> ToricSet:
    if s < 2:
        raise PreconditionError(f"the projective torus needs s >= 2, got {s}")
    size = (field.q - 1) ** (s - 1)
    check_cap("projective torus points", size, cap if cap is not None else get_settings().point_cap)
    digits = torus_exponents(np.arange(size, dtype=np.int64), field.q - 1, s - 1)
    # sorting nonzero encodings ascending, so digits + 1 is already lexicographic
    points = np.hstack([digits + 1, np.ones((size, 1), dtype=np.int64)])
    logger.debug("projective torus GF(%d) s=%d: %d points", field.q, s, size)
    return ToricSet(field, s, points)


def toric_set_from_exponents(field: FiniteField, vs: Sequence[ExponentVector],
                             cap: Optional[int] = None) -> ToricSet:
    if not vs:
        raise PreconditionError("a toric set needs at least one exponent vector")
    lengths = {len(v) for v in vs}
    if len(lengths) != 1:
        raise PreconditionError(f"exponent vectors have inconsistent lengths {sorted(lengths)}")
    s, n = len(vs), lengths.pop()
    if s < 2:
        raise PreconditionError(f"a toric set in P^(s-1) needs s >= 2, got {s}")
    if n < 1 or any(int(e) < 0 for v in vs for e in v):
        raise PreconditionError("exponent vectors need n >= 1 nonnegative entries")
    order = field.q - 1
    total = order ** n
    check_cap("torus enumeration (q-1)^n", total, cap if cap is not None else get_settings().point_cap)
    exponents = np.array(vs, dtype=np.int64)
    found: List[np.ndarray] = []
    for indices in _index_chunks(total):
        logs = (torus_exponents(indices, order, n) @ exponents.T) % order
        normalized = (logs - logs[:, -1:]) % order
        found.append(np.unique(field.exp_table[normalized], axis=0))
    x = ToricSet(field, s, np.vstack(found))
    logger.debug("toric set GF(%d) from %d monomials in %d variables: %d points", field.q, s, n, len(x))
    return x


def is_complete_intersection(x: ToricSet) -> bool:
    """Complete-intersection test through the point set: X equals the projective torus.

    X is always contained in the torus, so comparing sizes decides equality. The
    equivalence with the ideal property is established for clutter
    parameterizations (0/1 exponent vectors); for other exponents the result is
    only the point-set statement X = T.
    """
    return len(x) == (x.field.q - 1) ** (x.s - 1)
