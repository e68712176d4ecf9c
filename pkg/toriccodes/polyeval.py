"""Sparse multivariate polynomials over GF(q) and exhaustive zero counting."""
import logging
import re
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .config import get_settings
from .errors import PreconditionError, check_cap
from .geometry.toric_set import CHUNK, ToricSet, torus_exponents
from .gf import FieldElement, FiniteField

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]

_TERM = re.compile(r"^(?:(\d+))?((?:\*?t\d+(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"t(\d+)(?:\^(\d+))?")
_BODY = re.compile(r"[+-]?[^+-]+(?:[+-][^+-]+)*")


def monomials_of_degree(nvars: int, d: int) -> List[Exponents]:
    """Exponent vectors of total degree d, graded-lex descending with t1 > ... > tn."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    result: List[Exponents] = []
    for first in range(d, -1, -1):
        result.extend((first,) + rest for rest in monomials_of_degree(nvars - 1, d - first))
    return result


class SparsePolynomial:
    def __init__(self, field: FiniteField, nvars: int, terms: Optional[Mapping[Sequence[int], int]] = None):
        self.field = field
        self.nvars = nvars
        merged: Dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != nvars:
                raise PreconditionError(f"exponent vector {list(key)} does not have {nvars} entries")
            if any(e < 0 for e in key):
                raise PreconditionError(f"negative exponent in {list(key)}")
            merged[key] = field.add(merged.get(key, 0), int(coeff))
        self._terms = {k: v for k, v in sorted(merged.items(), key=_term_order) if v != 0}

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Optional[int]:
        """Total degree; None marks the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def var_degrees(self) -> Tuple[int, ...]:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(int(v) for v in np.max(np.array(list(self._terms), dtype=np.int64), axis=0))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SparsePolynomial) and self.field == other.field
                and self.nvars == other.nvars and self._terms == other._terms)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.to_text()!r})"

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = self.field.add(terms.get(exps, 0), coeff)
        return SparsePolynomial(self.field, self.nvars, terms)

    def __neg__(self) -> "SparsePolynomial":
        return self.scale(self.field.neg(1))

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        terms: Dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                terms[key] = self.field.add(terms.get(key, 0), self.field.mul(ca, cb))
        return SparsePolynomial(self.field, self.nvars, terms)

    def scale(self, c: int) -> "SparsePolynomial":
        return SparsePolynomial(self.field, self.nvars,
                                {e: self.field.mul(int(c), v) for e, v in self._terms.items()})

    def _check(self, other: "SparsePolynomial") -> None:
        if other.field != self.field or other.nvars != self.nvars:
            raise PreconditionError("polynomials live in different rings")

    # -- evaluation ------------------------------------------------------------

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Values at the rows of an encodings array (zeros allowed, 0^0 = 1)."""
        points = np.atleast_2d(np.asarray(points, dtype=np.int64))
        total = np.zeros(points.shape[0], dtype=np.int64)
        for exps, coeff in self._terms.items():
            value = np.full(points.shape[0], coeff, dtype=np.int64)
            for i, e in enumerate(exps):
                if e:
                    value = self.field.mul(value, self.field.pow(points[:, i], e))
            total = self.field.add(total, value)
        return total

    def evaluate_logs(self, logs: np.ndarray) -> np.ndarray:
        """Values at torus points given by discrete logs of their coordinates."""
        logs = np.atleast_2d(np.asarray(logs, dtype=np.int64))
        total = np.zeros(logs.shape[0], dtype=np.int64)
        if not self._terms:
            return total
        exps = np.array(list(self._terms), dtype=np.int64)
        coeffs = np.array(list(self._terms.values()), dtype=np.int64)
        monomials = self.field.exp_table[(logs @ exps.T) % (self.field.q - 1)]
        for j in range(coeffs.size):
            total = self.field.add(total, self.field.mul(monomials[:, j], int(coeffs[j])))
        return total

    # -- formats ---------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self._terms.items():
            factors = [f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}" for i, e in enumerate(exps) if e]
            parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def to_json(self) -> Dict:
        return {"nvars": self.nvars,
                "terms": [{"exps": list(e), "coeff": c} for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, field: FiniteField, data: Mapping) -> "SparsePolynomial":
        nvars = int(data["nvars"])
        poly = cls(field, nvars)
        for term in data.get("terms", []):
            poly = poly + cls(field, nvars, {tuple(term["exps"]): _coefficient(field, term["coeff"])})
        return poly

    @classmethod
    def parse(cls, field: FiniteField, text: str, nvars: int) -> "SparsePolynomial":
        """Parse `c*t1^a1*...*ts^as + ...`; a leading '-' negates a term."""
        body = text.replace(" ", "")
        if body in ("", "0"):
            return cls(field, nvars)
        if not _BODY.fullmatch(body):
            raise PreconditionError(f"cannot parse polynomial {text!r}: every sign needs a term after it")
        poly = cls(field, nvars)
        for sign, chunk in re.findall(r"([+-]?)([^+-]+)", body):
            match = _TERM.match(chunk)
            if not match or not (match.group(1) or match.group(2)):
                raise PreconditionError(f"cannot parse term {chunk!r}")
            coeff = _coefficient(field, int(match.group(1)) if match.group(1) else 1)
            if sign == "-":
                coeff = field.neg(coeff)
            exps = [0] * nvars
            for index, power in _FACTOR.findall(match.group(2)):
                i = int(index)
                if not 1 <= i <= nvars:
                    raise PreconditionError(f"variable t{i} outside t1..t{nvars}")
                exps[i - 1] += int(power) if power else 1
            poly = poly + cls(field, nvars, {tuple(exps): coeff})
        return poly


def _term_order(item: Tuple[Exponents, int]):
    exps = item[0]
    return (-sum(exps), tuple(-e for e in exps))


def _coefficient(field: FiniteField, value: int) -> int:
    if not 0 <= int(value) < field.q:
        raise PreconditionError(f"coefficient {value} is not an encoding of GF({field.q})")
    return int(value)


def variable(field: FiniteField, nvars: int, i: int) -> SparsePolynomial:
    exps = [0] * nvars
    exps[i] = 1
    return SparsePolynomial(field, nvars, {tuple(exps): 1})


def constant(field: FiniteField, nvars: int, c: int) -> SparsePolynomial:
    return SparsePolynomial(field, nvars, {(0,) * nvars: c})


def evaluate(g: SparsePolynomial, point: Sequence) -> FieldElement:
    if len(point) != g.nvars:
        raise PreconditionError(f"point has {len(point)} coordinates, polynomial has {g.nvars} variables")
    coords = []
    for c in point:
        if isinstance(c, FieldElement):
            if c.field != g.field:
                raise PreconditionError("point and polynomial over different fields")
            c = c.value
        coords.append(_coefficient(g.field, int(c)))
    return FieldElement(g.field, int(g.evaluate_many(np.array([coords]))[0]))


def is_homogeneous(g: SparsePolynomial) -> Tuple[bool, Optional[int]]:
    if g.is_zero():
        return True, None
    degrees = {sum(e) for e in g.terms}
    return len(degrees) == 1, max(degrees)


def torus_canonical_form(g: SparsePolynomial, field: Optional[FiniteField] = None) -> SparsePolynomial:
    """Same function on (K*)^n with every exponent reduced into [0, q-2]."""
    field = field or g.field
    order = field.q - 1
    reduced: Dict[Exponents, int] = {}
    for exps, coeff in g.terms.items():
        key = tuple(e % order for e in exps)
        reduced[key] = field.add(reduced.get(key, 0), coeff)
    return SparsePolynomial(field, g.nvars, reduced)


def dehomogenize(g: SparsePolynomial) -> SparsePolynomial:
    """Substitute 1 for the last variable."""
    terms: Dict[Exponents, int] = {}
    for exps, coeff in g.terms.items():
        key = exps[:-1]
        terms[key] = g.field.add(terms.get(key, 0), coeff)
    return SparsePolynomial(g.field, g.nvars - 1, terms)


def _chunks(total: int) -> Iterator[np.ndarray]:
    for start in range(0, total, CHUNK):
        yield np.arange(start, min(start + CHUNK, total), dtype=np.int64)


def count_zeros_affine_torus(g: SparsePolynomial, field: Optional[FiniteField] = None,
                             cap: Optional[int] = None) -> int:
    field = field or g.field
    order = field.q - 1
    total = order ** g.nvars
    check_cap("affine torus enumeration (q-1)^n", total, cap if cap is not None else get_settings().point_cap)
    zeros = 0
    for indices in _chunks(total):
        zeros += int(np.count_nonzero(g.evaluate_logs(torus_exponents(indices, order, g.nvars)) == 0))
    return zeros


def count_zeros_affine_space(g: SparsePolynomial, cap: Optional[int] = None) -> int:
    """Zeros in K^n, the zero vector and coordinate hyperplanes included."""
    total = g.field.q ** g.nvars
    check_cap("affine space enumeration q^n", total, cap if cap is not None else get_settings().point_cap)
    zeros = 0
    for indices in _chunks(total):
        zeros += int(np.count_nonzero(g.evaluate_many(torus_exponents(indices, g.field.q, g.nvars)) == 0))
    return zeros


def count_nontrivial_zeros(g: SparsePolynomial, cap: Optional[int] = None) -> int:
    zeros = count_zeros_affine_space(g, cap)
    if int(g.evaluate_many(np.zeros((1, g.nvars), dtype=np.int64))[0]) == 0:
        zeros -= 1
    return zeros


def count_zeros_projective(g: SparsePolynomial, x: ToricSet) -> int:
    homogeneous, _ = is_homogeneous(g)
    if not homogeneous:
        raise PreconditionError("zero counts on projective points need a homogeneous polynomial")
    if g.nvars != x.s:
        raise PreconditionError(f"polynomial in {g.nvars} variables evaluated on points of P^{x.s - 1}")
    if g.field != x.field:
        raise PreconditionError("polynomial and toric set over different fields")
    return int(np.count_nonzero(g.evaluate_logs(x.logs()) == 0))


def torus_ideal_generators(field: FiniteField, s: int) -> List[SparsePolynomial]:
    """t_i^(q-1) - t_s^(q-1) for i = 1..s-1."""
    generators = []
    for i in range(s - 1):
        top = [0] * s
        top[i] = field.q - 1
        last = [0] * s
        last[-1] = field.q - 1
        generators.append(SparsePolynomial(field, s, {tuple(top): 1, tuple(last): field.neg(1)}))
    return generators


def random_polynomial(field: FiniteField, nvars: int, degree: int, rng: np.random.Generator,
                      max_var_degree: Optional[int] = None, max_terms: int = 6) -> SparsePolynomial:
    """Random nonzero polynomial of total degree exactly `degree`.

    With max_var_degree set, every per-variable degree stays at or below it.
    """
    cap = degree if max_var_degree is None else max_var_degree
    pool = [e for d in range(degree + 1) for e in monomials_of_degree(nvars, d) if max(e, default=0) <= cap]
    top = [e for e in pool if sum(e) == degree]
    if not top:
        raise PreconditionError(f"no monomial of degree {degree} with per-variable degree <= {cap}")
    terms = {top[int(rng.integers(len(top)))]: int(rng.integers(1, field.q))}
    for _ in range(int(rng.integers(0, max_terms))):
        terms.setdefault(pool[int(rng.integers(len(pool)))], int(rng.integers(1, field.q)))
    return SparsePolynomial(field, nvars, terms)
