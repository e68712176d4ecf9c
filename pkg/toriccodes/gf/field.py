"""Arithmetic in GF(q), q = p^m, through discrete log / antilog tables.

Elements are integers in [0, q-1] read as base-p digit vectors in the polynomial
basis (constant term least significant). All arithmetic methods accept Python
ints or numpy integer arrays and broadcast like numpy ufuncs; scalar inputs give
Python ints back.
"""
import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..errors import CapExceededError, FieldMismatchError, PreconditionError

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> List[int]:
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        factors.append(n)
    return factors


def _poly_rem(num: List[int], den: List[int], p: int) -> List[int]:
    # den is monic; coefficient lists are constant-term first
    num = list(num)
    for shift in range(len(num) - len(den), -1, -1):
        lead = num[shift + len(den) - 1] % p
        if lead:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - lead * c) % p
    return num[: len(den) - 1]


def _monic_polys(p: int, degree: int):
    for low in range(p ** degree):
        coeffs = [(low // p ** i) % p for i in range(degree)]
        yield coeffs + [1]


def is_irreducible(coeffs: List[int], p: int) -> bool:
    """Trial division of a monic polynomial over GF(p) by every monic factor of degree <= m/2."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] % p == 0:
        return False
    for degree in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, degree):
            if not any(_poly_rem(coeffs, divisor, p)):
                return False
    return True


def find_modulus(p: int, m: int) -> List[int]:
    """The monic irreducible polynomial of degree m over GF(p) with the least encoding."""
    for coeffs in _monic_polys(p, m):
        if is_irreducible(coeffs, p):
            return coeffs
    raise PreconditionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    def __init__(self, p: int, m: int, modulus: List[int]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)
        self._weights = p ** np.arange(m, dtype=np.int64)
        self._digits = (np.arange(self.q, dtype=np.int64)[:, None] // self._weights) % p
        self.primitive_encoding = self._find_primitive()
        self.exp_table, self.log_table = self._build_tables()
        self.exp_table.setflags(write=False)
        self.log_table.setflags(write=False)
        self.primitive = FieldElement(self, self.primitive_encoding)
        logger.debug("built GF(%d) modulus=%s primitive=%d", self.q, self.modulus, self.primitive_encoding)

    # -- construction helpers (table-free) --------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        da, db = self._digits[a], self._digits[b]
        product = [0] * (2 * self.m - 1)
        for i in range(self.m):
            for j in range(self.m):
                product[i + j] = (product[i + j] + int(da[i]) * int(db[j])) % self.p
        rem = _poly_rem(product, list(self.modulus), self.p)
        return int(np.dot(rem, self._weights))

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]
        for g in range(1, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise PreconditionError(f"GF({self.q}) has no primitive element")

    def _build_tables(self) -> Tuple[np.ndarray, np.ndarray]:
        order = self.q - 1
        exp_table = np.ones(self.q, dtype=np.int64)
        log_table = np.zeros(self.q, dtype=np.int64)
        # multiplication by the primitive element as a linear map on digit vectors
        step = np.array([self._digits[self._slow_mul(self.p ** j, self.primitive_encoding)]
                         for j in range(self.m)], dtype=np.int64).T
        current = self._digits[1]
        for i in range(order):
            value = int(current @ self._weights)
            exp_table[i] = value
            log_table[value] = i
            current = (step @ current) % self.p
        exp_table[order] = 1
        return exp_table, log_table

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, m={self.m})"

    def descriptor(self) -> Dict[str, Any]:
        return {"p": self.p, "m": self.m, "q": self.q, "modulus": list(self.modulus)}

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    # -- vectorized arithmetic -----------------------------------------------

    @staticmethod
    def _result(value: np.ndarray, *operands: Any):
        if all(np.ndim(o) == 0 for o in operands):
            return int(value)
        return value

    def add(self, a, b):
        x, y = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.m == 1:
            r = (x + y) % self.p
        elif self.p == 2:
            r = np.bitwise_xor(x, y)
        else:
            r = ((self._digits[x] + self._digits[y]) % self.p) @ self._weights
        return self._result(r, a, b)

    def neg(self, a):
        x = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            r = (-x) % self.p
        elif self.p == 2:
            r = x
        else:
            r = ((-self._digits[x]) % self.p) @ self._weights
        return self._result(r, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        x, y = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.m == 1:
            r = (x * y) % self.p
        else:
            r = np.where((x == 0) | (y == 0), 0,
                         self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)])
        return self._result(r, a, b)

    def inv(self, a):
        x = np.asarray(a, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError(f"inversion of zero in GF({self.q})")
        r = self.exp_table[(-self.log_table[x]) % (self.q - 1)]
        return self._result(r, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        x, n = np.asarray(a, dtype=np.int64), np.asarray(e, dtype=np.int64)
        zero = x == 0
        if np.any(zero & (n < 0)):
            raise ZeroDivisionError(f"negative power of zero in GF({self.q})")
        r = np.where(zero, np.where(n == 0, 1, 0),
                     self.exp_table[(self.log_table[x] * n) % (self.q - 1)])
        return self._result(r, a, e)

    def log(self, a):
        """Discrete logarithm to the primitive base; zero has none."""
        x = np.asarray(a, dtype=np.int64)
        if np.any(x == 0):
            raise PreconditionError("zero has no discrete logarithm")
        return self._result(self.log_table[x], a)

    def nonzero_elements(self) -> List["FieldElement"]:
        return [FieldElement(self, v) for v in range(1, self.q)]


class FieldElement:
    """A scalar of a FiniteField with Python operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise PreconditionError(f"{value} is not an element encoding of GF({field.q})")
        self.field = field
        self.value = value

    def _coerce(self, other: Any) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"GF({self.field.q}) and GF({other.field.q}) operands mixed")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).value
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, exponent: int):
        return FieldElement(self.field, self.field.pow(self.value, int(exponent)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.field.q})({self.value})"


@lru_cache(maxsize=64)
def _cached_field(p: int, m: int) -> FiniteField:
    return FiniteField(p, m, find_modulus(p, m))


def make_field(p: int, m: int = 1, cap: Optional[int] = None) -> FiniteField:
    """GF(p^m); the cap is checked before any primality test on p."""
    if m < 1:
        raise PreconditionError(f"extension degree {m} must be at least 1")
    limit = cap if cap is not None else get_settings().field_cap
    # past limit.bit_length() + 1 the order exceeds the cap for every p >= 2
    order = abs(p) ** min(m, limit.bit_length() + 1)
    if order > limit:
        raise CapExceededError(f"GF({p}^{m})", order, limit)
    if not is_prime(p):
        raise PreconditionError(f"characteristic {p} is not prime")
    return _cached_field(p, m)


def field_for_order(q: int, cap: Optional[int] = None) -> FiniteField:
    """The field of prime-power order q."""
    limit = cap if cap is not None else get_settings().field_cap
    if q > limit:
        raise CapExceededError(f"GF({q})", q, limit)
    factors = prime_factors(q) if q > 1 else []
    if len(factors) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    p = factors[0]
    m = 0
    while p ** m < q:
        m += 1
    return make_field(p, m, cap)


def nonzero_elements(field: FiniteField) -> List[FieldElement]:
    return field.nonzero_elements()
