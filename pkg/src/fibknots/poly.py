"""Dense polynomials in z over Z and GF(2), Laurent polynomials in t, and the
Conway/Alexander polynomials of rational links.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .contfrac import ContinuedFraction


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _format_terms(terms, var: str) -> str:
    """Render ``[(coeff, exponent), ...]`` (already ordered) as ``z^3 + 2z - 1``."""
    if not terms:
        return "0"
    out = []
    for c, e in terms:
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if c == 1 else f"{c}{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in z with integer coefficients, ``coeffs[i]`` of ``z^i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def z(cls) -> IntPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> IntPoly:
        """Multiply by ``z^k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self) -> str:
        terms = [(c, e) for e, c in reversed(list(enumerate(self.coeffs))) if c]
        return _format_terms(terms, "z")


@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2) packed into an int: bit i is the coefficient of z^i."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("negative bit pattern")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> GF2Poly:
        return cls(sum(1 << i for i, c in enumerate(coeffs) if c % 2))

    @property
    def coeffs(self) -> list[int]:
        """Coefficient list, low to high; ``[]`` for zero."""
        return [(self.bits >> i) & 1 for i in range(self.bits.bit_length())]

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def __add__(self, other: GF2Poly) -> GF2Poly:
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: GF2Poly) -> GF2Poly:
        a, b, c = self.bits, other.bits, 0
        while b:
            if b & 1:
                c ^= a
            a <<= 1
            b >>= 1
        return GF2Poly(c)

    def is_one(self) -> bool:
        return self.bits == 1

    def __str__(self) -> str:
        terms = [(1, e) for e in range(self.degree, -1, -1) if (self.bits >> e) & 1]
        return _format_terms(terms, "z")


@dataclass(frozen=True)
class LaurentPoly:
    """``sum coeffs[i] * t^(min_degree + i)``; zero is ``(0, ())``."""

    min_degree: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(_trim(int(x) for x in self.coeffs))
        lo = self.min_degree
        while c and c[0] == 0:
            c.pop(0)
            lo += 1
        if not c:
            lo = 0
        object.__setattr__(self, "min_degree", lo)
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        for p in (self, other):
            for i, c in enumerate(p.coeffs):
                out[p.min_degree - lo + i] += c
        return LaurentPoly(lo, tuple(out))

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.min_degree, tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return LaurentPoly(self.min_degree + other.min_degree, tuple(out))

    __rmul__ = __mul__

    def coefficient(self, e: int) -> int:
        i = e - self.min_degree
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def invert_variable(self) -> LaurentPoly:
        """``p(1/t)``."""
        return LaurentPoly(-self.max_degree, tuple(reversed(self.coeffs))) if self.coeffs else self

    def is_symmetric(self) -> bool:
        return self == self.invert_variable()

    def at_one(self) -> int:
        return sum(self.coeffs)

    def mod2(self) -> LaurentPoly:
        return LaurentPoly(self.min_degree, tuple(c % 2 for c in self.coeffs))

    def __str__(self) -> str:
        terms = [(c, self.min_degree + i) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _format_terms(terms, "t")


def mod2(p: IntPoly) -> GF2Poly:
    return GF2Poly.from_coeffs(p.coeffs)


@lru_cache(maxsize=None)
def fibonacci_poly(m: int) -> IntPoly:
    """``f_0 = 0, f_1 = 1, f_{m+1} = z f_m + f_{m-1}``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    prev, cur = IntPoly(), IntPoly.const(1)
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, cur.shift() + prev
    return cur


def fibonacci_poly_mod2(m: int) -> GF2Poly:
    if m < 0:
        raise ValueError("m must be >= 0")
    prev, cur = GF2Poly(0), GF2Poly(1)
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, GF2Poly(cur.bits << 1) + prev
    return cur


def fibonacci_number(j: int) -> int:
    """``F_j`` with ``F_0 = 0, F_1 = 1``."""
    if j < 0:
        raise ValueError("j must be >= 0")
    a, b = 0, 1
    for _ in range(j):
        a, b = b, a + b
    return a


PolyMatrix = tuple[IntPoly, IntPoly, IntPoly, IntPoly]


def poly_matmul(p: PolyMatrix, q: PolyMatrix) -> PolyMatrix:
    a, b, c, d = p
    e, f, g, h = q
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def poly_matrix_power(m: PolyMatrix, k: int) -> PolyMatrix:
    one, zero = IntPoly.const(1), IntPoly()
    result = (one, zero, zero, one)
    for _ in range(k):
        result = poly_matmul(result, m)
    return result


def conway_polynomial(cf: ContinuedFraction | Iterable[int]) -> IntPoly:
    """Conway polynomial of ``C(2a_1, ..., 2a_m)`` by the matrix product
    ``(1 0) prod_i ((-1)^i a_i z, 1 / 1, 0) (1 0)^T``.

    Every quotient must be even and nonzero.  For two-component links the
    result depends on the expansion supplied (different even notations of
    the same unoriented link can differ in sign pattern).
    """
    qs = tuple(cf)
    for i, q in enumerate(qs, start=1):
        if q == 0 or q % 2:
            raise ValueError(f"quotient {q} at position {i} is not a nonzero even integer")
    # multiply the matrices into the column (1, 0) from the right
    top, bottom = IntPoly.const(1), IntPoly()
    for i in range(len(qs), 0, -1):
        a = qs[i - 1] // 2
        coeff = a if i % 2 == 0 else -a
        top, bottom = top.shift() * coeff + bottom, top
    return top


def alexander_polynomial(nabla: IntPoly) -> LaurentPoly:
    """Substitute ``z = t^(1/2) - t^(-1/2)``, i.e. ``z^2 = t - 2 + 1/t``.

    Only defined for polynomials in ``z^2`` (knots); an odd power of z
    raises ValueError.
    """
    for e, c in enumerate(nabla.coeffs):
        if e % 2 and c:
            raise ValueError(
                "Conway polynomial has odd powers of z: two-component link, "
                "Alexander polynomial not defined here"
            )
    z2 = LaurentPoly(-1, (1, -2, 1))
    power = LaurentPoly(0, (1,))
    total = LaurentPoly()
    for e in range(0, len(nabla.coeffs), 2):
        c = nabla.coeffs[e]
        if c:
            total = total + power * c
        power = power * z2
    return total


def torus_expansion(m: int) -> ContinuedFraction:
    """``m/(1-m) = [-2, 2, ..., (-1)^(m-1) 2]`` of length ``m - 1``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return ContinuedFraction(tuple(2 * (-1) ** i for i in range(1, m)))


def torus_conway(m: int) -> IntPoly:
    """Conway polynomial of the torus link T(2, m)."""
    return conway_polynomial(torus_expansion(m))
