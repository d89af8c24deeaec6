"""Exact fractions, continued fractions and integer Moebius transformations.

Everything here is projective: a fraction is a pair (num, den) up to sign,
with 1/0 standing for the point at infinity.  Continued fractions are
evaluated as products of the matrices (a 1 / 1 0) applied to the column
(1, 0), so no step ever divides by zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple


@dataclass(frozen=True, init=False)
class Fraction:
    """A reduced projective fraction ``num/den``.

    The sign is carried by ``den``: ``num >= 0`` always, and 0 is stored as
    0/1.  ``Fraction(1, 0)`` is infinity.
    """

    num: int
    den: int

    def __init__(self, num: int, den: int = 1):
        num, den = int(num), int(den)
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a fraction")
        g = gcd(num, den)
        num, den = num // g, den // g
        if num < 0:
            num, den = -num, -den
        if num == 0:
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def infinity(cls) -> Fraction:
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"


@dataclass(frozen=True)
class ContinuedFraction:
    """Finite continued fraction ``[a_1, ..., a_m]``, also read as the
    Conway notation ``C(a_1, ..., a_m)``.

    Only the first quotient may be zero.  The empty sequence evaluates to
    infinity.
    """

    quotients: tuple[int, ...] = ()

    def __post_init__(self):
        q = tuple(int(a) for a in self.quotients)
        object.__setattr__(self, "quotients", q)
        for i, a in enumerate(q[1:], start=2):
            if a == 0:
                raise ValueError(f"quotient a_{i} is zero; only a_1 may vanish")

    def __iter__(self):
        return iter(self.quotients)

    def __len__(self) -> int:
        return len(self.quotients)

    def __getitem__(self, i):
        return self.quotients[i]

    def __neg__(self) -> ContinuedFraction:
        # -[a_1, ..., a_m] = [-a_1, ..., -a_m]
        return ContinuedFraction(tuple(-a for a in self.quotients))

    def __add__(self, other) -> ContinuedFraction:
        if isinstance(other, ContinuedFraction):
            other = other.quotients
        return ContinuedFraction(self.quotients + tuple(other))

    def is_even(self) -> bool:
        return all(a % 2 == 0 for a in self.quotients)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.quotients) + "]"


def cf(*quotients: int) -> ContinuedFraction:
    """Shorthand: ``cf(2, -2) == ContinuedFraction((2, -2))``."""
    return ContinuedFraction(tuple(quotients))


@dataclass(frozen=True)
class Mobius:
    """Integer 2x2 matrix ``(a b / c d)`` with determinant +1 or -1.

    Equality (``==``) is projective: ``M`` and ``-M`` are the same map.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> Mobius:
        return cls(1, 0, 0, 1)

    @classmethod
    def quotient(cls, a: int) -> Mobius:
        """The map ``x -> a + 1/x``."""
        return cls(a, 1, 1, 0)

    def __matmul__(self, other: Mobius) -> Mobius:
        return mobius_compose(self, other)

    def __pow__(self, k: int) -> Mobius:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Mobius.identity(), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def inverse(self) -> Mobius:
        s = self.det
        return Mobius(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __neg__(self) -> Mobius:
        return Mobius(-self.a, -self.b, -self.c, -self.d)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mobius):
            return NotImplemented
        e, f = self.entries(), other.entries()
        return e == f or e == tuple(-x for x in f)

    def __hash__(self) -> int:
        e = self.entries()
        lead = next(x for x in e if x)
        if lead < 0:
            e = tuple(-x for x in e)
        return hash(e)

    def exact_equal(self, other: Mobius) -> bool:
        """Entry-wise equality, without the projective sign."""
        return self.entries() == other.entries()

    def mod(self, p: int) -> tuple[int, int, int, int]:
        return tuple(x % p for x in self.entries())

    def __call__(self, x: Fraction) -> Fraction:
        return Fraction(self.a * x.num + self.b * x.den, self.c * x.num + self.d * x.den)


def mobius_compose(p: Mobius, q: Mobius) -> Mobius:
    """Matrix product ``p @ q``, i.e. the map ``x -> p(q(x))``."""
    return Mobius(
        p.a * q.a + p.b * q.c,
        p.a * q.b + p.b * q.d,
        p.c * q.a + p.d * q.c,
        p.c * q.b + p.d * q.d,
    )


def continuant_matrix(quotients: Iterable[int]) -> Mobius:
    """Product of ``(a_i 1 / 1 0)`` over the quotients, left to right."""
    m = Mobius.identity()
    for a in quotients:
        # m @ (a 1 / 1 0)
        m = Mobius(m.a * a + m.b, m.a, m.c * a + m.d, m.c)
    return m


def evaluate(cf: ContinuedFraction | Iterable[int]) -> Fraction:
    """Projective value of ``[a_1, ..., a_m]``; ``[]`` gives infinity."""
    m = continuant_matrix(cf)
    return Fraction(m.a, m.c)


def s_transform(f: Fraction) -> Fraction:
    """``x -> x/(1 - x)``, sending ``alpha/beta`` to ``alpha/(beta - alpha)``."""
    return Fraction(f.num, f.den - f.num)


S_MATRIX = Mobius(1, 0, -1, 1)


class EvenExpansion(NamedTuple):
    """An all-even continued fraction together with the fraction it expands.

    ``s_applied`` is true when ``fraction`` is the s-transform image of the
    requested fraction rather than the fraction itself.
    """

    quotients: ContinuedFraction
    fraction: Fraction
    s_applied: bool


def _nearest_even(num: int, den: int) -> int:
    """Even integer nearest to num/den (den != 0).

    Ties go to the smaller absolute value, then to the positive one.
    """
    if den < 0:
        num, den = -num, -den
    den2 = 2 * den
    fl, r = divmod(num, den2)
    if 2 * r < den2:
        q = fl
    elif 2 * r > den2:
        q = fl + 1
    else:
        q = min(fl, fl + 1, key=lambda x: (abs(x), -x))
    return 2 * q


def even_quotients(num: int, den: int) -> ContinuedFraction:
    """Greedy nearest-even descent on the raw pair ``(num, den)``.

    Requires ``num`` and ``den`` coprime and not both odd.  Only the first
    quotient can be zero, and only when ``|num/den| < 1``.
    """
    if gcd(num, den) != 1:
        raise ValueError(f"{num}/{den} is not reduced")
    if num % 2 and den % 2:
        raise ValueError(f"{num}/{den} has odd numerator and denominator")
    out = []
    while den != 0:
        a = _nearest_even(num, den)
        out.append(a)
        num, den = den, num - a * den
    return ContinuedFraction(tuple(out))


def even_expansion(f: Fraction) -> EvenExpansion:
    """Continued fraction of ``f`` with even quotients.

    When numerator and denominator are both odd no even expansion exists,
    and the s-transform image ``alpha/(beta - alpha)`` (same link) is expanded
    instead; this is recorded in the result.
    """
    if not isinstance(f, Fraction):
        raise TypeError("even_expansion expects a Fraction")
    if f.is_infinite or f.num <= 0:
        raise ValueError(f"{f} is not a Schubert fraction with alpha >= 1")
    s_applied = bool(f.num % 2 and f.den % 2)
    target = s_transform(f) if s_applied else f
    return EvenExpansion(even_quotients(target.num, target.den), target, s_applied)
