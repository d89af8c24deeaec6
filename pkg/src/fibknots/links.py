"""Rational (two-bridge) links identified by their Schubert fractions."""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import ContinuedFraction, EvenExpansion, Fraction, even_expansion, evaluate


@dataclass(frozen=True)
class RationalLink:
    fraction: Fraction
    notation: ContinuedFraction

    @property
    def determinant(self) -> int:
        return determinant(self)

    @property
    def components(self) -> int:
        return component_count(self.fraction)

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    @property
    def is_unknot(self) -> bool:
        return self.fraction.num == 1


def from_notation(notation: ContinuedFraction) -> RationalLink:
    """The rational link ``C(a_1, ..., a_m)``.

    Notations evaluating to infinity are accepted as the unknot (alpha = 1);
    a notation evaluating to 0 is not a link diagram and raises ValueError.
    """
    if not isinstance(notation, ContinuedFraction):
        notation = ContinuedFraction(tuple(notation))
    f = evaluate(notation)
    if f.num == 0:
        raise ValueError(f"C{tuple(notation.quotients)} evaluates to 0, not a rational link")
    if f.is_infinite:
        # 1/0 has alpha = 1 already; kept as the unknot's fraction
        f = Fraction(1, 0)
    return RationalLink(f, notation)


def from_fraction(f: Fraction) -> RationalLink:
    """Link of Schubert fraction ``f`` with its canonical even notation."""
    return RationalLink(f, normal_form(f).quotients)


def determinant(link: RationalLink) -> int:
    return link.fraction.num


def component_count(f: Fraction) -> int:
    """1 for a knot (odd determinant), 2 for a two-component link."""
    if f.num == 0:
        raise ValueError("fraction 0 is not a rational link")
    return 1 if f.num % 2 else 2


def equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Schubert's criterion: alpha equal and beta' = beta^(+-1) mod alpha."""
    alpha = f1.num
    if alpha != f2.num:
        return False
    if alpha == 1:
        return True
    b1, b2 = f1.den % alpha, f2.den % alpha
    return b1 == b2 or (b1 * b2) % alpha == 1


def reduced_fraction(f: Fraction) -> Fraction:
    """Equivalent fraction with ``0 < beta < alpha`` (1/0 for the unknot)."""
    if f.num == 1:
        return Fraction(1, 0)
    return Fraction(f.num, f.den % f.num)


def normal_form(f: Fraction) -> EvenExpansion:
    """All-even Conway notation of the link of ``f``, with no zero quotient.

    The denominator is first reduced into ``(0, alpha)`` so the expansion
    never starts with a zero.  The returned ``fraction`` is equivalent to
    ``f`` but generally not equal to it.
    """
    if f.num == 1:
        return EvenExpansion(ContinuedFraction(), Fraction(1, 0), False)
    return even_expansion(reduced_fraction(f))
