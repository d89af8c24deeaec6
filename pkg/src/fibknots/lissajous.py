"""Mod-2 Alexander obstruction for rational Lissajous knots.

A rational Lissajous knot has ``Delta(t) = 1 mod 2``.  Since
``z^2 -> t + 1/t`` is injective on mod-2 polynomials in ``z^2``, this is the
same as ``nabla(z) = 1 mod 2``, which is what gets computed.  The test only
ever rules knots out; there is no "is Lissajous" verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fiblinks import FibLinkParams, LinkType, classify
from .links import RationalLink, normal_form
from .poly import GF2Poly, conway_polynomial, mod2


class Status(enum.Enum):
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LissajousVerdict:
    status: Status
    witness: GF2Poly

    def __post_init__(self):
        if (self.status is Status.OBSTRUCTED) == self.witness.is_one():
            raise ValueError("status must be Obstructed exactly when the witness is not 1")


def obstruction(link: RationalLink) -> LissajousVerdict:
    if not link.is_knot:
        raise ValueError(
            f"link of fraction {link.fraction} has two components; "
            "the Lissajous obstruction is stated for knots"
        )
    witness = mod2(conway_polynomial(normal_form(link.fraction).quotients))
    status = Status.INCONCLUSIVE if witness.is_one() else Status.OBSTRUCTED
    return LissajousVerdict(status, witness)


def fibonacci_non_lissajous(params: FibLinkParams) -> bool:
    """Whether the Fibonacci knot ``F_j^(n)`` is ruled out as a Lissajous knot
    by the closed-form mod-2 Conway polynomial.

    True iff ``n != 0 mod 4`` and ``(n, j) != (3, 3)``, except for the
    trivial knot ``F_1^(1) = C(1)``, which is Lissajous.
    """
    if classify(params) is not LinkType.KNOT:
        raise ValueError(f"F_{params.j}^({params.n}) is a two-component link, not a knot")
    if (params.n, params.j) in ((3, 3), (1, 1)):
        return False
    return params.n % 4 != 0
