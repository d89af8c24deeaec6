"""Generalized Fibonacci links ``F_j^(n) = C(n, n, ..., n)`` (j entries)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .contfrac import (
    ContinuedFraction,
    Fraction,
    Mobius,
    S_MATRIX,
    continuant_matrix,
    evaluate,
    s_transform,
)
from .links import RationalLink, from_notation
from .poly import GF2Poly, fibonacci_number, fibonacci_poly_mod2


@dataclass(frozen=True)
class FibLinkParams:
    n: int
    j: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.j < 1:
            raise ValueError(f"j must be >= 1, got {self.j}")

    @property
    def k(self) -> int | None:
        """``k`` with ``n = 2k + 1``; None for even n."""
        return (self.n - 1) // 2 if self.n % 2 else None


class LinkType(enum.Enum):
    KNOT = "knot"
    LINK = "two-component link"


def fib_link(params: FibLinkParams) -> RationalLink:
    return from_notation(ContinuedFraction((params.n,) * params.j))


def classify(params: FibLinkParams) -> LinkType:
    n, j = params.n, params.j
    if n % 2 == 0:
        knot = j % 2 == 0
    else:
        knot = j % 3 != 2
    return LinkType.KNOT if knot else LinkType.LINK


class PaperExpansion(NamedTuple):
    """Even expansion of ``[n]_j`` built from the recursive identities.

    ``fraction`` is the Schubert fraction of ``F_j^(n)``, or its s-transform
    when ``s_applied``.  ``route`` names which construction produced it.
    """

    quotients: ContinuedFraction
    fraction: Fraction
    s_applied: bool
    route: str


def _twist_block(k: int) -> tuple[int, ...]:
    return (-2, 2) * k


def _recursive_quotients(n: int, j: int) -> tuple[int, ...]:
    k = (n - 1) // 2
    block = _twist_block(k)
    r = j % 3
    if r == 1:
        # s([n]_1) = [(-2,2)^k];  s([n]_{j+3}) = [(-2,2)^k, -(n+1), -(n+1), -s([n]_j)]
        q = block
        step = block + (-(n + 1), -(n + 1))
        base_j = 1
    else:
        # [n,n] = [n+1, (-2,2)^k];  [n,n,n] = [n+1, (-2,2)^k, -(n+1)]
        # [n]_{j+3} = [n+1, (-2,2)^k, -(n+1), -[n]_j]
        q = (n + 1,) + block
        if r == 0:
            q += (-(n + 1),)
        step = (n + 1,) + block + (-(n + 1),)
        base_j = 2 if r == 2 else 3
    for _ in range((j - base_j) // 3):
        q = step + tuple(-a for a in q)
    return q


def remark_family(m: int, family: str) -> tuple[Fraction, ContinuedFraction]:
    """Fibonacci-ratio continued fractions with even quotients.

    ``A``: ``F_{3m+2}/F_{3m} = [2, 2, -2, -2, ...]`` (length 2m)
    ``B``: ``F_{3m+1}/F_{3m} = [2, -2, -2, 2, 2, ..., (-1)^m 2]`` (length 2m)
    ``C``: ``F_{3m+3}/F_{3m+2} = [2, -A]`` (length 2m+1)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    F = fibonacci_number
    pairs_a = tuple(q for i in range(m) for q in (2 * (-1) ** i,) * 2)
    if family == "A":
        return Fraction(F(3 * m + 2), F(3 * m)), ContinuedFraction(pairs_a)
    if family == "B":
        inner = tuple(q for i in range(1, m) for q in (2 * (-1) ** i,) * 2)
        qs = (2,) + inner + (2 * (-1) ** m,)
        return Fraction(F(3 * m + 1), F(3 * m)), ContinuedFraction(qs)
    if family == "C":
        qs = (2,) + tuple(-a for a in pairs_a)
        return Fraction(F(3 * m + 3), F(3 * m + 2)), ContinuedFraction(qs)
    raise ValueError(f"unknown family {family!r}; expected 'A', 'B' or 'C'")


def paper_expansion(params: FibLinkParams) -> PaperExpansion:
    """Even continued fraction of ``F_j^(n)`` for odd n.

    For ``j = 1 mod 3`` the fraction has odd numerator and denominator and
    the s-transform image is expanded instead.  For n = 1 in that residue
    class (j > 1) the expansion is the negated family-A fraction of
    :func:`remark_family`.
    """
    n, j = params.n, params.j
    if n % 2 == 0:
        raise ValueError("paper_expansion needs odd n; even n already has the even notation C(n,...,n)")
    s_applied = j % 3 == 1
    if n == 1 and s_applied and j > 1:
        _, a = remark_family((j - 1) // 3, "A")
        quotients, route = -a, "remark-A"
    else:
        quotients = ContinuedFraction(_recursive_quotients(n, j))
        route = "prop-s" if s_applied else "corollary"
    target = fib_link(params).fraction
    if s_applied:
        target = s_transform(target)
    value = evaluate(quotients)
    if value != target or not quotients.is_even():
        raise RuntimeError(f"expansion {quotients} of F_{j}^({n}) evaluates to {value}, expected {target}")
    return PaperExpansion(quotients, target, s_applied, route)


class ClosedFormN(NamedTuple):
    N: int
    branch: str


def closed_form_index(params: FibLinkParams) -> ClosedFormN:
    """Index N with ``nabla mod 2 = f_N mod 2``.

    For n = 0 mod 4 the value (0 for odd j, 1 for even j) is ``f_0`` or ``f_1``.
    """
    n, j = params.n, params.j
    r = n % 4
    if r == 1:
        return ClosedFormN((j + 2) // 3 * (n - 2) + j + 1, "n=1 mod 4")
    if r == 3:
        return ClosedFormN((j + 2) // 3 * (n + 2) - (j + 1), "n=3 mod 4")
    if r == 2:
        return ClosedFormN(j + 1, "n=2 mod 4")
    return ClosedFormN(0 if j % 2 else 1, "n=0 mod 4")


def mod2_closed_form(params: FibLinkParams) -> GF2Poly:
    return fibonacci_poly_mod2(closed_form_index(params).N)


# -- matrix identities behind the expansions ---------------------------------

@dataclass
class LemmaReport:
    n: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def __str__(self) -> str:
        lines = [f"n={self.n}: " + ("pass" if self.passed else "FAIL")]
        lines += [f"  {'ok  ' if ok else 'FAIL'} {name}" for name, ok in self.checks.items()]
        return "\n".join(lines)


def lemma_matrices(n: int) -> dict[str, Mobius]:
    k = (n - 1) // 2
    G = Mobius(3, 2, -2, -1)
    L = Mobius(n + 1, 1, 1, 0)
    T = Mobius(1, 1, 0, -1)
    Q = Mobius(-(n + 1), 1, 1, 0)
    R = Mobius(1, 0, 0, -1)
    P = Mobius(n, 1, 1, 0)
    Gk = G ** k
    return {
        "G": G, "L": L, "T": T, "Q": Q, "R": R, "S": S_MATRIX, "P": P,
        "G^k": Gk, "M": L @ Gk @ T, "H": Gk @ Q @ Q @ R,
    }


def verify_lemma_identities(n: int) -> LemmaReport:
    """Check the Moebius identities behind the expansions for odd n >= 3.

    Equalities are projective (a matrix and its negative agree).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    k = (n - 1) // 2
    m = lemma_matrices(n)
    P, S, H, M = m["P"], m["S"], m["H"], m["M"]
    rep = LemmaReport(n)
    rep.checks["G^k = (1+2k, 2k / -2k, 1-2k)"] = m["G^k"] == Mobius(1 + 2 * k, 2 * k, -2 * k, 1 - 2 * k)
    rep.checks["G^k = (n, n-1 / 1-n, 2-n)"] = m["G^k"] == Mobius(n, n - 1, 1 - n, 2 - n)
    rep.checks["M = L G^k T = (n^2+1, n / n, 1)"] = M == Mobius(n * n + 1, n, n, 1)
    rep.checks["M = P^2"] = M == P ** 2
    rep.checks["H = G^k Q^2 R explicit"] = H == Mobius(
        n**3 + n**2 + 2 * n + 1, n**2 + 1, -(n**3) - n, n - n**2 - 1
    )
    rep.checks["S^-1 H S = P^3"] = S.inverse() @ H @ S == P ** 3
    rep.checks["S P^3 = H S"] = S @ P ** 3 == H @ S
    # [n, n, x] = [n+1, (-2,2)^k, -(1+x)] at sample points, via continuants
    head = continuant_matrix((n + 1,) + _twist_block(k))
    for x in (Fraction(0), Fraction(1), Fraction(3, -7), Fraction.infinity()):
        lhs = continuant_matrix((n, n))(x)
        rhs = head(Fraction(-(x.num + x.den), x.den))
        rep.checks[f"[n,n,x] identity at x={x}"] = lhs == rhs
    return rep
