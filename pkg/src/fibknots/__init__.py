"""Invariants of rational knots and links, with the mod-2 Conway polynomial
of generalized Fibonacci links ``C(n, n, ..., n)``."""

from .contfrac import (
    ContinuedFraction,
    EvenExpansion,
    Fraction,
    Mobius,
    cf,
    even_expansion,
    evaluate,
    mobius_compose,
    s_transform,
)
from .fiblinks import (
    FibLinkParams,
    LinkType,
    classify,
    closed_form_index,
    fib_link,
    mod2_closed_form,
    paper_expansion,
    remark_family,
    verify_lemma_identities,
)
from .links import RationalLink, component_count, determinant, equivalent, from_fraction, from_notation, normal_form
from .lissajous import LissajousVerdict, Status, fibonacci_non_lissajous, obstruction
from .poly import (
    GF2Poly,
    IntPoly,
    LaurentPoly,
    alexander_polynomial,
    conway_polynomial,
    fibonacci_number,
    fibonacci_poly,
    mod2,
    torus_conway,
)

__version__ = "0.1.0"
