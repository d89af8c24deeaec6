"""Replays every identity and theorem checked by the package as a sweep of
pass/fail cells.  Used by ``fibknots verify``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .contfrac import Fraction, even_expansion, evaluate, s_transform
from .fiblinks import (
    FibLinkParams,
    LinkType,
    classify,
    fib_link,
    mod2_closed_form,
    paper_expansion,
    remark_family,
    verify_lemma_identities,
)
from .links import component_count, from_fraction, from_notation, normal_form
from .lissajous import Status, fibonacci_non_lissajous, obstruction
from .poly import (
    IntPoly,
    LaurentPoly,
    alexander_polynomial,
    conway_polynomial,
    fibonacci_number,
    fibonacci_poly,
    fibonacci_poly_mod2,
    mod2,
    poly_matrix_power,
    torus_conway,
)


@dataclass
class CheckResult:
    name: str
    cells: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.cells > 0

    def check(self, ok: bool, label: str) -> None:
        self.cells += 1
        if not ok:
            self.failures.append(label)

    def __str__(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name} ({self.cells} cells"
        head += f", {len(self.failures)} failed)" if self.failures else ")"
        return head


def theorem_sweep(max_n: int = 9, max_j: int = 15) -> CheckResult:
    res = CheckResult("odd-n theorem: nabla mod 2 = f_N")
    for n in range(1, max_n + 1, 2):
        for j in range(1, max_j + 1):
            p = FibLinkParams(n, j)
            got = mod2(conway_polynomial(paper_expansion(p).quotients))
            res.check(got == mod2_closed_form(p), f"n={n} j={j}")
    return res


def even_n_corollaries(max_n: int = 9, max_j: int = 15) -> CheckResult:
    res = CheckResult("even-n corollaries")
    for n in range(2, max_n + 1, 2):
        for j in range(1, max_j + 1):
            got = mod2(conway_polynomial((n,) * j))
            if n % 4 == 2:
                want = fibonacci_poly_mod2(j + 1)
            else:
                want = fibonacci_poly_mod2(0 if j % 2 else 1)
            res.check(got == want, f"n={n} j={j}")
    return res


def torus_identity(max_m: int = 40) -> CheckResult:
    res = CheckResult("torus links and Fibonacci matrix power")
    z, one, zero = IntPoly.z(), IntPoly.const(1), IntPoly()
    base = (z, one, one, zero)
    f = fibonacci_poly
    for m in range(1, max_m + 1):
        res.check(torus_conway(m) == f(m), f"T(2,{m})")
        res.check(poly_matrix_power(base, m) == (f(m + 1), f(m), f(m), f(m - 1)), f"power m={m}")
    return res


def alternating_sum(k: int) -> LaurentPoly:
    total = LaurentPoly()
    for i in range(k + 1):
        sign = (-1) ** (k - i)
        if i == 0:
            total = total + LaurentPoly(0, (sign,))
        else:
            coeffs = [0] * (2 * i + 1)
            coeffs[0] = coeffs[-1] = sign
            total = total + LaurentPoly(-i, tuple(coeffs))
    return total


def random_knot_fraction(rng: random.Random, max_alpha: int = 10**4) -> Fraction:
    while True:
        alpha = rng.randrange(3, max_alpha + 1, 2)
        beta = rng.randrange(1, alpha)
        if gcd(alpha, beta) == 1:
            return Fraction(alpha, beta)


def alexander_checks(rng: random.Random, samples: int = 200, max_k: int = 8) -> CheckResult:
    res = CheckResult("Alexander polynomial form and symmetry")
    for k in range(max_k + 1):
        res.check(alexander_polynomial(fibonacci_poly(2 * k + 1)) == alternating_sum(k), f"k={k}")
    for _ in range(samples):
        f = random_knot_fraction(rng)
        delta = alexander_polynomial(conway_polynomial(normal_form(f).quotients))
        res.check(delta.is_symmetric() and abs(delta.at_one()) == 1, f"knot {f}")
    return res


def lemma_checks(max_n: int = 19) -> CheckResult:
    res = CheckResult("lemma and proposition matrix identities")
    for n in range(3, max(max_n, 19) + 1, 2):
        res.check(verify_lemma_identities(n).passed, f"n={n}")
    return res


def remark_checks(max_m: int = 10) -> CheckResult:
    res = CheckResult("Fibonacci-ratio continued fraction families")
    F = fibonacci_number
    want = {
        "A": (lambda m: Fraction(F(3 * m + 2), F(3 * m)), lambda m: 2 * m),
        "B": (lambda m: Fraction(F(3 * m + 1), F(3 * m)), lambda m: 2 * m),
        "C": (lambda m: Fraction(F(3 * m + 3), F(3 * m + 2)), lambda m: 2 * m + 1),
    }
    for m in range(1, max_m + 1):
        for fam, (frac, length) in want.items():
            f, c = remark_family(m, fam)
            ok = f == frac(m) and evaluate(c) == f and len(c) == length(m) and c.is_even()
            res.check(ok, f"{fam} m={m}")
    return res


def round_trip_checks(rng: random.Random, samples: int = 1000, max_alpha: int = 10**6) -> CheckResult:
    res = CheckResult("even expansion round trip")
    for _ in range(samples):
        while True:
            alpha = rng.randrange(1, max_alpha + 1)
            beta = rng.randrange(-2 * max_alpha, 2 * max_alpha + 1)
            if gcd(alpha, beta) == 1:
                break
        f = Fraction(alpha, beta)
        e = even_expansion(f)
        target = s_transform(f) if e.s_applied else f
        ok = evaluate(e.quotients) == target == e.fraction and e.quotients.is_even()
        res.check(ok and all(q != 0 for q in e.quotients[1:]), f"{f}")
    return res


def classification_checks(max_n: int = 10, max_j: int = 20) -> CheckResult:
    res = CheckResult("knot/link classification vs determinant parity")
    for n in range(1, max_n + 1):
        for j in range(1, max_j + 1):
            p = FibLinkParams(n, j)
            want = 1 if classify(p) is LinkType.KNOT else 2
            res.check(component_count(fib_link(p).fraction) == want, f"n={n} j={j}")
    return res


def lissajous_checks(max_n: int = 9, max_j: int = 15) -> CheckResult:
    res = CheckResult("Lissajous obstruction and open cases")
    for notation in ((3, 3, 3), (4, 4)):
        v = obstruction(from_notation(notation))
        res.check(v.status is Status.INCONCLUSIVE and v.witness.is_one(), f"C{notation} open")
    v = obstruction(from_fraction(Fraction(3, 2)))
    res.check(v.status is Status.OBSTRUCTED, "trefoil")
    for n in range(1, max_n + 1):
        for j in range(1, max_j + 1):
            p = FibLinkParams(n, j)
            if classify(p) is LinkType.KNOT and fibonacci_non_lissajous(p):
                v = obstruction(fib_link(p))
                ok = v.status is Status.OBSTRUCTED and v.witness == mod2_closed_form(p)
                res.check(ok, f"n={n} j={j}")
    return res


def run_all(max_n: int = 9, max_j: int = 15, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    checks: list[Callable[[], CheckResult]] = [
        lambda: theorem_sweep(max_n, max_j),
        lambda: even_n_corollaries(max_n, max_j),
        lambda: torus_identity(40),
        lambda: alexander_checks(rng),
        lambda: lemma_checks(max_n),
        lambda: remark_checks(10),
        lambda: round_trip_checks(rng),
        lambda: classification_checks(max(max_n, 10), max(max_j, 20)),
        lambda: lissajous_checks(max_n, max_j),
    ]
    return [c() for c in checks]
