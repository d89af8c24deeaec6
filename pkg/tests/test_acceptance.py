"""Exit criteria for the package.  Every check is exact (zero tolerance).

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line
per criterion.
"""

import io
import random
from math import gcd
from pathlib import Path

from fibknots.cli import main
from fibknots.contfrac import Fraction, evaluate, even_expansion, s_transform
from fibknots.fiblinks import (
    FibLinkParams,
    LinkType,
    classify,
    closed_form_index,
    fib_link,
    paper_expansion,
    remark_family,
    verify_lemma_identities,
)
from fibknots.links import component_count, from_fraction, from_notation, normal_form
from fibknots.lissajous import Status, fibonacci_non_lissajous, obstruction
from fibknots.poly import (
    GF2Poly,
    IntPoly,
    LaurentPoly,
    alexander_polynomial,
    conway_polynomial,
    fibonacci_number,
    fibonacci_poly,
    mod2,
    poly_matrix_power,
    torus_conway,
)

GOLDEN = Path(__file__).parent / "golden" / "table_n1-10_j1-15.csv"


def report(number, title, ok, detail=""):
    print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title} {detail}".rstrip())
    assert ok, f"criterion {number} failed: {detail}"


def f_mod2(N):
    """f_N mod 2 from the integer recurrence, reduced afterwards."""
    return mod2(fibonacci_poly(N))


def test_1_main_theorem_sweep():
    cells, bad = 0, []
    for n in (1, 3, 5, 7, 9):
        for j in range(1, 16):
            p = FibLinkParams(n, j)
            got = mod2(conway_polynomial(paper_expansion(p).quotients))
            r = n % 4
            N = (j + 2) // 3 * (n - 2) + j + 1 if r == 1 else (j + 2) // 3 * (n + 2) - (j + 1)
            assert closed_form_index(p).N == N
            cells += 1
            if got != f_mod2(N):
                bad.append((n, j))
    report(1, "odd-n theorem nabla mod 2 = f_N", not bad and cells >= 60, f"({cells} cells, failures {bad})")


def test_2_even_n_corollaries():
    cells, bad = 0, []
    for n in (2, 6, 4, 8):
        for j in range(1, 16):
            got = mod2(conway_polynomial((n,) * j))
            want = f_mod2(j + 1) if n % 4 == 2 else GF2Poly(0 if j % 2 else 1)
            cells += 1
            if got != want:
                bad.append((n, j))
    report(2, "even-n corollaries", not bad and cells == 60, f"({cells} cells)")


def test_3_torus_identity():
    z, one, zero = IntPoly.z(), IntPoly.const(1), IntPoly()
    f = fibonacci_poly
    ok = all(torus_conway(m) == f(m) for m in range(1, 41))
    ok &= all(
        poly_matrix_power((z, one, one, zero), m) == (f(m + 1), f(m), f(m), f(m - 1))
        for m in range(1, 41)
    )
    report(3, "torus links T(2,m) and (z 1/1 0)^m, m in [1,40]", ok)


def test_4_alexander_form():
    ok = True
    for k in range(9):
        coeffs = tuple((-1) ** (k - abs(i)) for i in range(-k, k + 1))
        ok &= alexander_polynomial(fibonacci_poly(2 * k + 1)) == LaurentPoly(-k, coeffs)
    rng = random.Random(2024)
    knots = 0
    while knots < 200:
        a = rng.randrange(3, 10**4 + 1, 2)
        b = rng.randrange(1, a)
        if gcd(a, b) != 1:
            continue
        knots += 1
        delta = alexander_polynomial(conway_polynomial(normal_form(Fraction(a, b)).quotients))
        ok &= delta == delta.invert_variable() and abs(delta.at_one()) == 1
    report(4, "Alexander alternating form (k<=8) and symmetry on 200 knots", ok)


def test_5_lemma_identities():
    reports = [verify_lemma_identities(n) for n in range(3, 20, 2)]
    report(5, "lemma/proposition matrix identities, odd n in [3,19]", all(r.passed for r in reports))


def test_6_remark_families():
    F = fibonacci_number
    ok = True
    for m in range(1, 11):
        for fam, ratio, length in (
            ("A", Fraction(F(3 * m + 2), F(3 * m)), 2 * m),
            ("B", Fraction(F(3 * m + 1), F(3 * m)), 2 * m),
            ("C", Fraction(F(3 * m + 3), F(3 * m + 2)), 2 * m + 1),
        ):
            f, c = remark_family(m, fam)
            ok &= f == ratio and evaluate(c) == ratio and len(c) == length and c.is_even()
    report(6, "Fibonacci-ratio families A, B, C, m in [1,10]", ok)


def test_7_even_expansion_round_trip():
    rng = random.Random(7)
    done, bad = 0, []
    while done < 1000:
        alpha = rng.randrange(1, 10**6 + 1)
        beta = rng.randrange(-2 * 10**6, 2 * 10**6 + 1)
        if beta == 0 or gcd(alpha, beta) != 1:
            continue
        done += 1
        f = Fraction(alpha, beta)
        e = even_expansion(f)
        target = s_transform(f) if e.s_applied else f
        if not (evaluate(e.quotients) == target == e.fraction and e.quotients.is_even()):
            bad.append(f)
    report(7, "even expansion round trip on 1000 random fractions", not bad, f"({len(bad)} failures)")


def test_8_classification():
    bad = []
    for n in range(1, 11):
        for j in range(1, 21):
            p = FibLinkParams(n, j)
            want = 1 if classify(p) is LinkType.KNOT else 2
            if component_count(fib_link(p).fraction) != want:
                bad.append((n, j))
    report(8, "classification vs determinant parity, 200 cells", not bad)


def test_9_open_cases_and_corollary():
    ok = True
    for link in (fib_link(FibLinkParams(3, 3)), from_notation((4, 4))):
        v = obstruction(link)
        ok &= v.witness.is_one() and v.status is Status.INCONCLUSIVE
    ok &= obstruction(from_fraction(Fraction(3, 2))).status is Status.OBSTRUCTED
    covered = 0
    for n in range(1, 10):
        for j in range(1, 16):
            p = FibLinkParams(n, j)
            if classify(p) is LinkType.KNOT and fibonacci_non_lissajous(p):
                covered += 1
                ok &= obstruction(fib_link(p)).status is Status.OBSTRUCTED
    report(9, "open cases Inconclusive, corollary cases Obstructed", ok, f"({covered} corollary knots)")


def test_10_cli():
    out = io.StringIO()
    status = main(["verify", "--max-n", "9", "--max-j", "15"], out=out)
    table = io.StringIO()
    main(["table", "--n-range", "1..10", "--j-range", "1..15", "--format", "csv"], out=table)
    ok = status == 0 and table.getvalue() == GOLDEN.read_text()
    report(10, "CLI verify exits 0 and table matches golden CSV", ok)
