"""
Continued fractions and Schubert fractions
==========================================

A rational link C(a_1, ..., a_m) is determined by the value of the
continued fraction [a_1, ..., a_m].  Evaluation is projective, through
products of the matrices (a 1 / 1 0), so infinity is just 1/0.
"""

from fibknots import Fraction, Mobius, cf, equivalent, even_expansion, evaluate, s_transform

# The trefoil C(1,1,1) and a few others
for qs in [(1, 1, 1), (2, 2), (3, 3), ()]:
    print(f"C{qs} -> {evaluate(cf(*qs))}")

# The value is the first column of a matrix product
P = Mobius(3, 1, 1, 0)
print("P^3 =", P ** 3, "  [3,3,3] =", evaluate(cf(3, 3, 3)))

# Every rational link has an all-even notation.  Odd/odd fractions have no
# even expansion, so alpha/(beta - alpha), the same link, is expanded instead.
for f in [Fraction(5, 2), Fraction(33, 10), Fraction(5, 3)]:
    e = even_expansion(f)
    note = f"  (expanded {e.fraction} instead)" if e.s_applied else ""
    print(f"{f}: {e.quotients}{note}")

# Schubert's classification: same alpha, beta' = beta^(+-1) mod alpha
print("5/2 ~ 5/3:", equivalent(Fraction(5, 2), Fraction(5, 3)))
print("5/3 ~ s(5/3):", equivalent(Fraction(5, 3), s_transform(Fraction(5, 3))))
