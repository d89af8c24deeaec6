"""
Conway and Alexander polynomials from even notations
====================================================

For C(2a_1, ..., 2a_m) the Conway polynomial is a product of 2x2
polynomial matrices; the Alexander polynomial follows by z^2 = t - 2 + 1/t.
"""

from fibknots import (
    Fraction,
    alexander_polynomial,
    conway_polynomial,
    fibonacci_poly,
    normal_form,
    torus_conway,
)

# Torus links T(2, m) have the Fibonacci polynomials as Conway polynomials
for m in range(1, 8):
    print(f"T(2,{m}): {torus_conway(m)}    f_{m} = {fibonacci_poly(m)}")

# Knots: symmetric Alexander polynomials with Delta(1) = 1
for name, f in [("trefoil", Fraction(3, 2)), ("figure-eight", Fraction(5, 2)),
                ("5_2", Fraction(7, 3)), ("C(3,3,3)", Fraction(33, 10))]:
    e = normal_form(f)
    nabla = conway_polynomial(e.quotients)
    delta = alexander_polynomial(nabla)
    print(f"{name:13s} {str(e.quotients):18s} nabla = {str(nabla):<18}  Delta = {delta}")

# Two-component links: the value depends on the even notation used
print("C(4):", conway_polynomial([4]), "   alternating expansion of 4/-3:", torus_conway(4))
