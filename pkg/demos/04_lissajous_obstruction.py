"""
Which Fibonacci knots cannot be Lissajous
=========================================

A rational Lissajous knot has Delta = 1 mod 2.  The check can only rule a
knot out; "Inconclusive" is the honest answer otherwise.
"""

from fibknots import (
    FibLinkParams,
    LinkType,
    classify,
    fib_link,
    obstruction,
)

rows = []
for n in range(1, 9):
    line = []
    for j in range(1, 13):
        p = FibLinkParams(n, j)
        if classify(p) is LinkType.LINK:
            line.append(" .")
        else:
            line.append(" X" if obstruction(fib_link(p)).status.value == "Obstructed" else " ?")
    rows.append(f"n={n}:" + "".join(line))

print("X obstructed, ? inconclusive, . two-component link (j = 1..12)")
print("\n".join(rows))
# The inconclusive knots: the unknot F_1^(1), F_3^(3), and n = 0 mod 4 with j even
