"""
Mod-2 Conway polynomials of Fibonacci links
===========================================

For odd n the links F_j^(n) = C(n, ..., n) get an even expansion from the
recursive identities; its Conway polynomial reduced mod 2 is a Fibonacci
polynomial f_N with N given in closed form.
"""

from fibknots import (
    FibLinkParams,
    closed_form_index,
    conway_polynomial,
    mod2,
    mod2_closed_form,
    paper_expansion,
    verify_lemma_identities,
)

print(verify_lemma_identities(7))

print(f"\n{'n':>2} {'j':>2} {'N':>3}  match  expansion")
for n in (1, 3, 5):
    for j in range(1, 8):
        p = FibLinkParams(n, j)
        e = paper_expansion(p)
        got = mod2(conway_polynomial(e.quotients))
        ok = got == mod2_closed_form(p)
        print(f"{n:>2} {j:>2} {closed_form_index(p).N:>3}  {str(ok):5s}  {e.quotients}"
              + ("  (s-image)" if e.s_applied else ""))
