"""The same question with Langlands parameters, and the conjectural extension.

Run: python demos/04_langlands_side.py
"""

from spehseries import compose_langlands, compose_zelevinsky, conjecture_jh, make_params, mw_dual, speh

n, d, k = 2, 3, 2
z = compose_zelevinsky(n, d, k)
lang = compose_langlands(n, d, k)
print(f"({n},{d},{k}) Zelevinsky sub {z.socle}, quotient {z.cosocle}")
print(f"({n},{d},{k}) Langlands  sub {lang.socle}, quotient {lang.cosocle}")
print("same parameter set on both sides:", z.factor_set == lang.factor_set)

# the Langlands answer is the involution applied to the (d, n) Zelevinsky answer
swapped = {mw_dual(m) for m in compose_zelevinsky(d, n, k).factor_set}
print("involution of the (d,n) factors gives it back:", swapped == lang.factor_set)

# Two Speh ladders that are not a twisted pair of one shape: only an expectation.
left, right = speh(2, 3, -1), speh(3, 2, 1)
res = conjecture_jh(left, right)
print(f"\nexpected factors of L{left} x L{right} (conjectural):")
for j, m in res.factors:
    print(f"  a({j}) = {m}")

p = make_params(2, 2, 2)
for cond in ("none", "verbatim"):
    got = conjecture_jh(p.a_minus, p.a_plus, side_condition=cond).factor_set
    print(f"side condition {cond!r}: agrees with the proved case: {got == compose_langlands(2, 2, 2).factor_set}")
