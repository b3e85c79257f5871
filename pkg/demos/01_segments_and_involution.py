"""Linked segments and the Zelevinsky involution, step by step.

Run: python demos/01_segments_and_involution.py
"""

from spehseries import (
    HalfExp,
    linked,
    ms,
    mw_dual,
    mw_dual_trace,
    precedes,
    render_diagram,
    seg,
    segment_product,
    speh,
)

# Two segments interact only when their union is again a segment and
# neither swallows the other.
pairs = [(seg(0, 1), seg(1, 2)), (seg(0, 1), seg(0, 1)), (seg(0, 0), seg(2, 2)), (seg(-1, 0), seg(0, 1))]
for a, b in pairs:
    print(f"{a} and {b}: linked={linked(a, b)}, {a} -> {b}: {precedes(a, b)}")

# z(D1) x z(D2) has two factors exactly when D1, D2 are linked
print()
for a, b in pairs:
    factors = sorted(segment_product(a, b))
    print(f"z{a} x z{b}:", ", ".join(str(f) for f in factors))

# The Speh multisegment a(n,d) is an n-row staircase of d-long segments.
print("\na(3,2):")
print(render_diagram(speh(3, 2)))

# The involution turns rows into columns: a(3,2)^t = a(2,3).
print("\nrunning the involution on a(3,2):")
for i, step in enumerate(mw_dual_trace(speh(3, 2)).steps, 1):
    chain = " ".join(str(s) for s in step.chain)
    print(f"  pass {i}: chain {chain} emits {step.emitted}, leaves {step.remainder}")
print("result:", mw_dual(speh(3, 2)), "== a(2,3):", mw_dual(speh(3, 2)) == speh(2, 3))

# Half-integral centers work the same way.
c = HalfExp.parse("3/2")
print("\na(2,4) at 3/2 ->", mw_dual(speh(2, 4, c)))
print("repeated segment:", ms((0, 1), (0, 1)), "->", mw_dual(ms((0, 1), (0, 1))))
