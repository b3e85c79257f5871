"""How the composition series of the twisted Speh pair changes with k.

For n = 3, d = 5 walk k from 0 to n + d.  Each step prints the factors
(marking the irreducible sub and quotient) followed by the submodule chain.

Run: python demos/02_composition_series.py
"""

from spehseries import compose_zelevinsky, lattice_chain, make_params, render_diagram

n, d = 3, 5

print(f"the pair for (n,d,k) = ({n},{d},6), Delta rows '*', Gamma rows 'o':")
print(render_diagram(make_params(n, d, 6)))
print()

for k in range(0, n + d + 1):
    rep = compose_zelevinsky(n, d, k)
    print(f"k={k}: length {rep.length}")
    for j, m in rep.factors:
        role = "irreducible" if rep.length == 1 else "sub" if m == rep.socle else "quotient" if m == rep.cosocle else ""
        print(f"   r_{j:<2} {m}  {role}")
    if rep.length > 1:
        chain = [s for s, _ in lattice_chain(n, d, k)]
        print("   submodules:", " < ".join("{" + ",".join(map(str, s)) + "}" for s in chain))

# Changing the sign of k keeps the factors but swaps sub and quotient.
plus, minus = compose_zelevinsky(n, d, 2, "+"), compose_zelevinsky(n, d, 2, "-")
print()
print("k=+2 sub:", plus.socle)
print("k=-2 sub:", minus.socle)
print("same factors:", plus.factor_set == minus.factor_set)
