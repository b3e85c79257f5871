"""Recompute the factors without the closed form and compare.

The oracle starts from every multisegment below a_- + a_+, throws away
anything whose ends or symmetry are wrong, and keeps the full-size
candidates whose highest derivative is a factor one step down in d.

Run: python demos/03_oracle_cross_check.py
"""

import time

from spehseries import (
    compose_zelevinsky,
    down_closure,
    hd_reconstruction,
    make_params,
    oracle_composition,
)

n, d, k = 2, 3, 2
p = make_params(n, d, k)
print(f"(n,d,k) = ({n},{d},{k}); candidates below the top: {len(down_closure(p.top))}")
res = oracle_composition(n, d, k)
for m in sorted(res.factors):
    print(f"  {m}")
    for reason in res.certificate[m]:
        print(f"      - {reason}")

theorem = compose_zelevinsky(n, d, k).factor_set
print("matches the closed form:", set(res.factors) == theorem)

lifted, below = hd_reconstruction(n, d, k)
print("highest derivatives of full-size factors == factors of (n, d-1, k) shifted:", lifted == below)

print("\nsweep n, d <= 4, k <= n + d + 1:")
start = time.perf_counter()
bad = []
for n in range(1, 5):
    for d in range(1, 5):
        for k in range(0, n + d + 2):
            if set(oracle_composition(n, d, k).factors) != compose_zelevinsky(n, d, k).factor_set:
                bad.append((n, d, k))
print(f"  disagreements: {bad or 'none'} ({time.perf_counter() - start:.1f}s)")
