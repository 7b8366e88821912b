"""
Correlators from the Lax pair
=============================

Build the projector M order by order, form W_n, and compare with TR.
"""

from painleve_tr.curves import build_jm
from painleve_tr.exactcore import render
from painleve_tr.laxdet import correlators, projector_recursion, sheet_sign, tt_compare, tt_suite

curve = build_jm(1, q0="-1/4")
proj = projector_recursion(curve, 2)
for k in range(3):
    print(f"M^({k}) =", proj[k])

# W_1 leading term is y on one sheet or the other
sign = sheet_sign(curve)
print("sheet map:", "identity" if sign == 1 else "z -> 1/z")

W1 = correlators(curve, 1, K=4)
for g in (0, 1):
    print(f"W_1 vs omega_1^({g}):", tt_compare(W1, g, sign).status)
print("hbar^1 coefficient of W_1 dx:", render(W1.differential(1)))

# the whole battery at once
for r in tt_suite(curve, K=4):
    print(f"{r.status:4}  {r.check}")
