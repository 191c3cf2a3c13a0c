#!/usr/bin/env python3
"""Rota-Baxter operator families on the 3-dimensional bialgebra on x, y, z.

The bialgebra has x^2 = x, y^2 = y, z^2 = 0, xy = yx = y, yz = xz = zx = z,
zy = 0 and grouplike comultiplication.  Three operator families live on it:

    P1(x) = a z, P1(y) = b z, P1(z) = 0       algebra weight 0
    P2(x) = -c(x+y), P2(y) = -c y, P2(z) = -c z   algebra weight c
    Q(x) = Q(y) = d z, Q(z) = 0               coalgebra weight d

so (H, P1, Q) is a Rota-Baxter bialgebra of weight (0, d) and (H, P2, Q)
one of weight (c, d), for any parameters.
"""

from itertools import product

from rbhopf import (builtin, check_rb_bialgebra, check_rb_coalgebra,
                    example54_p1, example54_p2, example54_q)

h = builtin("example54")
samples = (0, 1, -1, 2, 5)

ok = sum(check_rb_bialgebra(h, example54_p1(a, b), example54_q(d), 0, d).passed
         for a, b, d in product(samples, repeat=3))
print(f"(H, P1, Q) at weight (0, d): {ok}/{len(samples) ** 3} parameter "
      "samples pass")

ok = sum(check_rb_bialgebra(h, example54_p2(c), example54_q(d), c, d).passed
         for c, d in product(samples, repeat=2))
print(f"(H, P2, Q) at weight (c, d): {ok}/{len(samples) ** 2} parameter "
      "samples pass")

print()
print("Wrong weights fail with an exact witness:")
v = check_rb_coalgebra(h, example54_q(3), 0)
print(f"  Q(d=3) at weight 0: passed={v.passed}")
print(f"  {v.defect}")
print("  on x the left side is 9 z(x)z while the right side vanishes:")
for key, val in sorted(v.defect.residual.items()):
    print(f"    residual[{key}] = {val}")

print()
print("Scalar twist: if Q has weight d then aQ has weight ad")
for alpha in (2, -3):
    q = example54_q(1).scale(alpha)
    print(f"  alpha={alpha}: weight {alpha}: "
          f"{check_rb_coalgebra(h, q, alpha).passed}, "
          f"weight 1: {check_rb_coalgebra(h, q, 1).passed}")
