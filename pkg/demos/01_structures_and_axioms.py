#!/usr/bin/env python3
"""Tour of the builtin structures and the exact axiom checkers.

Every structure is a table of structure constants over Q (or F_p), and
every axiom check is an exact polynomial identity in those constants: a
verdict is pass/fail with a pinpointed defect, never a numerical residue.
"""

from rbhopf import (QQ, AlgebraicStructure, Tensor3, builtin, builtin_names,
                    check_antipode, check_associativity, check_bialgebra,
                    check_coassociativity, check_unit_counit,
                    counit_solutions, find_bialgebra_counit)

print("Builtin structures:")
for name in builtin_names():
    if name.endswith(":<n>"):
        print(f"  {name:14s} grouplike coalgebra family")
        continue
    s = builtin(name)
    print(f"  {name:14s} {s.kind:9s} dim {s.dim}")

print()
print("Sweedler's 4-dimensional Hopf algebra (basis 1, g, x, gx):")
h4 = builtin("sweedler4")
for check in (check_associativity, check_coassociativity, check_unit_counit,
              check_bialgebra, check_antipode):
    print(f"  {check.__name__:22s} -> {check(h4).passed}")
from rbhopf import Mat
s2 = h4.antipode * h4.antipode
print("  S^2 = id?              ->", s2 == Mat.identity(QQ, 4),
      "(S^2(x) = -x: the antipode has order 4)")

print()
print("A broken multiplication and its defect report:")
bad = AlgebraicStructure(2, QQ, mul=Tensor3(QQ, (2, 2, 2),
                                            {(0, 0, 1): 1, (1, 0, 0): 1}))
v = check_associativity(bad)
print(f"  passed={v.passed}; {v.defect}")
print("  (e0 e0)e0 = e1 e0 = e0 but e0(e0 e0) = e0 e1 = 0")

print()
print("The 3-dimensional bialgebra on x, y, z has a unit but no counit:")
e54 = builtin("example54")
particular, kernel = counit_solutions(e54)
print(f"  counit equations force eps = {tuple(map(str, particular))}, "
      f"kernel dim {len(kernel)}")
print(f"  that eps multiplicative? {find_bialgebra_counit(e54) is not None}"
      "  (z*z = 0 forces eps(z) = 0, contradiction)")
