#!/usr/bin/env python3
"""From Rota-Baxter coalgebras to pre-Lie coalgebras.

A comultiplication is pre-Lie when its coassociator
(Delta(x)id)Delta - (id(x)Delta)Delta is symmetric in the first two tensor
slots.  A Rota-Baxter operator Q of weight -1 induces

    Delta~(c) = Q(c1)(x)c2 - Q(c2)(x)c1 - c1(x)c2,

one of weight 0 the same without the last term, and both are pre-Lie.  The
constructors gate on the Rota-Baxter hypothesis and then certify the
conclusion.
"""

from rbhopf import (Mat, PreconditionError, QQ, adjoint_yd, builtin,
                    check_pre_lie, example54_q, prelie_from_rb_minus1,
                    prelie_from_rb_zero, smash_coproduct,
                    smash_hopf_module_right)

print("Weight -1, Q = id on Sweedler's Hopf algebra:")
h4 = builtin("sweedler4")
plc = prelie_from_rb_minus1(h4, Mat.identity(QQ, 4))
print(f"  Delta~ = -flip(Delta): "
      f"{sorted(plc.comul.entries) == sorted((i, k, j) for i, j, k in h4.comul.entries)}")
print(f"  pre-Lie: {check_pre_lie(plc.comul).passed}")

print()
print("Weight -1 from a smash-coproduct projection (dim 16):")
ydc = adjoint_yd(h4)
smash = smash_coproduct(ydc)
_, pr, verdict = smash_hopf_module_right(ydc)
plc = prelie_from_rb_minus1(smash, pr)
print(f"  P_R is Rota-Baxter ({verdict.passed}); derived Delta~ is pre-Lie: "
      f"{check_pre_lie(plc.comul).passed} "
      f"({len(plc.comul.entries)} structure constants)")

print()
print("The gates refuse operators of the wrong weight:")
e54 = builtin("example54")
try:
    prelie_from_rb_minus1(e54, example54_q(3))
except PreconditionError as exc:
    print(f"  Q of weight 3 into the weight -1 gate: {exc}")

print()
print("Weight 0: Q(d) families and the zero operator:")
plc = prelie_from_rb_zero(e54, example54_q(0))
print(f"  d = 0 gives Delta~ = 0: {plc.comul.is_zero()}")
