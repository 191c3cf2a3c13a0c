#!/usr/bin/env python3
"""Coinvariant projections of Hopf module coalgebras are Rota-Baxter.

A right H-Hopf module M carries the projection P_R(m) = m_(0)·S(m_(1)) onto
its coinvariants {m : rho(m) = m(x)1}.  When M also has a compatible
comultiplication, (M, P_R) is a Rota-Baxter coalgebra of weight -1, shown
here exactly, matrix by matrix, on two kinds of instances:

  * H as a module over itself (P_R collapses to unit∘counit), and
  * a bialgebra with a projection: C = H⊗H with i(h) = h⊗1 and
    pi(h⊗h') = h eps(h'), where P_R equals the convolution
    Pi = id ⋆ (i∘S∘pi).
"""

from rbhopf import (QQ, Mat, builtin, check_hopf_module_algebra,
                    check_hopf_module_coalgebra, check_rb_bialgebra,
                    coinvariant_projection, convolution,
                    hopf_module_from_projection, pi_operator,
                    regular_hopf_module, tensor_square_projection,
                    verify_projection_rb)

h4 = builtin("sweedler4")
print("H = Sweedler's Hopf algebra acting on itself:")
hm = regular_hopf_module(h4)
p, verdict = verify_projection_rb(hm)
print(f"  P_R == unit.counit: {p == h4.unit.as_column() * h4.counit}")
print(f"  Rota-Baxter of weight -1: {verdict.passed}, "
      f"idempotent: {verdict.idempotent}")

print()
print("C = k[C2] (x) k[C2] as a bialgebra with a projection:")
c2 = builtin("group:C2")
pb = tensor_square_projection(c2)
hm = hopf_module_from_projection(pb)
print(f"  module algebra axioms:   {check_hopf_module_algebra(hm).passed}")
print(f"  module coalgebra axioms: {check_hopf_module_coalgebra(hm).passed}")

pi = pi_operator(pb)
print(f"  Pi = id * (i S pi) equals the generic projection: "
      f"{pi == coinvariant_projection(hm)}")
expected = (c2.unit.as_column() * c2.counit) @ Mat.identity(QQ, 2)
print(f"  closed form Pi(h(x)h') = eps(h) 1(x)h': {pi == expected}")

print()
print("Because C is simultaneously a module algebra and a module coalgebra,")
print("(C, Pi, Pi) is a Rota-Baxter bialgebra of weight (-1, -1):")
v = check_rb_bialgebra(pb.big, pi, pi, -1, -1)
print(f"  algebra side: {v.algebra.passed}, coalgebra side: "
      f"{v.coalgebra.passed}")

print()
print("Convolution sanity on any Hopf algebra: id * S = unit.counit")
for name in ("group:C3", "sweedler4"):
    s = builtin(name)
    eye = Mat.identity(QQ, s.dim)
    print(f"  {name}: "
          f"{convolution(eye, s.antipode, s) == s.unit.as_column() * s.counit}")
