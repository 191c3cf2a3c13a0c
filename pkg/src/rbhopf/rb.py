"""Rota-Baxter operator verification and exhaustive finite-field search.

An operator P on an algebra has weight λ when
P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy); dually, Q on a coalgebra has
weight γ when Q(c₁)⊗Q(c₂) = Q(c)₁⊗Q(Q(c)₂) + Q(Q(c)₁)⊗Q(c)₂ + γQ(c)₁⊗Q(c)₂.
A bialgebra carrying both is checked one side at a time.  Weights are
explicit inputs everywhere: Q = 0 passes for every weight, so inferring one
silently would be ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError, ShapeError
from .fields import PrimeField
from .linalg import Mat
from .structures import AlgebraicStructure, DefectReport, _verdict


@dataclass(frozen=True)
class RBVerdict:
    passed: bool
    weight: object
    side: str
    defect: DefectReport | None = None
    idempotent: bool | None = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class RBBialgebraVerdict:
    algebra: RBVerdict
    coalgebra: RBVerdict

    @property
    def passed(self) -> bool:
        return self.algebra.passed and self.coalgebra.passed

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class SearchResult:
    field: PrimeField
    dim: int
    side: str
    weight: object
    operators: tuple[Mat, ...]
    candidates_scanned: int


def _check_operator_shape(s: AlgebraicStructure, op: Mat):
    if op.field != s.field:
        raise ShapeError("operator field does not match the structure")
    if (op.rows, op.cols) != (s.dim, s.dim):
        raise ShapeError(f"operator must be {s.dim} x {s.dim}")


def check_rb_algebra(s: AlgebraicStructure, p: Mat, weight) -> RBVerdict:
    """Does P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy) hold on all basis pairs?"""
    mul = s.require("mul")
    _check_operator_shape(s, p)
    lam = s.field.coerce(weight)
    n = s.dim

    def residuals():
        for i, j in product(range(n), repeat=2):
            t = s.basis_term(i, j)
            lhs = t.map_at(0, p).map_at(1, p).merge_at(0, mul)
            r1 = t.map_at(1, p).merge_at(0, mul).map_at(0, p)
            r2 = t.map_at(0, p).merge_at(0, mul).map_at(0, p)
            r3 = t.merge_at(0, mul).map_at(0, p).scale(lam)
            yield (i, j), lhs - r1 - r2 - r3

    v = _verdict("rb-algebra", residuals())
    return RBVerdict(v.passed, lam, "algebra", v.defect)


def check_rb_coalgebra(s: AlgebraicStructure, q: Mat, weight,
                       report_idempotency: bool = False) -> RBVerdict:
    """Does (Q⊗Q)Δ = (id⊗Q)ΔQ + (Q⊗id)ΔQ + γΔQ hold on all basis vectors?"""
    comul = s.require("comul")
    _check_operator_shape(s, q)
    gamma = s.field.coerce(weight)
    n = s.dim

    def residuals():
        for i in range(n):
            t = s.basis_term(i)
            lhs = t.split_at(0, comul).map_at(0, q).map_at(1, q)
            dq = t.map_at(0, q).split_at(0, comul)
            yield (i,), lhs - dq.map_at(1, q) - dq.map_at(0, q) - dq.scale(gamma)

    v = _verdict("rb-coalgebra", residuals())
    idem = (q * q == q) if report_idempotency else None
    return RBVerdict(v.passed, gamma, "coalgebra", v.defect, idem)


def check_rb_bialgebra(s: AlgebraicStructure, p: Mat, q: Mat,
                       algebra_weight, coalgebra_weight) -> RBBialgebraVerdict:
    """Both Rota-Baxter conditions on one bialgebra, reported per side."""
    s.require("mul")
    s.require("comul")
    return RBBialgebraVerdict(
        algebra=check_rb_algebra(s, p, algebra_weight),
        coalgebra=check_rb_coalgebra(s, q, coalgebra_weight))


def search_rb_operators(s: AlgebraicStructure, side: str, weight,
                        idempotent_only: bool = False,
                        budget: int = 10 ** 8) -> SearchResult:
    """All dim×dim matrices over F_p satisfying the Rota-Baxter condition.

    Candidates are enumerated in lexicographic order of their row-major
    entry tuples, so the result order is deterministic; the zero operator
    always appears.  `idempotent_only` additionally requires Q² = Q.
    """
    field = s.field
    if not isinstance(field, PrimeField):
        raise ValueError("exhaustive search needs a structure over a prime field")
    if side == "algebra":
        check = lambda op: check_rb_algebra(s, op, weight).passed
        s.require("mul")
    elif side == "coalgebra":
        check = lambda op: check_rb_coalgebra(s, op, weight).passed
        s.require("comul")
    else:
        raise ValueError(f"side must be 'algebra' or 'coalgebra', got {side!r}")
    n = s.dim
    total = field.p ** (n * n)
    if total > budget:
        raise BudgetExceededError(
            f"{total} candidates exceed the budget of {budget}")
    found = []
    for flat in product(range(field.p), repeat=n * n):
        op = Mat(field, tuple(flat[i * n:(i + 1) * n] for i in range(n)), cols=n)
        if idempotent_only and op * op != op:
            continue
        if check(op):
            found.append(op)
    return SearchResult(field, n, side, field.coerce(weight),
                        tuple(found), total)
