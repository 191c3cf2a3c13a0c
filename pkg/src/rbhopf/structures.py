"""Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.

An `AlgebraicStructure` is a based vector space of finite dimension together
with whichever structure maps it carries: multiplication, comultiplication,
unit, counit, antipode.  Unit and counit are optional independently (the
package works with non-unital algebras and non-counital coalgebras), and
every axiom has an exact checker returning an `AxiomVerdict` whose defect
pinpoints the first violated structure constant.

`builtin` exposes a zoo of verified fixtures: small group algebras, the dual
group algebra of C2, Sweedler's 4-dimensional Hopf algebra, grouplike
coalgebras, and a 3-dimensional bialgebra with a unit but no counit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import ShapeError
from .fields import QQ
from .linalg import Mat, Tensor3, Vec, nullspace, solve_linear
from .tensorops import TermSum


@dataclass(frozen=True)
class DefectReport:
    """Residual of a failed identity.

    `residual` maps (input basis indices..., output basis indices...) to the
    nonzero residual scalar; `witness` is its lexicographically first key.
    """

    identity: str
    residual: dict
    witness: tuple[int, ...]

    def __str__(self):
        return (f"{self.identity} fails at {self.witness} "
                f"({len(self.residual)} nonzero residual entries)")


@dataclass(frozen=True)
class AxiomVerdict:
    passed: bool
    defect: DefectReport | None = None

    def __bool__(self):
        return self.passed


def _verdict(identity: str, residuals) -> AxiomVerdict:
    """Collect per-basis residual TermSums into a verdict.

    `residuals` yields (input index tuple, TermSum) in lexicographic input
    order, which makes the reported witness deterministic.
    """
    entries: dict = {}
    witness = None
    for in_idx, res in residuals:
        for key, val in res.items():
            full = tuple(in_idx) + key
            entries[full] = val
            if witness is None:
                witness = full
    if not entries:
        return AxiomVerdict(True)
    return AxiomVerdict(False, DefectReport(identity, entries, witness))


def _first_failure(parts) -> AxiomVerdict:
    """Run named identity parts in order; the first failure wins."""
    for identity, gen in parts:
        v = _verdict(identity, gen)
        if not v.passed:
            return v
    return AxiomVerdict(True)


def matrix_verdict(identity: str, diff: Mat) -> AxiomVerdict:
    """Verdict from a matrix that should be zero."""
    entries = {}
    witness = None
    for i, row in enumerate(diff.entries):
        for j, v in enumerate(row):
            if v:
                entries[(i, j)] = v
                if witness is None:
                    witness = (i, j)
    if not entries:
        return AxiomVerdict(True)
    return AxiomVerdict(False, DefectReport(identity, entries, witness))


@dataclass(frozen=True)
class AlgebraicStructure:
    """A based space with optional mul/comul/unit/counit/antipode.

    Structure constants: mul[i,j,k] is the e_k coefficient of e_i·e_j,
    comul[i,j,k] the e_j⊗e_k coefficient of Δ(e_i).  The antipode, like all
    maps here, acts on column vectors, so column i is the image of e_i.
    """

    dim: int
    field: object
    mul: Tensor3 | None = None
    comul: Tensor3 | None = None
    unit: Vec | None = None
    counit: Mat | None = None
    antipode: Mat | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ShapeError(f"dimension must be nonnegative, got {n}")
        if self.mul is None and self.comul is None:
            raise ShapeError("a structure needs a multiplication or a comultiplication")
        for t3 in (self.mul, self.comul):
            if t3 is not None and (t3.dims != (n, n, n) or t3.field != self.field):
                raise ShapeError(f"structure constants do not fit dim {n}")
        if self.unit is not None:
            if self.mul is None:
                raise ShapeError("unit requires a multiplication")
            if self.unit.dim != n or self.unit.field != self.field:
                raise ShapeError("unit vector does not fit")
        if self.counit is not None:
            if self.comul is None:
                raise ShapeError("counit requires a comultiplication")
            if (self.counit.rows, self.counit.cols) != (1, n) or \
                    self.counit.field != self.field:
                raise ShapeError("counit must be a 1 x dim map")
        if self.antipode is not None:
            if None in (self.mul, self.comul, self.unit, self.counit):
                raise ShapeError("antipode requires mul, comul, unit and counit")
            if (self.antipode.rows, self.antipode.cols) != (n, n) or \
                    self.antipode.field != self.field:
                raise ShapeError("antipode must be a dim x dim map")
        if self.names is not None and len(self.names) != n:
            raise ShapeError("wrong number of basis names")

    def require(self, attr: str):
        val = getattr(self, attr)
        if val is None:
            raise ValueError(f"structure has no {attr}")
        return val

    def basis_term(self, *idx) -> TermSum:
        return TermSum.basis(self.field, (self.dim,) * len(idx), idx)

    @property
    def kind(self) -> str:
        """The richest kind this structure's maps support."""
        if self.antipode is not None:
            return "hopf"
        if self.mul is not None and self.comul is not None:
            return "bialgebra"
        return "algebra" if self.mul is not None else "coalgebra"


# ---------------------------------------------------------------------------
# Axiom checkers
# ---------------------------------------------------------------------------

def check_associativity(s: AlgebraicStructure) -> AxiomVerdict:
    """(ab)c = a(bc) on all basis triples."""
    mul = s.require("mul")
    n = s.dim

    def residuals():
        for i, j, k in product(range(n), repeat=3):
            t = s.basis_term(i, j, k)
            yield (i, j, k), (t.merge_at(0, mul).merge_at(0, mul)
                              - t.merge_at(1, mul).merge_at(0, mul))

    return _verdict("associativity", residuals())


def check_coassociativity(s: AlgebraicStructure) -> AxiomVerdict:
    """(Δ⊗id)Δ = (id⊗Δ)Δ on all basis vectors."""
    comul = s.require("comul")
    n = s.dim

    def residuals():
        for i in range(n):
            t = s.basis_term(i).split_at(0, comul)
            yield (i,), t.split_at(0, comul) - t.split_at(1, comul)

    return _verdict("coassociativity", residuals())


def check_unit_counit(s: AlgebraicStructure) -> AxiomVerdict:
    """1·a = a·1 = a and (ε⊗id)Δ = (id⊗ε)Δ = id, for the maps present."""
    if s.unit is None and s.counit is None:
        raise ValueError("structure has neither unit nor counit")
    n = s.dim
    parts = []
    if s.unit is not None:
        mul, unit = s.mul, s.unit

        def left_unit():
            for i in range(n):
                t = s.basis_term(i)
                yield (i,), t.insert_at(0, unit).merge_at(0, mul) - t

        def right_unit():
            for i in range(n):
                t = s.basis_term(i)
                yield (i,), t.insert_at(1, unit).merge_at(0, mul) - t

        parts += [("left-unit", left_unit()), ("right-unit", right_unit())]
    if s.counit is not None:
        comul, counit = s.comul, s.counit

        def left_counit():
            for i in range(n):
                t = s.basis_term(i)
                yield (i,), (t.split_at(0, comul).map_at(0, counit).drop_at(0) - t)

        def right_counit():
            for i in range(n):
                t = s.basis_term(i)
                yield (i,), (t.split_at(0, comul).map_at(1, counit).drop_at(1) - t)

        parts += [("left-counit", left_counit()), ("right-counit", right_counit())]
    return _first_failure(parts)


def check_bialgebra(s: AlgebraicStructure) -> AxiomVerdict:
    """Δ and (when present) ε, 1 are compatible with the multiplication.

    Δ(ab) = Δ(a)Δ(b) on basis pairs; if a counit exists, ε(ab) = ε(a)ε(b);
    if a unit exists, Δ(1) = 1⊗1; if both exist, ε(1) = 1.
    """
    mul = s.require("mul")
    comul = s.require("comul")
    n = s.dim
    parts = []

    def comul_mult():
        for i, j in product(range(n), repeat=2):
            t = s.basis_term(i, j)
            lhs = t.merge_at(0, mul).split_at(0, comul)
            rhs = (t.split_at(0, comul).split_at(2, comul)
                   .permute((0, 2, 1, 3)).merge_at(0, mul).merge_at(1, mul))
            yield (i, j), lhs - rhs

    parts.append(("comul-multiplicative", comul_mult()))
    if s.counit is not None:
        counit = s.counit

        def counit_mult():
            for i, j in product(range(n), repeat=2):
                t = s.basis_term(i, j)
                lhs = t.merge_at(0, mul).map_at(0, counit)
                rhs = t.map_at(0, counit).map_at(1, counit).drop_at(1)
                yield (i, j), lhs - rhs

        parts.append(("counit-multiplicative", counit_mult()))
    if s.unit is not None:
        unit = s.unit

        def unit_grouplike():
            t = TermSum.from_vec(unit)
            yield (), t.split_at(0, comul) - t.insert_at(1, unit)

        parts.append(("comul-unit", unit_grouplike()))
    if s.unit is not None and s.counit is not None:
        unit, counit = s.unit, s.counit

        def counit_unit():
            one = TermSum(s.field, (1,), {(0,): s.field.one})
            yield (), TermSum.from_vec(unit).map_at(0, counit) - one

        parts.append(("counit-unit", counit_unit()))
    return _first_failure(parts)


def check_antipode(s: AlgebraicStructure) -> AxiomVerdict:
    """S(a₁)a₂ = ε(a)1 = a₁S(a₂) on all basis vectors."""
    antipode = s.require("antipode")
    mul, comul, unit, counit = s.mul, s.comul, s.unit, s.counit
    n = s.dim

    def side(pos):
        for i in range(n):
            t = s.basis_term(i)
            lhs = t.split_at(0, comul).map_at(pos, antipode).merge_at(0, mul)
            eps = counit[0, i]
            rhs = TermSum.from_vec(unit).scale(eps)
            yield (i,), lhs - rhs

    return _first_failure([("antipode-left", side(0)), ("antipode-right", side(1))])


def check_comodule(hopf: AlgebraicStructure, m_dim: int, coaction: Mat,
                   side: str) -> AxiomVerdict:
    """Coassociativity and (when ε exists) counitality of a coaction.

    Right coactions map M → M⊗H and satisfy
    m₍₀₎⊗m₍₁₎₁⊗m₍₁₎₂ = m₍₀₎₍₀₎⊗m₍₀₎₍₁₎⊗m₍₁₎; left coactions map M → H⊗M and
    satisfy m₍₋₁₎₁⊗m₍₋₁₎₂⊗m₍₀₎ = m₍₋₁₎⊗m₍₀₎₍₋₁₎⊗m₍₀₎₍₀₎.
    """
    comul = hopf.require("comul")
    h = hopf.dim
    _require_side(side)
    out_dims = (m_dim, h) if side == "right" else (h, m_dim)
    if coaction.rows != m_dim * h or coaction.cols != m_dim or \
            coaction.field != hopf.field:
        raise ShapeError(f"coaction must be {m_dim * h} x {m_dim}")

    def coassoc():
        for m in range(m_dim):
            t = TermSum.basis(hopf.field, (m_dim,), (m,))
            rho = t.split_map_at(0, coaction, out_dims)
            if side == "right":
                lhs = rho.split_at(1, comul)
                rhs = rho.split_map_at(0, coaction, out_dims)
            else:
                lhs = rho.split_at(0, comul)
                rhs = rho.split_map_at(1, coaction, out_dims)
            yield (m,), lhs - rhs

    def counital():
        counit = hopf.counit
        for m in range(m_dim):
            t = TermSum.basis(hopf.field, (m_dim,), (m,))
            rho = t.split_map_at(0, coaction, out_dims)
            if side == "right":
                lhs = rho.map_at(1, counit).drop_at(1)
            else:
                lhs = rho.map_at(0, counit).drop_at(0)
            yield (m,), lhs - t

    parts = [(f"{side}-coaction-coassociativity", coassoc())]
    if hopf.counit is not None:
        parts.append((f"{side}-coaction-counital", counital()))
    return _first_failure(parts)


def check_module(hopf: AlgebraicStructure, m_dim: int, action: Mat,
                 side: str) -> AxiomVerdict:
    """Associativity and (when 1 exists) unitality of a module action."""
    mul = hopf.require("mul")
    h = hopf.dim
    _require_side(side)
    cols = m_dim * h if side == "right" else h * m_dim
    if action.rows != m_dim or action.cols != cols or action.field != hopf.field:
        raise ShapeError(f"action must be {m_dim} x {cols}")
    field = hopf.field

    def assoc():
        if side == "right":
            for m, x, y in product(range(m_dim), range(h), range(h)):
                t = TermSum.basis(field, (m_dim, h, h), (m, x, y))
                lhs = t.merge_map_at(0, action).merge_map_at(0, action)
                rhs = t.merge_at(1, mul).merge_map_at(0, action)
                yield (m, x, y), lhs - rhs
        else:
            for x, y, m in product(range(h), range(h), range(m_dim)):
                t = TermSum.basis(field, (h, h, m_dim), (x, y, m))
                lhs = t.merge_map_at(1, action).merge_map_at(0, action)
                rhs = t.merge_at(0, mul).merge_map_at(0, action)
                yield (x, y, m), lhs - rhs

    def unital():
        unit = hopf.unit
        for m in range(m_dim):
            t = TermSum.basis(field, (m_dim,), (m,))
            pos = 1 if side == "right" else 0
            yield (m,), t.insert_at(pos, unit).merge_map_at(0, action) - t

    parts = [(f"{side}-action-associativity", assoc())]
    if hopf.unit is not None:
        parts.append((f"{side}-action-unital", unital()))
    return _first_failure(parts)


def check_bialgebra_map(f: Mat, src: AlgebraicStructure,
                        dst: AlgebraicStructure) -> AxiomVerdict:
    """f preserves mul, comul, unit and counit (all required on both sides)."""
    for s in (src, dst):
        for attr in ("mul", "comul", "unit", "counit"):
            s.require(attr)
    if f.rows != dst.dim or f.cols != src.dim:
        raise ShapeError(f"map must be {dst.dim} x {src.dim}")
    ff = f @ f
    checks = [
        ("map-multiplicative",
         f * src.mul.mul_matrix() - dst.mul.mul_matrix() * ff),
        ("map-comultiplicative",
         dst.comul.comul_matrix() * f - ff * src.comul.comul_matrix()),
        ("map-unit", f * src.unit.as_column() - dst.unit.as_column()),
        ("map-counit", dst.counit * f - src.counit),
    ]
    for name, diff in checks:
        v = matrix_verdict(name, diff)
        if not v.passed:
            return v
    return AxiomVerdict(True)


def _require_side(side: str):
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ---------------------------------------------------------------------------
# Counit solving
# ---------------------------------------------------------------------------

def counit_solutions(s: AlgebraicStructure) -> tuple[Vec | None, list[Vec]]:
    """Affine solution set of the counit equations (ε⊗id)Δ = (id⊗ε)Δ = id.

    Returns (particular solution or None, basis of the homogeneous kernel).
    """
    comul = s.require("comul")
    n = s.dim
    field = s.field
    zero, one = field.zero, field.one
    rows, rhs = [], []
    left = {}   # (i, k) -> coefficient row over ε_j
    right = {}  # (i, j) -> coefficient row over ε_k
    for (i, j, k), v in comul.entries.items():
        row = left.setdefault((i, k), [zero] * n)
        row[j] = row[j] + v
        row = right.setdefault((i, j), [zero] * n)
        row[k] = row[k] + v
    for i, k in product(range(n), repeat=2):
        rows.append(left.get((i, k), [zero] * n))
        rhs.append(one if i == k else zero)
        rows.append(right.get((i, k), [zero] * n))
        rhs.append(one if i == k else zero)
    a = Mat(field, rows, cols=n)
    b = Vec(field, rhs)
    return solve_linear(a, b), nullspace(a)


def find_bialgebra_counit(s: AlgebraicStructure) -> Vec | None:
    """The unique counit making s a counital bialgebra, or None if provably none.

    Counitality is a linear system in ε.  If it is inconsistent, or its
    unique solution is not multiplicative (or sends the unit elsewhere than
    1), no counit exists and None is returned.  A positive-dimensional
    solution space is not decided here.
    """
    s.require("mul")
    particular, kernel = counit_solutions(s)
    if particular is None:
        return None
    if kernel:
        raise NotImplementedError(
            "counit space is positive-dimensional; cannot decide multiplicativity")
    eps = particular.as_row()
    candidate = AlgebraicStructure(s.dim, s.field, mul=s.mul, comul=s.comul,
                                   unit=s.unit, counit=eps)
    if check_bialgebra(candidate).passed and check_unit_counit(candidate).passed:
        return particular
    return None


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------

def tensor_product(a: AlgebraicStructure, b: AlgebraicStructure) -> AlgebraicStructure:
    """The tensor product structure on A ⊗ B (componentwise, no braiding)."""
    if a.field != b.field:
        raise ShapeError("tensor factors live over different fields")
    field = a.field
    da, db = a.dim, b.dim
    n = da * db

    def flat(i, j):
        return i * db + j

    mul = comul = None
    if a.mul is not None and b.mul is not None:
        entries = {}
        for (i1, j1, k1), v1 in a.mul.entries.items():
            for (i2, j2, k2), v2 in b.mul.entries.items():
                key = (flat(i1, i2), flat(j1, j2), flat(k1, k2))
                entries[key] = entries.get(key, field.zero) + v1 * v2
        mul = Tensor3(field, (n, n, n), entries)
    if a.comul is not None and b.comul is not None:
        entries = {}
        for (i1, j1, k1), v1 in a.comul.entries.items():
            for (i2, j2, k2), v2 in b.comul.entries.items():
                key = (flat(i1, i2), flat(j1, j2), flat(k1, k2))
                entries[key] = entries.get(key, field.zero) + v1 * v2
        comul = Tensor3(field, (n, n, n), entries)
    unit = a.unit.tensor(b.unit) if a.unit is not None and b.unit is not None else None
    counit = (a.counit @ b.counit
              if a.counit is not None and b.counit is not None else None)
    antipode = (a.antipode @ b.antipode
                if a.antipode is not None and b.antipode is not None else None)
    names = None
    if a.names is not None and b.names is not None:
        names = tuple(f"{x}*{y}" for x in a.names for y in b.names)
    return AlgebraicStructure(n, field, mul=mul, comul=comul, unit=unit,
                              counit=counit, antipode=antipode, names=names)


# ---------------------------------------------------------------------------
# Builtin fixtures
# ---------------------------------------------------------------------------

def group_algebra(field, table, identity_idx, inverses, names) -> AlgebraicStructure:
    """Group algebra k[G] from a multiplication table of element indices.

    Basis elements are grouplike; the antipode sends g to its inverse.
    """
    n = len(table)
    one = field.one
    mul = Tensor3(field, (n, n, n),
                  {(i, j, table[i][j]): one for i in range(n) for j in range(n)})
    comul = Tensor3(field, (n, n, n), {(i, i, i): one for i in range(n)})
    unit = Vec.basis(field, n, identity_idx)
    counit = Mat(field, ((one,) * n,))
    antipode = Mat.from_function(
        field, n, n, lambda i, j: one if i == inverses[j] else field.zero)
    return AlgebraicStructure(n, field, mul=mul, comul=comul, unit=unit,
                              counit=counit, antipode=antipode,
                              names=tuple(names))


def cyclic_group_algebra(field, order: int) -> AlgebraicStructure:
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    inverses = [(-i) % order for i in range(order)]
    names = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, order)]
    return group_algebra(field, table, 0, inverses, names)


def _perm_cycle_name(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def symmetric_group_algebra(field, points: int) -> AlgebraicStructure:
    elements = sorted(permutations(range(points)))
    index = {p: i for i, p in enumerate(elements)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(points))
    table = [[index[compose(p, q)] for q in elements] for p in elements]
    inverses = [index[tuple(sorted(range(points), key=lambda i: p[i]))]
                for p in elements]
    names = [_perm_cycle_name(p) for p in elements]
    return group_algebra(field, table, index[tuple(range(points))], inverses, names)


def sweedler_hopf_algebra(field) -> AlgebraicStructure:
    """Sweedler's 4-dimensional Hopf algebra on 1, g, x, gx.

    g² = 1, x² = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x; the antipode
    has S² ≠ id, which makes it the smallest genuinely noncommutative,
    noncocommutative test case.
    """
    one = field.one
    mul = {}
    for i in range(4):
        mul[(0, i, i)] = one
        mul[(i, 0, i)] = one
    mul[(1, 1, 0)] = one    # g g = 1
    mul[(1, 2, 3)] = one    # g x = gx
    mul[(1, 3, 2)] = one    # g gx = x
    mul[(2, 1, 3)] = -one   # x g = -gx
    mul[(3, 1, 2)] = -one   # gx g = -x
    comul = {
        (0, 0, 0): one,                   # Δ1 = 1⊗1
        (1, 1, 1): one,                   # Δg = g⊗g
        (2, 2, 0): one, (2, 1, 2): one,   # Δx = x⊗1 + g⊗x
        (3, 3, 1): one, (3, 0, 3): one,   # Δgx = gx⊗g + 1⊗gx
    }
    zero = field.zero
    antipode = Mat(field, (
        (one, zero, zero, zero),
        (zero, one, zero, zero),
        (zero, zero, zero, one),
        (zero, zero, -one, zero),
    ))  # S(x) = -gx, S(gx) = x
    return AlgebraicStructure(
        4, field,
        mul=Tensor3(field, (4, 4, 4), mul),
        comul=Tensor3(field, (4, 4, 4), comul),
        unit=Vec.basis(field, 4, 0),
        counit=Mat(field, ((one, one, zero, zero),)),
        antipode=antipode,
        names=("1", "g", "x", "gx"))


def example54_bialgebra(field) -> AlgebraicStructure:
    """3-dimensional bialgebra on x, y, z with a unit but provably no counit.

    x² = x, y² = y, z² = 0, xy = yx = y, yz = z, xz = zx = z, zy = 0, and
    every basis element is grouplike.  x is a two-sided unit; the unique
    solution of the counit equations fails multiplicativity on z.
    """
    one = field.one
    mul = {
        (0, 0, 0): one, (1, 1, 1): one,
        (0, 1, 1): one, (1, 0, 1): one,
        (1, 2, 2): one,
        (0, 2, 2): one, (2, 0, 2): one,
    }
    comul = {(i, i, i): one for i in range(3)}
    return AlgebraicStructure(
        3, field,
        mul=Tensor3(field, (3, 3, 3), mul),
        comul=Tensor3(field, (3, 3, 3), comul),
        unit=Vec.basis(field, 3, 0),
        names=("x", "y", "z"))


def dual_cyclic2(field) -> AlgebraicStructure:
    """Functions on C2 with pointwise product: the dual of k[C2]."""
    one, zero = field.one, field.zero
    mul = Tensor3(field, (2, 2, 2), {(0, 0, 0): one, (1, 1, 1): one})
    comul = Tensor3(field, (2, 2, 2), {
        (0, 0, 0): one, (0, 1, 1): one,
        (1, 0, 1): one, (1, 1, 0): one,
    })
    return AlgebraicStructure(
        2, field, mul=mul, comul=comul,
        unit=Vec(field, (one, one)),
        counit=Mat(field, ((one, zero),)),
        antipode=Mat.identity(field, 2),
        names=("d1", "dg"))


def grouplike_coalgebra(field, dim: int) -> AlgebraicStructure:
    """The coalgebra with Δ(e_i) = e_i⊗e_i and ε = 1 (no multiplication)."""
    one = field.one
    comul = Tensor3(field, (dim, dim, dim), {(i, i, i): one for i in range(dim)})
    return AlgebraicStructure(dim, field, comul=comul,
                              counit=Mat(field, ((one,) * dim,)))


def trivial_hopf_algebra(field) -> AlgebraicStructure:
    """The ground field as a 1-dimensional Hopf algebra."""
    one = field.one
    return AlgebraicStructure(
        1, field,
        mul=Tensor3(field, (1, 1, 1), {(0, 0, 0): one}),
        comul=Tensor3(field, (1, 1, 1), {(0, 0, 0): one}),
        unit=Vec(field, (one,)),
        counit=Mat(field, ((one,),)),
        antipode=Mat.identity(field, 1),
        names=("1",))


_BUILTINS = {
    "group:C2": lambda field: cyclic_group_algebra(field, 2),
    "group:C3": lambda field: cyclic_group_algebra(field, 3),
    "group:S3": lambda field: symmetric_group_algebra(field, 3),
    "sweedler4": sweedler_hopf_algebra,
    "example54": example54_bialgebra,
    "dual-group:C2": dual_cyclic2,
    "trivial": trivial_hopf_algebra,
}

_builtin_cache: dict = {}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS) + ["grouplike:<n>"]


def builtin(name: str, field=QQ) -> AlgebraicStructure:
    """A verified fixture by name; see `builtin_names`.

    All applicable axiom checks are run once per (name, field) and must
    pass; instances are cached and shared (they are immutable).
    """
    key = (name, field)
    if key in _builtin_cache:
        return _builtin_cache[key]
    if name.startswith("grouplike:"):
        dim = int(name.split(":", 1)[1])
        if dim < 1:
            raise ValueError(f"grouplike dimension must be positive, got {dim}")
        s = grouplike_coalgebra(field, dim)
    elif name in _BUILTINS:
        s = _BUILTINS[name](field)
    else:
        raise ValueError(f"unknown builtin {name!r}")
    _assert_axioms(name, s)
    _builtin_cache[key] = s
    return s


def _assert_axioms(name: str, s: AlgebraicStructure):
    checks = []
    if s.mul is not None:
        checks.append(check_associativity(s))
    if s.comul is not None:
        checks.append(check_coassociativity(s))
    if s.unit is not None or s.counit is not None:
        checks.append(check_unit_counit(s))
    if s.mul is not None and s.comul is not None:
        checks.append(check_bialgebra(s))
    if s.antipode is not None:
        checks.append(check_antipode(s))
    for v in checks:
        if not v.passed:
            raise AssertionError(f"builtin {name} fails {v.defect}")


# Rota-Baxter operator families on the example54 fixture, one column per
# basis vector x, y, z.

def example54_p1(a, b, field=QQ) -> Mat:
    """P(x) = a·z, P(y) = b·z, P(z) = 0."""
    zero = field.zero
    return Mat(field, ((zero, zero, zero),
                       (zero, zero, zero),
                       (field.coerce(a), field.coerce(b), zero)))


def example54_p2(c, field=QQ) -> Mat:
    """P(x) = -c·x - c·y, P(y) = -c·y, P(z) = -c·z."""
    zero = field.zero
    c = field.coerce(c)
    return Mat(field, ((-c, zero, zero),
                       (-c, -c, zero),
                       (zero, zero, -c)))


def example54_q(d, field=QQ) -> Mat:
    """Q(x) = Q(y) = d·z, Q(z) = 0."""
    zero = field.zero
    d = field.coerce(d)
    return Mat(field, ((zero, zero, zero),
                       (zero, zero, zero),
                       (d, d, zero)))
