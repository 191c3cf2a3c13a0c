"""Hopf modules, Hopf module (co)algebras, and coinvariant projections.

A right H-Hopf module is a simultaneous module and comodule satisfying
ρ(m·h) = ρ(m)Δ(h); its coinvariant projection P_R(m) = m₍₀₎·S(m₍₁₎) (left
variant P_L(m) = S(m₍₋₁₎)·m₍₀₎) is idempotent onto the coinvariants.  When
the module also carries a compatible comultiplication (a Hopf module
coalgebra), P_R is a Rota-Baxter operator of weight -1; that fact is
executable here as `verify_projection_rb`.

A bialgebra C with a projection onto a Hopf algebra H (bialgebra maps
i: H→C, π: C→H, π∘i = id) becomes such a module via c·h = c·i(h) and
ρ(c) = c₁⊗π(c₂); the associated projection is the convolution
Π = id ⋆ (i∘S∘π).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError, ShapeError
from .linalg import Mat, Tensor3
from .rb import RBVerdict, check_rb_coalgebra
from .structures import (AlgebraicStructure, AxiomVerdict, _first_failure,
                         check_bialgebra_map, check_coassociativity,
                         check_comodule, check_module, tensor_product)
from .tensorops import TermSum


@dataclass(frozen=True)
class HopfModule:
    """A (left or right) H-module-and-comodule, with optional extra structure.

    Shapes for side="right": action M⊗H→M, coaction M→M⊗H; for side="left":
    action H⊗M→M, coaction M→H⊗M.  `mul`/`comul` are an optional
    multiplication/comultiplication carried by M itself, used by the Hopf
    module algebra/coalgebra compatibility checks.
    """

    hopf: AlgebraicStructure
    m_dim: int
    action: Mat
    coaction: Mat
    side: str
    mul: Tensor3 | None = None
    comul: Tensor3 | None = None

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ShapeError(f"side must be 'left' or 'right', got {self.side!r}")
        h, m = self.hopf.dim, self.m_dim
        if m < 0:
            raise ShapeError("module dimension must be nonnegative")
        if (self.action.rows, self.action.cols) != (m, m * h):
            raise ShapeError(f"action must be {m} x {m * h}")
        if (self.coaction.rows, self.coaction.cols) != (m * h, m):
            raise ShapeError(f"coaction must be {m * h} x {m}")
        for comp in (self.action, self.coaction, self.mul, self.comul):
            if comp is not None and comp.field != self.hopf.field:
                raise ShapeError("module components live over different fields")
        for t3 in (self.mul, self.comul):
            if t3 is not None and t3.dims != (m, m, m):
                raise ShapeError("extra structure constants do not fit the module")

    @property
    def field(self):
        return self.hopf.field

    def coaction_dims(self) -> tuple[int, int]:
        return ((self.m_dim, self.hopf.dim) if self.side == "right"
                else (self.hopf.dim, self.m_dim))

    def as_coalgebra(self) -> AlgebraicStructure:
        """M with its own comultiplication, forgetting the Hopf action."""
        if self.comul is None:
            raise ValueError("module carries no comultiplication")
        return AlgebraicStructure(self.m_dim, self.field, comul=self.comul)


def regular_hopf_module(hopf: AlgebraicStructure, side: str = "right") -> HopfModule:
    """H acting and coacting on itself by its multiplication and Δ."""
    mul = hopf.require("mul")
    comul = hopf.require("comul")
    return HopfModule(hopf, hopf.dim, mul.mul_matrix(), comul.comul_matrix(),
                      side, mul=mul, comul=comul)


def check_hopf_module(hm: HopfModule) -> AxiomVerdict:
    """Module axioms, comodule axioms, and ρ(m·h) = ρ(m)Δ(h) (or the left analogue)."""
    v = check_module(hm.hopf, hm.m_dim, hm.action, hm.side)
    if not v.passed:
        return v
    v = check_comodule(hm.hopf, hm.m_dim, hm.coaction, hm.side)
    if not v.passed:
        return v
    hopf = hm.hopf
    comul = hopf.require("comul")
    mul = hopf.require("mul")
    field = hm.field
    m_dim, h = hm.m_dim, hopf.dim
    out_dims = hm.coaction_dims()

    def compat():
        if hm.side == "right":
            for m, x in product(range(m_dim), range(h)):
                t = TermSum.basis(field, (m_dim, h), (m, x))
                lhs = t.merge_map_at(0, hm.action).split_map_at(
                    0, hm.coaction, out_dims)
                rhs = (t.split_at(1, comul)
                       .split_map_at(0, hm.coaction, out_dims)
                       .permute((0, 2, 1, 3))
                       .merge_map_at(0, hm.action)
                       .merge_at(1, mul))
                yield (m, x), lhs - rhs
        else:
            for x, m in product(range(h), range(m_dim)):
                t = TermSum.basis(field, (h, m_dim), (x, m))
                lhs = t.merge_map_at(0, hm.action).split_map_at(
                    0, hm.coaction, out_dims)
                rhs = (t.split_at(0, comul)
                       .split_map_at(2, hm.coaction, out_dims)
                       .permute((0, 2, 1, 3))
                       .merge_at(0, mul)
                       .merge_map_at(1, hm.action))
                yield (x, m), lhs - rhs

    return _first_failure([(f"{hm.side}-hopf-module-compatibility", compat())])


def check_hopf_module_algebra(hm: HopfModule) -> AxiomVerdict:
    """Hopf module whose own multiplication is action- and coaction-compatible.

    Right side: (mm')·h = m(m'·h) and ρ(mm') = m₍₀₎m'₍₀₎ ⊗ m₍₁₎m'₍₁₎.
    Left side: h·(mm') = (h·m)m' and ρ(mm') = m₍₋₁₎m'₍₋₁₎ ⊗ m₍₀₎m'₍₀₎.
    """
    if hm.mul is None:
        raise ValueError("module carries no multiplication")
    v = check_hopf_module(hm)
    if not v.passed:
        return v
    mmul = hm.mul
    hmul = hm.hopf.require("mul")
    field = hm.field
    m_dim, h = hm.m_dim, hm.hopf.dim
    out_dims = hm.coaction_dims()

    def action_compat():
        if hm.side == "right":
            for m1, m2, x in product(range(m_dim), range(m_dim), range(h)):
                t = TermSum.basis(field, (m_dim, m_dim, h), (m1, m2, x))
                lhs = t.merge_at(0, mmul).merge_map_at(0, hm.action)
                rhs = t.merge_map_at(1, hm.action).merge_at(0, mmul)
                yield (m1, m2, x), lhs - rhs
        else:
            for x, m1, m2 in product(range(h), range(m_dim), range(m_dim)):
                t = TermSum.basis(field, (h, m_dim, m_dim), (x, m1, m2))
                lhs = t.merge_at(1, mmul).merge_map_at(0, hm.action)
                rhs = t.merge_map_at(0, hm.action).merge_at(0, mmul)
                yield (x, m1, m2), lhs - rhs

    def coaction_compat():
        for m1, m2 in product(range(m_dim), repeat=2):
            t = TermSum.basis(field, (m_dim, m_dim), (m1, m2))
            lhs = t.merge_at(0, mmul).split_map_at(0, hm.coaction, out_dims)
            both = (t.split_map_at(0, hm.coaction, out_dims)
                    .split_map_at(2, hm.coaction, out_dims))
            if hm.side == "right":
                rhs = both.permute((0, 2, 1, 3)).merge_at(0, mmul).merge_at(1, hmul)
            else:
                rhs = both.permute((0, 2, 1, 3)).merge_at(0, hmul).merge_at(1, mmul)
            yield (m1, m2), lhs - rhs

    return _first_failure([
        (f"{hm.side}-module-algebra-action", action_compat()),
        (f"{hm.side}-module-algebra-coaction", coaction_compat()),
    ])


def check_hopf_module_coalgebra(hm: HopfModule) -> AxiomVerdict:
    """Hopf module whose own Δ is action- and coaction-compatible.

    Right side: m₍₀₎₁ ⊗ m₍₀₎₂ ⊗ m₍₁₎ = m₁ ⊗ m₂₍₀₎ ⊗ m₂₍₁₎ and
    Δ(m·h) = m₁·h₁ ⊗ m₂·h₂.  Left side: m₍₋₁₎ ⊗ m₍₀₎₁ ⊗ m₍₀₎₂ =
    m₁₍₋₁₎ ⊗ m₁₍₀₎ ⊗ m₂ and Δ(h·m) = h₁·m₁ ⊗ h₂·m₂.
    """
    if hm.comul is None:
        raise ValueError("module carries no comultiplication")
    v = check_hopf_module(hm)
    if not v.passed:
        return v
    v = check_coassociativity(hm.as_coalgebra())
    if not v.passed:
        return v
    mcomul = hm.comul
    hcomul = hm.hopf.require("comul")
    field = hm.field
    m_dim, h = hm.m_dim, hm.hopf.dim
    out_dims = hm.coaction_dims()

    def coaction_compat():
        for m in range(m_dim):
            t = TermSum.basis(field, (m_dim,), (m,))
            if hm.side == "right":
                lhs = t.split_map_at(0, hm.coaction, out_dims).split_at(0, mcomul)
                rhs = t.split_at(0, mcomul).split_map_at(1, hm.coaction, out_dims)
            else:
                lhs = t.split_map_at(0, hm.coaction, out_dims).split_at(1, mcomul)
                rhs = t.split_at(0, mcomul).split_map_at(0, hm.coaction, out_dims)
            yield (m,), lhs - rhs

    def action_compat():
        if hm.side == "right":
            for m, x in product(range(m_dim), range(h)):
                t = TermSum.basis(field, (m_dim, h), (m, x))
                lhs = t.merge_map_at(0, hm.action).split_at(0, mcomul)
                rhs = (t.split_at(0, mcomul).split_at(2, hcomul)
                       .permute((0, 2, 1, 3))
                       .merge_map_at(0, hm.action).merge_map_at(1, hm.action))
                yield (m, x), lhs - rhs
        else:
            for x, m in product(range(h), range(m_dim)):
                t = TermSum.basis(field, (h, m_dim), (x, m))
                lhs = t.merge_map_at(0, hm.action).split_at(0, mcomul)
                rhs = (t.split_at(0, hcomul).split_at(2, mcomul)
                       .permute((0, 2, 1, 3))
                       .merge_map_at(0, hm.action).merge_map_at(1, hm.action))
                yield (x, m), lhs - rhs

    return _first_failure([
        (f"{hm.side}-module-coalgebra-coaction", coaction_compat()),
        (f"{hm.side}-module-coalgebra-action", action_compat()),
    ])


def coinvariant_projection(hm: HopfModule) -> Mat:
    """P_R(m) = m₍₀₎·S(m₍₁₎) for right modules, P_L(m) = S(m₍₋₁₎)·m₍₀₎ for left.

    For a valid Hopf module this is the idempotent projection onto the
    coinvariants {m : ρ(m) = m⊗1} (resp. {m : ρ(m) = 1⊗m}).
    """
    antipode = hm.hopf.require("antipode")
    eye = Mat.identity(hm.field, hm.m_dim)
    if hm.side == "right":
        return hm.action * (eye @ antipode) * hm.coaction
    return hm.action * (antipode @ eye) * hm.coaction


def verify_projection_rb(hm: HopfModule) -> tuple[Mat, RBVerdict]:
    """Certify the coinvariant projection as a weight -1 Rota-Baxter operator.

    Requires a Hopf module coalgebra; returns the projection matrix and the
    Rota-Baxter verdict (with idempotency reported) for M's comultiplication.
    """
    v = check_hopf_module_coalgebra(hm)
    if not v.passed:
        raise PreconditionError(f"not a Hopf module coalgebra: {v.defect}")
    p = coinvariant_projection(hm)
    verdict = check_rb_coalgebra(hm.as_coalgebra(), p, -1,
                                 report_idempotency=True)
    return p, verdict


def convolution(f: Mat, g: Mat, s: AlgebraicStructure) -> Mat:
    """(f ⋆ g)(c) = f(c₁)·g(c₂) on endomorphisms of a bialgebra."""
    mul = s.require("mul")
    comul = s.require("comul")
    for op in (f, g):
        if (op.rows, op.cols) != (s.dim, s.dim) or op.field != s.field:
            raise ShapeError(f"convolution operands must be {s.dim} x {s.dim}")
    return mul.mul_matrix() * (f @ g) * comul.comul_matrix()


@dataclass(frozen=True)
class ProjectionBialgebra:
    """A bialgebra C with bialgebra maps i: H→C, π: C→H and π∘i = id_H."""

    big: AlgebraicStructure
    hopf: AlgebraicStructure
    embed: Mat
    project: Mat


def projection_bialgebra(big: AlgebraicStructure, hopf: AlgebraicStructure,
                         embed: Mat, project: Mat) -> ProjectionBialgebra:
    """Validated constructor; raises PreconditionError on any failed invariant."""
    hopf.require("antipode")
    for name, f, src, dst in (("i", embed, hopf, big), ("pi", project, big, hopf)):
        v = check_bialgebra_map(f, src, dst)
        if not v.passed:
            raise PreconditionError(f"{name} is not a bialgebra map: {v.defect}")
    if project * embed != Mat.identity(hopf.field, hopf.dim):
        raise PreconditionError("pi∘i is not the identity on H")
    return ProjectionBialgebra(big, hopf, embed, project)


def hopf_module_from_projection(pb: ProjectionBialgebra,
                                side: str = "right") -> HopfModule:
    """The Hopf module on C given by a bialgebra with a projection.

    Right side: c·h = c·i(h) and ρ(c) = c₁⊗π(c₂); left side: h·c = i(h)·c
    and ρ(c) = π(c₁)⊗c₂.  C's own multiplication and comultiplication ride
    along, so the result supports both the module algebra and the module
    coalgebra checks.
    """
    big, hopf = pb.big, pb.hopf
    eye = Mat.identity(big.field, big.dim)
    if side == "right":
        action = big.mul.mul_matrix() * (eye @ pb.embed)
        coaction = (eye @ pb.project) * big.comul.comul_matrix()
    else:
        action = big.mul.mul_matrix() * (pb.embed @ eye)
        coaction = (pb.project @ eye) * big.comul.comul_matrix()
    return HopfModule(hopf, big.dim, action, coaction, side,
                      mul=big.mul, comul=big.comul)


def pi_operator(pb: ProjectionBialgebra, side: str = "right") -> Mat:
    """The convolution form of the coinvariant projection.

    Π = id_C ⋆ (i∘S∘π) on the right, (i∘S∘π) ⋆ id_C on the left.
    """
    eye = Mat.identity(pb.big.field, pb.big.dim)
    isp = pb.embed * pb.hopf.antipode * pb.project
    if side == "right":
        return convolution(eye, isp, pb.big)
    return convolution(isp, eye, pb.big)


def tensor_square_projection(hopf: AlgebraicStructure) -> ProjectionBialgebra:
    """H⊗H with i(h) = h⊗1 and π(h⊗h') = h·ε(h')."""
    big = tensor_product(hopf, hopf)
    eye = Mat.identity(hopf.field, hopf.dim)
    embed = eye @ hopf.require("unit").as_column()
    project = eye @ hopf.require("counit")
    return projection_bialgebra(big, hopf, embed, project)
