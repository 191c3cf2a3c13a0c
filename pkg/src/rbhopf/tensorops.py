"""Sparse evaluation of Sweedler-style tensor expressions.

Identities such as Δ(m·h) = m₁·h₁ ⊗ m₂·h₂ are verified by expanding both
sides on basis elements.  A `TermSum` is a linear combination of basis
tensors e_{i1}⊗...⊗e_{ik} of a fixed factor shape; its methods rewrite one
factor at a time (apply a linear map, split through a comultiplication or
coaction, merge through a multiplication or action, contract a pair through
a bilinear form, permute factors), which is exactly the vocabulary those
identities are written in.

Structure constants are sparse, so a chain of rewrites stays sparse: the
fan-out of each step is bounded by the nonzero count of the map applied.
"""

from __future__ import annotations

from .errors import FieldMismatchError, ShapeError
from .linalg import Mat, Tensor3, Vec, flatten_index


class TermSum:
    """A sparse element of V_{d1} ⊗ ... ⊗ V_{dk}, keyed by basis multi-index."""

    __slots__ = ("field", "dims", "terms")

    def __init__(self, field, dims, terms):
        coerce = field.coerce
        clean = {}
        dims = tuple(dims)
        for key, val in terms.items():
            if len(key) != len(dims) or any(
                    not 0 <= i < d for i, d in zip(key, dims)):
                raise ShapeError(f"key {key} out of range for dims {dims}")
            val = coerce(val)
            if val:
                clean[key] = val
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TermSum is immutable")

    @classmethod
    def basis(cls, field, dims, idx) -> "TermSum":
        return cls(field, dims, {tuple(idx): field.one})

    @classmethod
    def from_vec(cls, vec: Vec) -> "TermSum":
        return cls(vec.field, (vec.dim,),
                   {(i,): v for i, v in enumerate(vec.entries) if v})

    def _factor_dim(self, pos: int) -> int:
        if not 0 <= pos < len(self.dims):
            raise ShapeError(f"factor {pos} out of range for shape {self.dims}")
        return self.dims[pos]

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed fields {self.field!r} and {other.field!r}")

    def map_at(self, pos: int, m: Mat) -> "TermSum":
        """Apply a linear map to factor `pos`."""
        self._check_field(m)
        if m.cols != self._factor_dim(pos):
            raise ShapeError(
                f"map with {m.cols} columns applied to factor of dim {self.dims[pos]}")
        out: dict = {}
        ment = m.entries
        for key, val in self.terms.items():
            j = key[pos]
            for i in range(m.rows):
                a = ment[i][j]
                if not a:
                    continue
                nk = key[:pos] + (i,) + key[pos + 1:]
                out[nk] = out.get(nk, self.field.zero) + a * val
        dims = self.dims[:pos] + (m.rows,) + self.dims[pos + 1:]
        return TermSum(self.field, dims, out)

    def split_at(self, pos: int, comul: Tensor3) -> "TermSum":
        """Replace factor `pos` by two factors through a comultiplication."""
        self._check_field(comul)
        d, a, b = comul.dims
        if d != self._factor_dim(pos):
            raise ShapeError(
                f"comultiplication of dim {d} applied to factor of dim {self.dims[pos]}")
        fan = comul.by_first()
        out: dict = {}
        for key, val in self.terms.items():
            for j, k, coeff in fan.get(key[pos], ()):
                nk = key[:pos] + (j, k) + key[pos + 1:]
                out[nk] = out.get(nk, self.field.zero) + coeff * val
        dims = self.dims[:pos] + (a, b) + self.dims[pos + 1:]
        return TermSum(self.field, dims, out)

    def split_map_at(self, pos: int, m: Mat, out_dims: tuple[int, int]) -> "TermSum":
        """Replace factor `pos` by two factors through a map V → A ⊗ B."""
        self._check_field(m)
        a, b = out_dims
        if m.rows != a * b or m.cols != self._factor_dim(pos):
            raise ShapeError(
                f"{m.rows}x{m.cols} map does not send dim {self.dims[pos]} to {a}x{b}")
        out: dict = {}
        ment = m.entries
        for key, val in self.terms.items():
            j = key[pos]
            for flat in range(m.rows):
                coeff = ment[flat][j]
                if not coeff:
                    continue
                u, v = divmod(flat, b)
                nk = key[:pos] + (u, v) + key[pos + 1:]
                out[nk] = out.get(nk, self.field.zero) + coeff * val
        dims = self.dims[:pos] + (a, b) + self.dims[pos + 1:]
        return TermSum(self.field, dims, out)

    def merge_at(self, pos: int, mul: Tensor3) -> "TermSum":
        """Combine factors `pos`, `pos+1` through a multiplication."""
        self._check_field(mul)
        a, b, c = mul.dims
        if pos + 1 >= len(self.dims):
            raise ShapeError(f"no factor pair at {pos} in shape {self.dims}")
        if (a, b) != (self.dims[pos], self.dims[pos + 1]):
            raise ShapeError(
                f"multiplication {mul.dims} applied to factors "
                f"({self.dims[pos]},{self.dims[pos + 1]})")
        fan = mul.by_pair()
        out: dict = {}
        for key, val in self.terms.items():
            for k, coeff in fan.get((key[pos], key[pos + 1]), ()):
                nk = key[:pos] + (k,) + key[pos + 2:]
                out[nk] = out.get(nk, self.field.zero) + coeff * val
        dims = self.dims[:pos] + (c,) + self.dims[pos + 2:]
        return TermSum(self.field, dims, out)

    def merge_map_at(self, pos: int, m: Mat) -> "TermSum":
        """Combine factors `pos`, `pos+1` through a map A ⊗ B → V."""
        self._check_field(m)
        if pos + 1 >= len(self.dims):
            raise ShapeError(f"no factor pair at {pos} in shape {self.dims}")
        b = self.dims[pos + 1]
        if m.cols != self.dims[pos] * b:
            raise ShapeError(
                f"map with {m.cols} columns applied to factors "
                f"({self.dims[pos]},{b})")
        out: dict = {}
        ment = m.entries
        for key, val in self.terms.items():
            flat = key[pos] * b + key[pos + 1]
            for i in range(m.rows):
                a = ment[i][flat]
                if not a:
                    continue
                nk = key[:pos] + (i,) + key[pos + 2:]
                out[nk] = out.get(nk, self.field.zero) + a * val
        dims = self.dims[:pos] + (m.rows,) + self.dims[pos + 2:]
        return TermSum(self.field, dims, out)

    def pair_at(self, pos: int, form: Mat) -> "TermSum":
        """Contract factors `pos`, `pos+1` through a bilinear form (1 × a·b)."""
        self._check_field(form)
        if pos + 1 >= len(self.dims):
            raise ShapeError(f"no factor pair at {pos} in shape {self.dims}")
        b = self.dims[pos + 1]
        if form.rows != 1 or form.cols != self.dims[pos] * b:
            raise ShapeError(
                f"form {form.rows}x{form.cols} applied to factors "
                f"({self.dims[pos]},{b})")
        row = form.entries[0]
        out: dict = {}
        for key, val in self.terms.items():
            coeff = row[key[pos] * b + key[pos + 1]]
            if not coeff:
                continue
            nk = key[:pos] + key[pos + 2:]
            out[nk] = out.get(nk, self.field.zero) + coeff * val
        dims = self.dims[:pos] + self.dims[pos + 2:]
        return TermSum(self.field, dims, out)

    def insert_at(self, pos: int, vec: Vec) -> "TermSum":
        """Insert a fixed vector as a new factor at position `pos`."""
        self._check_field(vec)
        if not 0 <= pos <= len(self.dims):
            raise ShapeError(f"insert position {pos} out of range")
        out: dict = {}
        for key, val in self.terms.items():
            for i, x in enumerate(vec.entries):
                if x:
                    nk = key[:pos] + (i,) + key[pos:]
                    out[nk] = out.get(nk, self.field.zero) + x * val
        dims = self.dims[:pos] + (vec.dim,) + self.dims[pos:]
        return TermSum(self.field, dims, out)

    def drop_at(self, pos: int) -> "TermSum":
        """Remove a one-dimensional factor."""
        if self._factor_dim(pos) != 1:
            raise ShapeError(f"factor {pos} has dim {self.dims[pos]}, cannot drop")
        dims = self.dims[:pos] + self.dims[pos + 1:]
        return TermSum(self.field, dims,
                       {key[:pos] + key[pos + 1:]: v for key, v in self.terms.items()})

    def swap_at(self, pos: int) -> "TermSum":
        """Exchange adjacent factors `pos`, `pos+1`."""
        if pos + 1 >= len(self.dims):
            raise ShapeError(f"no factor pair at {pos} in shape {self.dims}")
        order = list(range(len(self.dims)))
        order[pos], order[pos + 1] = order[pos + 1], order[pos]
        return self.permute(order)

    def permute(self, order) -> "TermSum":
        """Reorder factors; `order[n]` is the old position of new factor n."""
        order = tuple(order)
        if sorted(order) != list(range(len(self.dims))):
            raise ShapeError(f"{order} is not a permutation of the factors")
        dims = tuple(self.dims[o] for o in order)
        return TermSum(self.field, dims,
                       {tuple(key[o] for o in order): v
                        for key, v in self.terms.items()})

    def scale(self, scalar) -> "TermSum":
        s = self.field.coerce(scalar)
        return TermSum(self.field, self.dims,
                       {k: s * v for k, v in self.terms.items()})

    def __add__(self, other: "TermSum") -> "TermSum":
        self._check_field(other)
        if self.dims != other.dims:
            raise ShapeError(f"shapes {self.dims} and {other.dims} differ")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, self.field.zero) + v
        return TermSum(self.field, self.dims, out)

    def __sub__(self, other: "TermSum") -> "TermSum":
        return self + other.scale(-1) if other.terms else self

    def __neg__(self) -> "TermSum":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def to_vec(self) -> Vec:
        """Flatten to a vector under the `kron_index` convention."""
        size = 1
        for d in self.dims:
            size *= d
        out = [self.field.zero] * size
        for key, val in self.terms.items():
            out[flatten_index(key, self.dims)] = val
        return Vec(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, TermSum):
            return NotImplemented
        return (self.field == other.field and self.dims == other.dims
                and self.terms == other.terms)

    def __repr__(self):
        return f"TermSum(dims={self.dims}, nnz={len(self.terms)})"
