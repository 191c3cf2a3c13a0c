"""The structure file format: load and save everything the toolkit computes.

Files are line-oriented UTF-8 text.  The first line is

    rbhopf <format_version> <kind>

with format_version "1" and kind one of algebra, coalgebra, bialgebra, hopf,
prelie, operator, module, comodule, yd, sigma.  A `field` line follows
("Q" or "Fp:<p>"), then kind-specific sections.  Scalars are written as
explicit integer pairs `num den` over Q, never decimal strings, so
exactness survives serialization, and as single residues over F_p (the
modulus appears once, in the field line).  Only nonzero entries are stored.

Sections by kind:

    algebra/coalgebra/bialgebra/hopf/prelie:
        dim N / names ... / unit i v / counit i v / mul i j k v /
        comul i j k v / antipode r c v
    operator:  rows N / cols N / entry r c v
    module:    side right|left / hopf REF / mdim N / action r c v /
               coaction r c v / mul i j k v / comul i j k v
    comodule:  side / hopf REF / mdim N / coaction r c v
    yd:        hopf REF / cdim N / ccomul i j k v / ccounit i v /
               action r c v / coaction r c v
    sigma:     hopf REF / sigma i j v

(`v` stands for `num den` over Q, one residue over F_p.)  REF is either
`builtin:<name>`, instantiated over the document's field, or a path to a
companion file, resolved relative to the referring file.  Saving writes
sections in the order above with entries sorted by index, so canonical
files round-trip byte-for-byte.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, ShapeError
from .fields import field_from_name
from .hopfmod import HopfModule
from .linalg import Mat, Tensor3, Vec
from .prelie import PreLieCoalgebra
from .structures import AlgebraicStructure, builtin
from .ydsmash import CoquasitriangularForm, YDModuleCoalgebra

FORMAT_VERSION = "1"

STRUCTURE_KINDS = ("algebra", "coalgebra", "bialgebra", "hopf")
ALL_KINDS = STRUCTURE_KINDS + ("prelie", "operator", "module", "comodule",
                               "yd", "sigma")


@dataclass(frozen=True)
class Comodule:
    """A bare comodule: coaction without an action."""

    hopf: AlgebraicStructure
    m_dim: int
    coaction: Mat
    side: str


@dataclass(frozen=True)
class Document:
    """A parsed file: its kind, the resolved payload, and reference strings.

    `refs` keeps companion references (e.g. {"hopf": "builtin:group:C2"})
    verbatim so that saving reproduces the file exactly.
    """

    kind: str
    payload: object
    refs: dict


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _scalar_width(field) -> int:
    return 1 if field.finite else 2


def _parse_scalar(field, tokens, lineno):
    try:
        if field.finite:
            return field.from_int(int(tokens[0]))
        num, den = int(tokens[0]), int(tokens[1])
        if den == 0:
            raise FormatError("zero denominator", lineno)
        return Fraction(num, den)
    except (ValueError, IndexError):
        raise FormatError(f"bad scalar {' '.join(tokens)!r}", lineno) from None


def _parse_int(token, lineno, minimum=0):
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", lineno) from None
    if value < minimum:
        raise FormatError(f"expected an integer >= {minimum}, got {value}", lineno)
    return value


class _Lines:
    """Tokenized non-blank lines with their 1-based numbers."""

    def __init__(self, text: str):
        self.items = []
        for n, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self.items.append((n, stripped.split()))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def next(self):
        item = self.peek()
        self.pos += 1
        return item

    def expect(self, key: str):
        lineno, tokens = self.next()
        if tokens is None or tokens[0] != key:
            raise FormatError(f"expected a {key!r} line", lineno)
        if len(tokens) < 2:
            raise FormatError(f"{key} line is missing its value", lineno)
        return lineno, tokens

    def take_section(self, key: str):
        """All consecutive lines starting with `key` (possibly none)."""
        out = []
        while True:
            lineno, tokens = self.peek()
            if tokens is None or tokens[0] != key:
                return out
            self.next()
            out.append((lineno, tokens[1:]))


def _entry_table(field, rows, n_indices, dims):
    """Parse `i... scalar` rows into a {indices: scalar} dict."""
    width = _scalar_width(field)
    out = {}
    for lineno, tokens in rows:
        if len(tokens) != n_indices + width:
            raise FormatError(
                f"expected {n_indices} indices and a scalar", lineno)
        idx = tuple(_parse_int(t, lineno) for t in tokens[:n_indices])
        for i, d in zip(idx, dims):
            if i >= d:
                raise FormatError(f"index {i} out of range (dim {d})", lineno)
        if idx in out:
            raise FormatError(f"duplicate entry for {idx}", lineno)
        out[idx] = _parse_scalar(field, tokens[n_indices:], lineno)
    return out


def _matrix_from_rows(field, rows, shape):
    table = _entry_table(field, rows, 2, shape)
    m = [[field.zero] * shape[1] for _ in range(shape[0])]
    for (r, c), v in table.items():
        m[r][c] = v
    return Mat(field, m, cols=shape[1])


def loads(text: str, base_dir: str = ".") -> Document:
    """Parse a structure file; companion paths resolve against `base_dir`."""
    lines = _Lines(text)
    lineno, header = lines.next()
    if header is None or len(header) != 3 or header[0] != "rbhopf":
        raise FormatError("first line must be 'rbhopf <version> <kind>'", lineno)
    if header[1] != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {header[1]!r}", lineno)
    kind = header[2]
    if kind not in ALL_KINDS:
        raise FormatError(f"unknown kind {kind!r}", lineno)
    lineno, tokens = lines.expect("field")
    try:
        field = field_from_name(tokens[1])
    except (ValueError, IndexError):
        raise FormatError("bad field line", lineno) from None

    refs: dict = {}

    def hopf_ref():
        lineno, tokens = lines.expect("hopf")
        if len(tokens) != 2:
            raise FormatError("hopf line takes one reference", lineno)
        refs["hopf"] = tokens[1]
        return resolve_structure(tokens[1], field, base_dir)

    if kind in STRUCTURE_KINDS or kind == "prelie":
        payload = _load_structure_body(lines, field, kind)
    elif kind == "operator":
        lineno, tokens = lines.expect("rows")
        nrows = _parse_int(tokens[1], lineno)
        lineno, tokens = lines.expect("cols")
        ncols = _parse_int(tokens[1], lineno)
        payload = _matrix_from_rows(field, lines.take_section("entry"),
                                    (nrows, ncols))
    elif kind in ("module", "comodule"):
        lineno, tokens = lines.expect("side")
        side = tokens[1]
        if side not in ("left", "right"):
            raise FormatError(f"bad side {side!r}", lineno)
        hopf = hopf_ref()
        lineno, tokens = lines.expect("mdim")
        m_dim = _parse_int(tokens[1], lineno)
        h = hopf.dim
        if kind == "module":
            action = _matrix_from_rows(field, lines.take_section("action"),
                                       (m_dim, m_dim * h))
            coaction = _matrix_from_rows(field, lines.take_section("coaction"),
                                         (m_dim * h, m_dim))
            mul_rows = lines.take_section("mul")
            comul_rows = lines.take_section("comul")
            mul = (Tensor3(field, (m_dim,) * 3,
                           _entry_table(field, mul_rows, 3, (m_dim,) * 3))
                   if mul_rows else None)
            comul = (Tensor3(field, (m_dim,) * 3,
                             _entry_table(field, comul_rows, 3, (m_dim,) * 3))
                     if comul_rows else None)
            payload = HopfModule(hopf, m_dim, action, coaction, side,
                                 mul=mul, comul=comul)
        else:
            coaction = _matrix_from_rows(field, lines.take_section("coaction"),
                                         (m_dim * h, m_dim))
            payload = Comodule(hopf, m_dim, coaction, side)
    elif kind == "yd":
        hopf = hopf_ref()
        lineno, tokens = lines.expect("cdim")
        c_dim = _parse_int(tokens[1], lineno)
        h = hopf.dim
        ccomul = Tensor3(field, (c_dim,) * 3,
                         _entry_table(field, lines.take_section("ccomul"), 3,
                                      (c_dim,) * 3))
        counit_rows = lines.take_section("ccounit")
        ccounit = None
        if counit_rows:
            table = _entry_table(field, counit_rows, 1, (c_dim,))
            row = [field.zero] * c_dim
            for (i,), v in table.items():
                row[i] = v
            ccounit = Mat(field, (row,))
        action = _matrix_from_rows(field, lines.take_section("action"),
                                   (c_dim, h * c_dim))
        coaction = _matrix_from_rows(field, lines.take_section("coaction"),
                                     (h * c_dim, c_dim))
        cstr = AlgebraicStructure(c_dim, field, comul=ccomul, counit=ccounit)
        payload = YDModuleCoalgebra(hopf, cstr, action, coaction)
    elif kind == "sigma":
        hopf = hopf_ref()
        h = hopf.dim
        table = _entry_table(field, lines.take_section("sigma"), 2, (h, h))
        row = [field.zero] * (h * h)
        for (i, j), v in table.items():
            row[i * h + j] = v
        payload = CoquasitriangularForm(hopf, Mat(field, (row,)))
    lineno, tokens = lines.peek()
    if tokens is not None:
        raise FormatError(f"unexpected line {' '.join(tokens)!r}", lineno)
    return Document(kind, payload, refs)


def _load_structure_body(lines: _Lines, field, kind: str):
    lineno, tokens = lines.expect("dim")
    dim = _parse_int(tokens[1], lineno)
    names = None
    lineno, tokens = lines.peek()
    if tokens is not None and tokens[0] == "names":
        lines.next()
        names = tuple(tokens[1:])
        if len(names) != dim:
            raise FormatError(f"expected {dim} names", lineno)
    unit = None
    unit_rows = lines.take_section("unit")
    if unit_rows:
        table = _entry_table(field, unit_rows, 1, (dim,))
        entries = [field.zero] * dim
        for (i,), v in table.items():
            entries[i] = v
        unit = Vec(field, entries)
    counit = None
    counit_rows = lines.take_section("counit")
    if counit_rows:
        table = _entry_table(field, counit_rows, 1, (dim,))
        row = [field.zero] * dim
        for (i,), v in table.items():
            row[i] = v
        counit = Mat(field, (row,))
    mul_rows = lines.take_section("mul")
    comul_rows = lines.take_section("comul")
    mul = (Tensor3(field, (dim,) * 3,
                   _entry_table(field, mul_rows, 3, (dim,) * 3))
           if mul_rows else None)
    comul = (Tensor3(field, (dim,) * 3,
                     _entry_table(field, comul_rows, 3, (dim,) * 3))
             if comul_rows else None)
    antipode = None
    antipode_rows = lines.take_section("antipode")
    if antipode_rows:
        antipode = _matrix_from_rows(field, antipode_rows, (dim, dim))
    if kind == "prelie":
        if comul is None:
            comul = Tensor3(field, (dim,) * 3, {})
        if any(x is not None for x in (mul, unit, counit, antipode)):
            raise FormatError("a prelie file carries only a comultiplication")
        return PreLieCoalgebra(dim, field, comul)
    try:
        s = AlgebraicStructure(dim, field, mul=mul, comul=comul, unit=unit,
                               counit=counit, antipode=antipode, names=names)
    except ShapeError as exc:
        raise FormatError(str(exc)) from None
    required = {
        "algebra": s.mul is not None,
        "coalgebra": s.comul is not None,
        "bialgebra": s.mul is not None and s.comul is not None,
        "hopf": s.antipode is not None,
    }[kind]
    if not required:
        raise FormatError(f"file declares kind {kind!r} but lacks its maps")
    return s


def load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, base_dir=os.path.dirname(path) or ".")


def resolve_structure(ref: str, field, base_dir: str = ".") -> AlgebraicStructure:
    """A structure from `builtin:<name>` (over `field`) or a companion file."""
    if ref.startswith("builtin:"):
        try:
            return builtin(ref[len("builtin:"):], field)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    doc = load(os.path.join(base_dir, ref))
    if doc.kind not in STRUCTURE_KINDS:
        raise FormatError(f"{ref} is a {doc.kind} file, not a structure")
    if doc.payload.field != field:
        raise FormatError(f"{ref} is over {doc.payload.field.name}, expected "
                          f"{field.name}")
    return doc.payload


# ---------------------------------------------------------------------------
# Saving
# ---------------------------------------------------------------------------

def _fmt_scalar(field, value) -> str:
    if field.finite:
        return str(field.coerce(value).residue)
    v = field.coerce(value)
    return f"{v.numerator} {v.denominator}"


def _tensor_lines(key, field, t3: Tensor3):
    return [f"{key} {i} {j} {k} {_fmt_scalar(field, v)}"
            for (i, j, k), v in sorted(t3.entries.items())]


def _matrix_lines(key, field, m: Mat):
    out = []
    for i, row in enumerate(m.entries):
        for j, v in enumerate(row):
            if v:
                out.append(f"{key} {i} {j} {_fmt_scalar(field, v)}")
    return out


def _vector_lines(key, field, entries):
    return [f"{key} {i} {_fmt_scalar(field, v)}"
            for i, v in enumerate(entries) if v]


def dumps(payload, kind: str | None = None, refs: dict | None = None) -> str:
    """Serialize a payload to canonical file text.

    `kind` is inferred where possible (structures, operators); module-like
    payloads need a `refs` dict carrying the hopf reference string.
    """
    refs = refs or {}
    if isinstance(payload, Document):
        return dumps(payload.payload, payload.kind, payload.refs)
    if isinstance(payload, AlgebraicStructure):
        kind = kind or payload.kind
        return _dump_structure(payload, kind)
    if isinstance(payload, PreLieCoalgebra):
        field = payload.field
        lines = [f"rbhopf {FORMAT_VERSION} prelie", f"field {field.name}",
                 f"dim {payload.dim}"]
        lines += _tensor_lines("comul", field, payload.comul)
        return "\n".join(lines) + "\n"
    if isinstance(payload, Mat):
        field = payload.field
        lines = [f"rbhopf {FORMAT_VERSION} operator", f"field {field.name}",
                 f"rows {payload.rows}", f"cols {payload.cols}"]
        lines += _matrix_lines("entry", field, payload)
        return "\n".join(lines) + "\n"
    if isinstance(payload, HopfModule):
        field = payload.field
        lines = [f"rbhopf {FORMAT_VERSION} module", f"field {field.name}",
                 f"side {payload.side}", f"hopf {_require_ref(refs)}",
                 f"mdim {payload.m_dim}"]
        lines += _matrix_lines("action", field, payload.action)
        lines += _matrix_lines("coaction", field, payload.coaction)
        if payload.mul is not None:
            lines += _tensor_lines("mul", field, payload.mul)
        if payload.comul is not None:
            lines += _tensor_lines("comul", field, payload.comul)
        return "\n".join(lines) + "\n"
    if isinstance(payload, Comodule):
        field = payload.hopf.field
        lines = [f"rbhopf {FORMAT_VERSION} comodule", f"field {field.name}",
                 f"side {payload.side}", f"hopf {_require_ref(refs)}",
                 f"mdim {payload.m_dim}"]
        lines += _matrix_lines("coaction", field, payload.coaction)
        return "\n".join(lines) + "\n"
    if isinstance(payload, YDModuleCoalgebra):
        field = payload.field
        cstr = payload.coalgebra
        lines = [f"rbhopf {FORMAT_VERSION} yd", f"field {field.name}",
                 f"hopf {_require_ref(refs)}", f"cdim {cstr.dim}"]
        lines += _tensor_lines("ccomul", field, cstr.comul)
        if cstr.counit is not None:
            lines += _vector_lines("ccounit", field, cstr.counit.entries[0])
        lines += _matrix_lines("action", field, payload.action)
        lines += _matrix_lines("coaction", field, payload.coaction)
        return "\n".join(lines) + "\n"
    if isinstance(payload, CoquasitriangularForm):
        field = payload.hopf.field
        h = payload.hopf.dim
        lines = [f"rbhopf {FORMAT_VERSION} sigma", f"field {field.name}",
                 f"hopf {_require_ref(refs)}"]
        for flat, v in enumerate(payload.form.entries[0]):
            if v:
                lines.append(f"sigma {flat // h} {flat % h} "
                             f"{_fmt_scalar(field, v)}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot serialize {type(payload).__name__}")


def _require_ref(refs: dict) -> str:
    ref = refs.get("hopf")
    if not ref:
        raise ValueError("saving this kind needs a hopf reference "
                         "(refs={'hopf': 'builtin:...' or a path})")
    return ref


def _dump_structure(s: AlgebraicStructure, kind: str) -> str:
    if kind not in STRUCTURE_KINDS:
        raise ValueError(f"bad structure kind {kind!r}")
    field = s.field
    lines = [f"rbhopf {FORMAT_VERSION} {kind}", f"field {field.name}",
             f"dim {s.dim}"]
    if s.names is not None:
        lines.append("names " + " ".join(s.names))
    if s.unit is not None:
        lines += _vector_lines("unit", field, s.unit.entries)
    if s.counit is not None:
        lines += _vector_lines("counit", field, s.counit.entries[0])
    if s.mul is not None:
        lines += _tensor_lines("mul", field, s.mul)
    if s.comul is not None:
        lines += _tensor_lines("comul", field, s.comul)
    if s.antipode is not None:
        lines += _matrix_lines("antipode", field, s.antipode)
    return "\n".join(lines) + "\n"


def save(payload, path: str, kind: str | None = None, refs: dict | None = None):
    text = dumps(payload, kind, refs)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
