"""Command-line front end.

Subcommands: verify, rb-check, construct, search, builtin-list.  Structures
are file paths or `builtin:<name>` references; `--field Fp:<p>` re-grounds a
builtin over a prime field.  Exit codes are a stable contract: 0 all checks
passed, 1 a check failed, 2 input/parse error, 3 resource budget exceeded.

`--report machine` emits a deterministic line-oriented key-value report
(no timestamps); `--report human` is free-form and includes timing.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import fileformat
from .errors import BudgetExceededError, FormatError, PreconditionError
from .fields import QQ, field_from_name
from .fileformat import Document, load, save
from .hopfmod import (check_hopf_module, check_hopf_module_algebra,
                      check_hopf_module_coalgebra, verify_projection_rb)
from .prelie import check_pre_lie, prelie_from_rb_minus1, prelie_from_rb_zero
from .rb import check_rb_algebra, check_rb_bialgebra, check_rb_coalgebra, \
    search_rb_operators
from .structures import (builtin, builtin_names, check_antipode,
                         check_associativity, check_bialgebra,
                         check_coassociativity, check_comodule,
                         check_unit_counit)
from .ydsmash import (adjoint_yd, check_coquasitriangular, check_yd_coalgebra,
                      check_yd_module, smash_coproduct, smash_hopf_module_left,
                      smash_hopf_module_right)

MAX_DEFECT_ENTRIES = 16


class Report:
    """Collects argument echoes and check verdicts; renders either mode."""

    def __init__(self, command: str):
        self.command = command
        self.args: list[tuple[str, str]] = []
        self.rows: list[tuple[str, str]] = []
        self.failed = False
        self.started = time.monotonic()

    def arg(self, key: str, value):
        self.args.append((key, str(value)))

    def info(self, key: str, value):
        self.rows.append((key, str(value)))

    def check(self, name: str, verdict):
        passed = bool(verdict)
        self.rows.append(("check", f"{name} {'pass' if passed else 'fail'}"))
        if not passed:
            self.failed = True
            defect = getattr(verdict, "defect", None)
            if defect is not None:
                witness = ",".join(map(str, defect.witness))
                self.rows.append(
                    ("defect", f"{defect.identity} witness {witness} "
                               f"entries {len(defect.residual)}"))
                for key in sorted(defect.residual)[:MAX_DEFECT_ENTRIES]:
                    self.rows.append(
                        ("defect-entry",
                         f"{','.join(map(str, key))} {defect.residual[key]}"))

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def render(self, mode: str) -> str:
        if mode == "machine":
            lines = ["rbhopf-report 1", f"command {self.command}"]
            lines += [f"arg {k} {v}" for k, v in self.args]
            lines += [f"{k} {v}" for k, v in self.rows]
            lines.append(f"status {'fail' if self.failed else 'pass'}")
            return "\n".join(lines) + "\n"
        out = [f"rbhopf {self.command}"]
        for k, v in self.args:
            out.append(f"  {k}: {v}")
        for k, v in self.rows:
            if k == "check":
                name, verdict = v.rsplit(" ", 1)
                out.append(f"  [{'PASS' if verdict == 'pass' else 'FAIL'}] {name}")
            else:
                out.append(f"  {k}: {v}")
        elapsed = time.monotonic() - self.started
        out.append(f"{'FAIL' if self.failed else 'OK'} ({elapsed:.3f}s)")
        return "\n".join(out) + "\n"


class InputError(Exception):
    """User input problem; maps to exit code 2."""


def _field_option(value: str | None):
    if value is None:
        return None
    try:
        return field_from_name(value)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_structure(ref: str, field_flag):
    """A structure payload from builtin:NAME or a file path."""
    if ref.startswith("builtin:"):
        field = field_flag or QQ
        try:
            return builtin(ref[len("builtin:"):], field)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if field_flag is not None:
        raise InputError("--field applies only to builtin: references")
    doc = load(ref)
    if doc.kind not in fileformat.STRUCTURE_KINDS:
        raise InputError(f"{ref} is a {doc.kind} file, not a structure")
    return doc.payload


def _load_operator(path: str):
    doc = load(path)
    if doc.kind != "operator":
        raise InputError(f"{path} is a {doc.kind} file, not an operator")
    return doc.payload


def _parse_weight(field, text: str):
    try:
        return field.parse(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse weight {text!r} over {field.name}") from None


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_STRUCTURE_CHECKS = {
    "associativity": check_associativity,
    "coassociativity": check_coassociativity,
    "unit-counit": check_unit_counit,
    "bialgebra": check_bialgebra,
    "antipode": check_antipode,
}

_CHECK_GROUPS = {
    "hopf": ("associativity", "coassociativity", "unit-counit", "bialgebra",
             "antipode"),
}


def _default_checks(doc_kind: str, payload) -> list[str]:
    if doc_kind in fileformat.STRUCTURE_KINDS:
        checks = []
        if payload.mul is not None:
            checks.append("associativity")
        if payload.comul is not None:
            checks.append("coassociativity")
        if payload.unit is not None or payload.counit is not None:
            checks.append("unit-counit")
        if payload.mul is not None and payload.comul is not None:
            checks.append("bialgebra")
        if payload.antipode is not None:
            checks.append("antipode")
        return checks
    if doc_kind == "module":
        checks = ["hopf-module"]
        if payload.mul is not None:
            checks.append("hopf-module-algebra")
        if payload.comul is not None:
            checks.append("hopf-module-coalgebra")
        return checks
    return {
        "prelie": ["prelie"],
        "comodule": ["comodule"],
        "yd": ["yd-module", "yd-coalgebra"],
        "sigma": ["coquasitriangular"],
    }[doc_kind]


def _run_named_check(name: str, doc_kind: str, payload, report: Report):
    if doc_kind in fileformat.STRUCTURE_KINDS and name in _STRUCTURE_CHECKS:
        try:
            report.check(name, _STRUCTURE_CHECKS[name](payload))
        except ValueError as exc:
            raise InputError(f"check {name}: {exc}") from None
        return
    try:
        if name == "prelie" and doc_kind == "prelie":
            report.check(name, check_pre_lie(payload.comul))
        elif name == "hopf-module" and doc_kind == "module":
            report.check(name, check_hopf_module(payload))
        elif name == "hopf-module-algebra" and doc_kind == "module":
            report.check(name, check_hopf_module_algebra(payload))
        elif name == "hopf-module-coalgebra" and doc_kind == "module":
            report.check(name, check_hopf_module_coalgebra(payload))
        elif name == "comodule" and doc_kind == "comodule":
            report.check(name, check_comodule(payload.hopf, payload.m_dim,
                                              payload.coaction, payload.side))
        elif name == "yd-module" and doc_kind == "yd":
            report.check(name, check_yd_module(payload.hopf,
                                               payload.coalgebra.dim,
                                               payload.action, payload.coaction))
        elif name == "yd-coalgebra" and doc_kind == "yd":
            report.check(name, check_yd_coalgebra(payload))
        elif name == "coquasitriangular" and doc_kind == "sigma":
            report.check(name, check_coquasitriangular(payload))
        else:
            raise InputError(f"check {name!r} does not apply to kind {doc_kind!r}")
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"check {name}: {exc}") from None


def cmd_verify(args) -> Report:
    report = Report("verify")
    report.arg("input", args.input)
    field = _field_option(args.field)
    if args.input.startswith("builtin:"):
        payload = _load_structure(args.input, field)
        doc = Document(payload.kind, payload, {})
    else:
        if field is not None:
            raise InputError("--field applies only to builtin: references")
        doc = load(args.input)
    if doc.kind == "operator":
        raise InputError("an operator file has nothing to verify on its own; "
                         "use rb-check")
    if args.checks:
        names = []
        for item in args.checks.split(","):
            item = item.strip()
            names.extend(_CHECK_GROUPS.get(item, (item,)))
        if doc.kind in fileformat.STRUCTURE_KINDS:
            for name in names:
                if name not in _STRUCTURE_CHECKS:
                    raise InputError(f"unknown check {name!r}")
    else:
        names = _default_checks(doc.kind, doc.payload)
    for name in names:
        _run_named_check(name, doc.kind, doc.payload, report)
    return report


# ---------------------------------------------------------------------------
# rb-check
# ---------------------------------------------------------------------------

def cmd_rb_check(args) -> Report:
    report = Report("rb-check")
    report.arg("structure", args.structure)
    report.arg("side", args.side)
    s = _load_structure(args.structure, _field_option(args.field))
    ops = [_load_operator(p) for p in args.operator or []]
    weights = [_parse_weight(s.field, w) for w in args.weight or []]
    if args.side in ("algebra", "coalgebra"):
        if len(ops) != 1 or len(weights) != 1:
            raise InputError(f"side {args.side} takes exactly one "
                             "--operator and one --weight")
    elif len(ops) != 2 or len(weights) != 2:
        raise InputError("side bialgebra takes two operators "
                         "(P then Q) and two weights (lambda then gamma)")
    for i, w in enumerate(args.weight):
        report.arg(f"weight{i + 1}" if args.side == "bialgebra" else "weight", w)
    try:
        if args.side == "algebra":
            report.check("rb-algebra", check_rb_algebra(s, ops[0], weights[0]))
        elif args.side == "coalgebra":
            v = check_rb_coalgebra(s, ops[0], weights[0],
                                   report_idempotency=args.idempotent)
            report.check("rb-coalgebra", v)
            if args.idempotent:
                report.info("idempotent", "yes" if v.idempotent else "no")
        else:
            v = check_rb_bialgebra(s, ops[0], ops[1], weights[0], weights[1])
            report.check("rb-algebra", v.algebra)
            report.check("rb-coalgebra", v.coalgebra)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return report


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _resolve_yd(args, field):
    hopf = _load_structure(args.hopf, field) if args.hopf else None
    if args.yd == "adjoint":
        if hopf is None:
            raise InputError("--yd adjoint needs --hopf")
        return adjoint_yd(hopf)
    doc = load(args.yd)
    if doc.kind != "yd":
        raise InputError(f"{args.yd} is a {doc.kind} file, not a yd structure")
    return doc.payload


def _reload_equal(path: str, payload) -> bool:
    return load(path).payload == payload


def cmd_construct(args) -> Report:
    report = Report("construct")
    report.arg("what", args.what)
    field = _field_option(args.field)
    hopf_ref = args.hopf
    if args.what == "smash":
        if not args.yd:
            raise InputError("construct smash needs --yd (adjoint or a file)")
        ydc = _resolve_yd(args, field)
        v = check_yd_coalgebra(ydc)
        report.check("yd-coalgebra", v)
        if not v.passed:
            return report
        smash = smash_coproduct(ydc)
        report.check("coassociativity", check_coassociativity(smash))
        save(smash, args.output)
        report.info("output", args.output)
        report.check("reload", _reload_equal(args.output, smash))
    elif args.what in ("projection-right", "projection-left"):
        side = args.what.rsplit("-", 1)[1]
        if args.module:
            doc = load(args.module)
            if doc.kind != "module":
                raise InputError(f"{args.module} is not a module file")
            hm = doc.payload
            if hm.side != side:
                raise InputError(f"{args.module} is a {hm.side} module")
            try:
                p, verdict = verify_projection_rb(hm)
            except (PreconditionError, ValueError) as exc:
                raise InputError(str(exc)) from None
        else:
            if not args.yd:
                raise InputError("construct projection needs --module or --yd")
            ydc = _resolve_yd(args, field)
            pipeline = (smash_hopf_module_right if side == "right"
                        else smash_hopf_module_left)
            try:
                _, p, verdict = pipeline(ydc)
            except PreconditionError as exc:
                raise InputError(str(exc)) from None
            report.check("closed-form-matches-generic", True)
        report.check("rb-coalgebra-weight-minus-1", verdict)
        report.info("idempotent", "yes" if verdict.idempotent else "no")
        if not verdict.idempotent:
            report.failed = True
        save(p, args.output)
        report.info("output", args.output)
        report.check("reload", _reload_equal(args.output, p))
    elif args.what == "prelie":
        if not (args.structure and args.operator and args.weight):
            raise InputError("construct prelie needs --structure, --operator "
                             "and --weight")
        s = _load_structure(args.structure, field)
        q = _load_operator(args.operator[0])
        w = _parse_weight(s.field, args.weight[0])
        report.arg("weight", args.weight[0])
        minus_one = s.field.coerce(-1)
        if w == minus_one:
            build = prelie_from_rb_minus1
        elif w == s.field.zero:
            build = prelie_from_rb_zero
        else:
            raise InputError("prelie constructions exist for weights -1 and 0")
        report.check("rb-coalgebra", check_rb_coalgebra(s, q, w))
        if report.failed:
            return report
        plc = build(s, q)
        report.check("pre-lie", check_pre_lie(plc.comul))
        save(plc, args.output)
        report.info("output", args.output)
        report.check("reload", _reload_equal(args.output, plc))
    elif args.what == "pi-operator":
        if not args.hopf:
            raise InputError("construct pi-operator needs --hopf")
        from .hopfmod import (hopf_module_from_projection, pi_operator,
                              tensor_square_projection)
        hopf = _load_structure(args.hopf, field)
        try:
            pb = tensor_square_projection(hopf)
        except (PreconditionError, ValueError) as exc:
            raise InputError(str(exc)) from None
        hm = hopf_module_from_projection(pb)
        pi = pi_operator(pb)
        p, verdict = verify_projection_rb(hm)
        report.check("convolution-matches-projection", pi == p)
        report.check("rb-coalgebra-weight-minus-1", verdict)
        save(pi, args.output)
        report.info("output", args.output)
        report.check("reload", _reload_equal(args.output, pi))
        if args.structure_out:
            save(pb.big, args.structure_out)
            report.info("structure-output", args.structure_out)
            report.check("structure-reload",
                         _reload_equal(args.structure_out, pb.big))
    else:
        raise InputError(f"unknown construction {args.what!r}")
    return report


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def cmd_search(args) -> Report:
    report = Report("search")
    report.arg("structure", args.structure)
    report.arg("side", args.side)
    report.arg("weight", args.weight)
    s = _load_structure(args.structure, _field_option(args.field))
    weight = _parse_weight(s.field, args.weight)
    try:
        result = search_rb_operators(s, args.side, weight,
                                     idempotent_only=args.idempotent_only,
                                     budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report.info("scanned", result.candidates_scanned)
    report.info("found", len(result.operators))
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        width = max(4, len(str(len(result.operators))))
        recheck = (check_rb_algebra if args.side == "algebra"
                   else check_rb_coalgebra)
        all_ok = True
        for i, op in enumerate(result.operators):
            path = os.path.join(args.out_dir, f"op_{i:0{width}d}.rbh")
            save(op, path)
            reloaded = load(path).payload
            all_ok &= (reloaded == op and recheck(s, reloaded, weight).passed)
            report.info("operator-file", path)
        report.check("reload-and-reverify", all_ok)
    return report


def cmd_builtin_list(args) -> Report:
    report = Report("builtin-list")
    for name in builtin_names():
        if name.endswith(":<n>"):
            report.info("builtin-family", f"{name} coalgebra")
            continue
        s = builtin(name)
        report.info("builtin", f"{name} {s.kind} {s.dim}")
    return report


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbhopf",
        description="Exact verification and construction of Rota-Baxter "
                    "structures on algebras, coalgebras and Hopf modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--report", choices=("human", "machine"),
                       default="human")
        p.add_argument("--field", help="re-ground a builtin: input over "
                                       "another field, e.g. Fp:2")

    p = sub.add_parser("verify", help="run axiom checks on a structure file")
    p.add_argument("input", help="file path or builtin:<name>")
    p.add_argument("--checks", help="comma-separated check names "
                                    "(default: all applicable)")
    common(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("rb-check", help="check Rota-Baxter identities")
    p.add_argument("structure", help="file path or builtin:<name>")
    p.add_argument("--side", choices=("algebra", "coalgebra", "bialgebra"),
                   required=True)
    p.add_argument("--operator", action="append", metavar="FILE",
                   help="operator file; give twice (P then Q) for bialgebra")
    p.add_argument("--weight", action="append", metavar="W",
                   help="weight; give twice (lambda then gamma) for bialgebra")
    p.add_argument("--idempotent", action="store_true",
                   help="also report whether Q^2 = Q (coalgebra side)")
    common(p)
    p.set_defaults(run=cmd_rb_check)

    p = sub.add_parser("construct",
                       help="build smash coproducts, projections, pre-Lie "
                            "comultiplications, convolution operators")
    p.add_argument("what", choices=("smash", "projection-right",
                                    "projection-left", "prelie", "pi-operator"))
    p.add_argument("--hopf", help="Hopf algebra reference")
    p.add_argument("--yd", help="'adjoint' (needs --hopf) or a yd file")
    p.add_argument("--module", help="a Hopf module file")
    p.add_argument("--structure", help="a coalgebra file or builtin")
    p.add_argument("--operator", action="append", metavar="FILE")
    p.add_argument("--weight", action="append", metavar="W")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--structure-out",
                   help="pi-operator: also write the underlying bialgebra")
    common(p)
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("search",
                       help="enumerate Rota-Baxter operators over F_p")
    p.add_argument("structure", help="file path or builtin:<name>")
    p.add_argument("--side", choices=("algebra", "coalgebra"), required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--idempotent-only", action="store_true")
    p.add_argument("--out-dir", help="write found operators here")
    common(p)
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("builtin-list", help="list builtin structures")
    common(p)
    p.set_defaults(run=cmd_builtin_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        report = args.run(args)
    except (FormatError, InputError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    sys.stdout.write(report.render(args.report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
