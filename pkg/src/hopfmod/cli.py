"""Command-line runner: load definitions or catalog entries, verify, report.

Exit status: 0 when every check comes out as expected, 1 when some check
does not, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Callable, Optional

from . import __version__
from . import linalg as la
from .algebra import BialgebraData, co_opposite, verify
from .bimodules import (
    CovariantBimodule,
    FreeBimodule,
    bicovariant_from_yd,
    bimodule_from_right_module,
    check_bimodule,
    check_covariance,
    check_twist,
    module_from_rule,
    right_action_on_generators,
    rule_from_left_module,
    rule_from_left_module_cop,
    twist_from_rule,
    verify_rule,
)
from .calculus import (
    FODC,
    check_cartan,
    check_fodc,
    check_right_covariance,
    finite_group_calculus,
    quantum_lie_bracket,
    woronowicz_functionals,
)
from .catalog import (
    BIMODULE_SEEDS,
    bimodule_seed,
    broken_yd_catalog,
    get_algebra,
    module_catalog,
    right_comodule_catalog,
    yd_catalog,
)
from .duality import check_dual_covariance, check_pairing, dualize, pairing_identity
from .groups import parse_group
from .io import InputError, dump, load
from .modules import LeftComodule, LeftModule, RightComodule, RightModule, verify_comodule, verify_module
from .report import Check, StructureError, VerificationFailed, VerificationReport
from .scalars import format_scalar
from .yd import (
    ConsistencyAlarm,
    YDModule,
    check_yd,
    reinterpret_over_op_cop,
    yang_baxter,
    yd_dual,
    yd_ll_to_lr,
    yd_ll_to_rr,
    yd_lr_to_ll,
    yd_lr_to_rr,
    yd_rr_to_ll,
    yd_to_cop,
)

__all__ = ["main", "build_parser", "run"]


class UsageError(Exception):
    """Bad arguments that argparse cannot detect on its own (exit 2)."""


class _Result:
    def __init__(self, report: VerificationReport, inputs: list, artifacts: Optional[dict] = None,
                 text: Optional[list] = None):
        self.report = report
        self.inputs = inputs
        self.artifacts = artifacts or {}
        self.text = text or []


# -- input resolution --------------------------------------------------------

def _calculus_from_name(name: str) -> FODC:
    group, _, subset = name.partition(":")
    if not subset:
        raise KeyError(name)
    G = parse_group(group)
    return finite_group_calculus(G, _parse_subset(G, subset))


def _catalog_bimodule(name: str) -> CovariantBimodule:
    B, lam, _ = bimodule_seed(name)
    return CovariantBimodule(FreeBimodule(rule_from_left_module(B, lam)), B)


_CATALOGS: dict[str, Callable[[str], object]] = {
    "algebra": get_algebra,
    "yd": lambda n: {**yd_catalog(), **broken_yd_catalog()}[n],
    "module": lambda n: module_catalog()[n],
    "comodule": lambda n: right_comodule_catalog()[n],
    "bimodule": _catalog_bimodule,
    "fodc": _calculus_from_name,
}


def _catalog_names(kind: str) -> list:
    return {
        "algebra": lambda: ["k", "kZ2", "kZ3", "kS3", "kZ2-fun", "kZ3-fun", "kS3-fun", "sweedler-H4"],
        "yd": lambda: sorted({**yd_catalog(), **broken_yd_catalog()}),
        "module": lambda: sorted(module_catalog()),
        "comodule": lambda: sorted(right_comodule_catalog()),
        "bimodule": lambda: sorted(BIMODULE_SEEDS),
        "fodc": lambda: ["Z2:1", "Z3:1,2", "S3:transpositions"],
    }[kind]()


def resolve(target: str, kinds: tuple, algebra: Optional[BialgebraData] = None):
    """A definition file path, or a name from the first matching catalog."""
    if target is None:
        raise UsageError("no input given")
    if Path(target).is_file():
        return load(target, algebra)
    for kind in kinds:
        try:
            return _CATALOGS[kind](target)
        except (KeyError, ValueError):
            continue
    known = "; ".join(f"{k}: {', '.join(_catalog_names(k))}" for k in kinds)
    raise UsageError(f"{target!r} is neither a file nor a catalog entry ({known})")


def _parse_subset(G, text: str) -> tuple:
    if text in ("transpositions", "involutions"):
        return tuple(g for g in range(G.order) if g != G.identity and G.mul(g, g) == G.identity)
    out = []
    for label in text.split(","):
        label = label.strip()
        try:
            out.append(G.index(label))
        except (KeyError, ValueError):
            raise UsageError(f"{label!r} is not an element of {G.name} ({', '.join(G.labels)})") from None
    return tuple(out)


def _digest_of(objs: list) -> str:
    h = hashlib.sha256()
    for obj in objs:
        data = obj if isinstance(obj, str) else json.dumps(dump(obj), sort_keys=True, ensure_ascii=False)
        h.update(data.encode("utf-8"))
        h.update(b"\0")
    return "sha256:" + h.hexdigest()


def _require_kind(obj, classes, what: str):
    if not isinstance(obj, classes):
        raise UsageError(f"expected {what}, got {type(obj).__name__}")
    return obj


def _info(name: str, anchor: str, passed: bool, detail: str = "") -> Check:
    return Check(name, anchor, passed, () if passed else (detail or name,), "", "", 1)


# -- subcommands -------------------------------------------------------------

def cmd_check(args) -> _Result:
    obj = resolve(args.target, ("algebra", "yd", "module", "comodule", "bimodule", "fodc"))
    if isinstance(obj, BialgebraData):
        report = verify(obj, args.level)
    elif isinstance(obj, (LeftModule, RightModule)):
        report = verify_module(obj)
    elif isinstance(obj, (LeftComodule, RightComodule)):
        report = verify_comodule(obj)
    elif isinstance(obj, YDModule):
        report = check_yd(obj)
    elif isinstance(obj, CovariantBimodule):
        report = verify_rule(obj.bimodule.rule)
        report.extend(check_bimodule(obj.bimodule))
        report.extend(check_covariance(obj))
    else:
        report = check_fodc(obj)
    return _Result(report, [obj])


_YD_MAPS = {
    ("LL", "rr"): (yd_ll_to_rr, yd_rr_to_ll),
    ("RR", "ll"): (yd_rr_to_ll, yd_ll_to_rr),
    ("LR", "ll"): (yd_lr_to_ll, yd_ll_to_lr),
    ("LL", "lr"): (yd_ll_to_lr, yd_lr_to_ll),
    ("LR", "rr"): (yd_lr_to_rr, None),
    ("LL", "cop"): (yd_to_cop, yd_to_cop),
    ("RR", "cop"): (yd_to_cop, yd_to_cop),
    ("LL", "op-cop"): (reinterpret_over_op_cop, None),
}


def cmd_yd_check(args) -> _Result:
    M = _require_kind(resolve(args.target, ("yd",)), YDModule, "a YD module")
    return _Result(check_yd(M), [M])


def cmd_yd_transform(args) -> _Result:
    M = _require_kind(resolve(args.target, ("yd",)), YDModule, "a YD module")
    try:
        forward, back = _YD_MAPS[(M.corner, args.to)]
    except KeyError:
        raise UsageError(f"no transform from {M.corner} to {args.to}") from None
    report = VerificationReport().extend(check_yd(M), "source.")
    out = forward(M)
    report.extend(check_yd(out), "result.")
    if back is not None:
        same = back(out).same_tensors(M)
        report.add(_info("roundtrip", "inverse transform returns the original tensors", same, "tensors differ"))
    _write_output(args, out)
    return _Result(report, [M, args.to], {"result": dump(out)} if args.emit else None)


def cmd_yd_dual(args) -> _Result:
    M = _require_kind(resolve(args.target, ("yd",)), YDModule, "a YD module")
    src, dual = check_yd(M), check_yd(yd_dual(M))
    report = VerificationReport().extend(src, "source.").extend(dual, "dual.")
    agree = src.passed == dual.passed
    report.add(_info("verdicts_agree", "M passes ⇔ dual(M) passes", agree, "verdicts differ"))
    return _Result(report, [M])


def _to_rr(M: YDModule) -> YDModule:
    if M.corner == "RR":
        return M
    if M.corner == "LL":
        return yd_ll_to_rr(M)
    if M.corner == "LR":
        return yd_lr_to_rr(M)
    raise UsageError(f"no conversion from {M.corner} to RR")


def cmd_yangbaxter(args) -> _Result:
    M = _require_kind(resolve(args.target, ("yd",)), YDModule, "a YD module")
    rr = _to_rr(M)
    report = check_yd(rr)
    if not report.passed:
        raise VerificationFailed("the braiding needs a passing YD module", report)
    op = yang_baxter(rr)
    report = op.verify()
    report.add(_info("yang_baxter.dimension", "𝓡 acts on V⊗V", len(op.matrix) == op.dim ** 2))
    artifacts, text = {}, []
    if args.emit_matrix:
        labels = [op.pair_label((r // op.dim, r % op.dim)) for r in range(op.dim ** 2)]
        mat = la.format_matrix(op.matrix)
        artifacts["matrix"] = {"labels": labels, "rows": mat}
        text.append("𝓡 (column = input e_i⊗e_k, row = output):")
        text.append("  " + " | ".join(labels))
        text.extend(f"  {labels[r]}: " + " ".join(row) for r, row in enumerate(mat))
    return _Result(report, [M], artifacts, text)


_SIDE_FLAGS = {
    "left": ("left-hopf", "left"),
    "right": ("right-hopf", "right"),
    "bicomodule": ("bicomodule",),
}


def _parse_sides(text: str) -> tuple:
    out = []
    for s in text.split(","):
        s = s.strip()
        if s in _SIDE_FLAGS:
            out.extend(_SIDE_FLAGS[s])
        elif s in ("left-hopf", "right-hopf"):
            out.append(s)
        else:
            raise UsageError(f"unknown side {s!r}; use left, right, bicomodule, left-hopf or right-hopf")
    return tuple(dict.fromkeys(out))


def cmd_bimodule_build(args) -> _Result:
    lam = _require_kind(resolve(args.from_module, ("module",)), LeftModule, "a left module")
    B = lam.algebra
    rule = (rule_from_left_module_cop if args.cop else rule_from_left_module)(B, lam)
    coalg = co_opposite(B) if args.cop else B
    CM = CovariantBimodule(FreeBimodule(rule), coalg)
    report = verify_rule(rule)
    report.extend(check_twist(twist_from_rule(rule)))
    report.extend(check_bimodule(CM.bimodule))
    report.extend(check_covariance(CM, ("right-hopf", "right")))
    report.add(_info("roundtrip.module", "ε∘Λ = λ", module_from_rule(rule).matrices == lam.matrices))
    _write_output(args, CM)
    return _Result(report, [lam, "cop" if args.cop else "plain"], {"bimodule": dump(CM)} if args.emit else None)


def cmd_bimodule_check(args) -> _Result:
    CM = _require_kind(resolve(args.target, ("bimodule",)), CovariantBimodule, "a bimodule")
    report = verify_rule(CM.bimodule.rule)
    report.extend(check_bimodule(CM.bimodule))
    report.extend(check_covariance(CM, _parse_sides(args.sides)))
    return _Result(report, [CM, args.sides])


def cmd_bimodule_from_yd(args) -> _Result:
    M = _require_kind(resolve(args.target, ("yd",)), YDModule, "a YD module")
    rr = _to_rr(M)
    yd_report = check_yd(rr)
    if not yd_report.passed:
        raise VerificationFailed("bicovariant assembly needs a passing YD module", yd_report)
    CM = bicovariant_from_yd(rr)
    report = check_bimodule(CM.bimodule)
    report.extend(check_covariance(CM))
    rho = right_action_on_generators(CM.bimodule)
    report.add(_info("roundtrip.right_action", "ρ(a)v = ε_V((1⊗v).a)", rho.matrices == rr.action.matrices))
    _write_output(args, CM)
    return _Result(report, [M], {"bimodule": dump(CM)} if args.emit else None)


def cmd_dualize(args) -> _Result:
    target = args.catalog or args.target
    CM = _require_kind(resolve(target, ("bimodule",)), CovariantBimodule, "a bimodule")
    D = dualize(CM.bimodule)
    report = check_pairing(D)
    back = dualize(D.dual)
    original = D.source if CM.bimodule.presentation == "VA" else D.dual
    twice = back.source if original is D.source else back.dual
    report.add(_info("double_dual", "dual of the dual returns the original rule",
                     twice.rule.same_tensors(original.rule)))
    if args.check_covariance:
        if CM.bimodule.presentation != "VA":
            raise UsageError("--check-covariance needs a right free bimodule V⊗B as input")
        report.extend(check_dual_covariance(D, CM.bialgebra))
        if target in BIMODULE_SEEDS and not Path(target).is_file() and not bimodule_seed(target)[2]:
            # catalog seeds record whether the dual stays covariant over B itself
            report.expect("plain.covariance.left.right_action", False)
    _write_output(args, CovariantBimodule(D.dual if CM.bimodule.presentation == "VA" else D.source, CM.bialgebra))
    return _Result(report, [CM, "covariance" if args.check_covariance else "plain"])


def cmd_pairing_identity(args) -> _Result:
    if args.all:
        report = VerificationReport()
        for name, R in right_comodule_catalog().items():
            report.extend(pairing_identity(R), f"{name}.")
        return _Result(report, ["all-catalog-right-comodules"])
    if not args.inputs:
        raise UsageError("give a comodule (optionally preceded by its Hopf algebra) or --all")
    if len(args.inputs) > 2:
        raise UsageError("at most two inputs: HOPF COMODULE")
    H = resolve(args.inputs[0], ("algebra",)) if len(args.inputs) == 2 else None
    R = resolve(args.inputs[-1], ("comodule",), H)
    R = _require_kind(R, RightComodule, "a right comodule")
    return _Result(pairing_identity(R), [R])


def _bicovariance_report(C: FODC) -> VerificationReport:
    M = YDModule(C.bialgebra, C.action, C.coaction, "LL")
    report = VerificationReport().extend(check_yd(M), "bicovariant.")
    if report.passed:
        rr = yd_ll_to_rr(M)
        CM = CovariantBimodule(bimodule_from_right_module(rr.bialgebra, rr.action), rr.bialgebra, rr.coaction)
        report.extend(check_covariance(CM), "bicovariant.")
    return report


def _calculus_report(C: FODC, seed: int) -> VerificationReport:
    report = check_fodc(C)
    report.extend(check_right_covariance(C, samples=3, seed=seed))
    report.extend(check_cartan(C))
    if C.coaction is not None:
        report.extend(_bicovariance_report(C))
    return report


def cmd_calculus_build(args) -> _Result:
    try:
        G = parse_group(args.group)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    C = finite_group_calculus(G, _parse_subset(G, args.subset))
    report = _calculus_report(C, args.seed)
    _write_output(args, C)
    return _Result(report, [C], None if args.output else {"fodc": dump(C)})


def cmd_calculus_check(args) -> _Result:
    C = _require_kind(resolve(args.target, ("fodc",)), FODC, "a calculus")
    return _Result(_calculus_report(C, args.seed), [C])


def cmd_calculus_vector_fields(args) -> _Result:
    C = _require_kind(resolve(args.target, ("fodc",)), FODC, "a calculus")
    report = check_cartan(C)
    chi = woronowicz_functionals(C)
    B = C.bialgebra
    unit_ok = all(sum((f.get(j, la.ZERO) * c for j, c in B.one().items()), la.ZERO) == 0 for f in chi)
    report.add(_info("chi.unit", "χ^i(1) = 0", unit_ok))
    artifacts, text = {}, []
    if args.emit == "chi":
        artifacts["chi"] = {
            "basis": list(B.basis),
            "functionals": {C.basis[i]: [format_scalar(f.get(j, la.ZERO)) for j in range(B.dim)]
                            for i, f in enumerate(chi)},
        }
        text.extend(f"χ^{C.basis[i]} = {la.format_vec(f, tuple(f'[{b}]' for b in B.basis))}"
                    for i, f in enumerate(chi))
    return _Result(report, [C], artifacts, text)


def cmd_calculus_bracket(args) -> _Result:
    C = _require_kind(resolve(args.target, ("fodc",)), FODC, "a calculus")
    table = quantum_lie_bracket(C)
    report = VerificationReport()
    report.add(_info("bracket.closure", "[χ_i, χ_j] ∈ span{χ_k}", table.closed, "bracket outside span"))
    artifacts, text = {}, []
    if args.emit == "table":
        artifacts["bracket"] = table.to_dict()
        text.append(table.format_text())
    return _Result(report, [C], artifacts, text)


def _write_output(args, obj) -> None:
    path = getattr(args, "output", None)
    if path:
        Path(path).write_text(json.dumps(dump(obj), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


# -- parser and driver -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def options(top: bool) -> argparse.ArgumentParser:
        # subcommands repeat the options without defaults so a value given
        # before the subcommand survives
        o = argparse.ArgumentParser(add_help=False)
        o.add_argument("--format", choices=("json", "text"),
                       default="text" if top else argparse.SUPPRESS, help="report format")
        o.add_argument("--expect", action="append", default=[] if top else argparse.SUPPRESS,
                       metavar="CHECK=pass|fail", help="declare the expected outcome of a named check (repeatable)")
        return o

    common = options(top=False)
    p = argparse.ArgumentParser(prog="hopfmod", description="Exact verification of Hopf-algebraic structures.",
                                parents=[options(top=True)])
    p.add_argument("--version", action="version", version=f"hopfmod {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    c = sub.add_parser("check", parents=[common], help="verify an algebra or any definition file")
    c.add_argument("target", help="definition file or catalog name")
    c.add_argument("--level", choices=("algebra", "coalgebra", "bialgebra", "hopf"))
    c.set_defaults(func=cmd_check)

    yd = sub.add_parser("yd", parents=[common], help="Yetter-Drinfeld modules")
    ysub = yd.add_subparsers(dest="yd_command", required=True, metavar="ACTION")
    y = ysub.add_parser("check", parents=[common], help="compatibility condition")
    y.add_argument("target")
    y.set_defaults(func=cmd_yd_check)
    y = ysub.add_parser("transform", parents=[common], help="move to another corner or to B^cop")
    y.add_argument("target")
    y.add_argument("--to", required=True, choices=("rr", "ll", "lr", "cop", "op-cop"))
    y.add_argument("--output", help="write the transformed module here")
    y.add_argument("--emit", action="store_true", help="include the transformed module in the report")
    y.set_defaults(func=cmd_yd_transform)
    y = ysub.add_parser("dual", parents=[common], help="compare the verdicts on M and its transpose")
    y.add_argument("target")
    y.set_defaults(func=cmd_yd_dual)
    y = ysub.add_parser("yangbaxter", parents=[common], help="braiding of the module")
    y.add_argument("target")
    y.add_argument("--emit-matrix", action="store_true")
    y.set_defaults(func=cmd_yangbaxter)

    y = sub.add_parser("yangbaxter", parents=[common], help="braiding of a YD module")
    y.add_argument("target")
    y.add_argument("--emit-matrix", action="store_true")
    y.set_defaults(func=cmd_yangbaxter)

    bm = sub.add_parser("bimodule", parents=[common], help="free covariant bimodules")
    bsub = bm.add_subparsers(dest="bimodule_command", required=True, metavar="ACTION")
    b = bsub.add_parser("build", parents=[common], help="right covariant V⊗B from a left module")
    b.add_argument("--from-module", required=True, metavar="MODULE")
    b.add_argument("--cop", action="store_true", help="use Λ(a) = λ(a_(2))a_(1) (covariant over B^cop)")
    b.add_argument("--output")
    b.add_argument("--emit", action="store_true")
    b.set_defaults(func=cmd_bimodule_build)
    b = bsub.add_parser("check", parents=[common], help="bimodule axioms and covariance")
    b.add_argument("target")
    b.add_argument("--sides", default="left,right,bicomodule")
    b.set_defaults(func=cmd_bimodule_check)
    b = bsub.add_parser("from-yd", parents=[common], help="bicovariant B⊗V from a YD module")
    b.add_argument("target")
    b.add_argument("--output")
    b.add_argument("--emit", action="store_true")
    b.set_defaults(func=cmd_bimodule_from_yd)

    d = sub.add_parser("dualize", parents=[common], help="dual bimodule and its covariance")
    d.add_argument("target", nargs="?")
    d.add_argument("--catalog", choices=sorted(BIMODULE_SEEDS))
    d.add_argument("--check-covariance", action="store_true")
    d.add_argument("--output")
    d.set_defaults(func=cmd_dualize)

    pi = sub.add_parser("pairing-identity", parents=[common], help="antipode pairing identity of a right comodule")
    pi.add_argument("inputs", nargs="*", metavar="INPUT", help="[HOPF] COMODULE")
    pi.add_argument("--all", action="store_true", help="run on every catalog right comodule")
    pi.set_defaults(func=cmd_pairing_identity)

    cal = sub.add_parser("calculus", parents=[common], help="first-order differential calculi")
    csub = cal.add_subparsers(dest="calculus_command", required=True, metavar="ACTION")
    x = csub.add_parser("build", parents=[common], help="finite-group calculus on k(G)")
    x.add_argument("--group", required=True, help="Zn or Sn")
    x.add_argument("--subset", required=True, help="comma-separated labels, or 'transpositions'")
    x.add_argument("--output")
    x.add_argument("--seed", type=int, default=0)
    x.set_defaults(func=cmd_calculus_build)
    x = csub.add_parser("check", parents=[common], help="Leibniz rule and covariance")
    x.add_argument("target")
    x.add_argument("--seed", type=int, default=0)
    x.set_defaults(func=cmd_calculus_check)
    x = csub.add_parser("vector-fields", parents=[common], help="Cartan action and χ functionals")
    x.add_argument("target")
    x.add_argument("--emit", choices=("chi",))
    x.set_defaults(func=cmd_calculus_vector_fields)
    x = csub.add_parser("bracket", parents=[common], help="quantum Lie bracket table")
    x.add_argument("target")
    x.add_argument("--emit", choices=("table",))
    x.set_defaults(func=cmd_calculus_bracket)
    return p


def _apply_expectations(report: VerificationReport, specs: list) -> None:
    for spec in specs:
        name, sep, value = spec.partition("=")
        if not sep or value not in ("pass", "fail"):
            raise UsageError(f"--expect takes CHECK=pass or CHECK=fail, got {spec!r}")
        if name not in report:
            raise UsageError(f"--expect names unknown check {name!r}")
        report.expect(name, value == "pass")


def _emit(result: _Result, fmt: str, out) -> None:
    digest = _digest_of(result.inputs)
    if fmt == "json":
        body = {"tool_version": __version__, "input_digest": digest}
        body.update(result.report.to_dict())
        if result.artifacts:
            body["artifacts"] = result.artifacts
        out.write(json.dumps(body, indent=2, ensure_ascii=False) + "\n")
        return
    lines = [f"hopfmod {__version__}  input {digest}", result.report.format_text()]
    lines.extend(result.text)
    ok = result.report.ok
    failed = sum(1 for c in result.report.checks if not c.ok)
    lines.append(f"RESULT: {'ok' if ok else 'FAILED'} ({len(result.report.checks)} checks, {failed} unexpected)")
    out.write("\n".join(lines) + "\n")


def run(argv: Optional[list] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
        _apply_expectations(result.report, args.expect)
    except (InputError, UsageError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except VerificationFailed as exc:
        err.write(f"verification failed: {exc}\n")
        _emit(_Result(exc.report, [str(exc)]), args.format, out)
        return 1
    except ConsistencyAlarm as exc:
        err.write(f"internal consistency alarm: {exc}\n")
        return 1
    except StructureError as exc:
        err.write(f"error: {exc}\n")
        return 2
    _emit(result, args.format, out)
    return 0 if result.report.ok else 1


def main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
