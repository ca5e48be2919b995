"""JSON definition files for algebras, (co)modules, YD modules, bimodules and calculi.

Scalars are written as strings (``"1/2"``, ``"q^2 - 1"``); plain integers are
accepted on input.  Every structure other than an algebra names its algebra
with ``"algebra"``: either a catalog name or an inline algebra object.

Algebra::

    {"name", "dim", "basis", "unit": [s...], "mult": [[i, j, [[k, s]...]]...],
     "comult": [[i, [[j, k, s]...]]...], "counit": [s...],
     "antipode": [[i, [[j, s]...]]...]}          # optional

Other kinds carry ``"kind"`` plus ``"dim"`` and optional ``"basis"``:

* ``left-module`` / ``right-module``: ``"action": [[j, [[i, k, s]...]]...]``
  (entry ``(i, k)`` of the matrix of ``a_j``);
* ``left-comodule`` / ``right-comodule``: ``"coaction": [[i, k, [[p, s]...]]...]``;
* ``yd``: ``"corner"``, ``"action"`` and ``"coaction"``;
* ``bimodule``: ``"orientation"`` (``left`` for ``V⊗A``, ``right`` for
  ``A⊗V``), ``"rule": [[j, i, k, [[p, s]...]]...]`` and an optional
  ``"coaction"`` for the non-free side;
* ``fodc``: ``"action"``, ``"partials": [[i, [[row, col, s]...]]...]`` and an
  optional left ``"coaction"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .algebra import BialgebraData, FinAlgebra, FinCoalgebra, HopfAlgebraData
from .bimodules import CommutationRule, CovariantBimodule, FreeBimodule
from .calculus import FODC
from .catalog import get_algebra
from .linalg import ZERO, as_matrix, zeros
from .modules import LeftComodule, LeftModule, RightComodule, RightModule
from .report import StructureError
from .scalars import ScalarParseError, format_scalar, parse_scalar
from .yd import YDModule

__all__ = ["InputError", "load", "loads", "parse_definition", "dump", "dumps"]


class InputError(ValueError):
    """Malformed definition; ``location`` points into the file."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class _Ctx:
    def __init__(self, source: str, path: str = "$"):
        self.source = source
        self.path = path

    def at(self, key) -> "_Ctx":
        suffix = f"[{key}]" if isinstance(key, int) else f".{key}"
        return _Ctx(self.source, self.path + suffix)

    def fail(self, message: str):
        where = f"{self.source}:{self.path}" if self.source else self.path
        raise InputError(message, where)


def _get(obj: Mapping, key: str, ctx: _Ctx, default: Any = ...):
    if not isinstance(obj, dict):
        ctx.fail("expected an object")
    if key not in obj:
        if default is ...:
            ctx.fail(f"missing field {key!r}")
        return default
    return obj[key]


def _list(x, ctx: _Ctx, length: int | None = None) -> list:
    if not isinstance(x, list):
        ctx.fail("expected a list")
    if length is not None and len(x) != length:
        ctx.fail(f"expected a list of length {length}, got {len(x)}")
    return x


def _index(x, bound: int, ctx: _Ctx) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        ctx.fail("expected an integer index")
    if not 0 <= x < bound:
        ctx.fail(f"index {x} out of range 0..{bound - 1}")
    return x


def _scalar(x, ctx: _Ctx):
    if isinstance(x, bool):
        ctx.fail("expected a scalar")
    if isinstance(x, int):
        return parse_scalar(str(x))
    if not isinstance(x, str):
        ctx.fail("scalars must be strings or integers (floats are not exact)")
    try:
        return parse_scalar(x)
    except (ScalarParseError, ZeroDivisionError) as exc:
        ctx.fail(f"bad scalar {x!r}: {exc}")


def _dim(obj, ctx: _Ctx) -> int:
    d = _get(obj, "dim", ctx)
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        ctx.at("dim").fail("dim must be a non-negative integer")
    return d


def _basis(obj, d: int, ctx: _Ctx, prefix: str = "e") -> tuple:
    b = _get(obj, "basis", ctx, None)
    if b is None:
        return tuple(f"{prefix}{i}" for i in range(d))
    c = ctx.at("basis")
    b = _list(b, c, d)
    for i, x in enumerate(b):
        if not isinstance(x, str):
            c.at(i).fail("basis labels must be strings")
    if len(set(b)) != len(b):
        c.fail("basis labels must be distinct")
    return tuple(b)


def _vector(entries, n: int, ctx: _Ctx) -> dict:
    """``[[p, s]...]`` to a sparse vector."""
    out: dict = {}
    for t, pair in enumerate(_list(entries, ctx)):
        c = ctx.at(t)
        p, s = _list(pair, c, 2)
        p = _index(p, n, c.at(0))
        out[p] = out.get(p, ZERO) + _scalar(s, c.at(1))
    return out


# -- algebras ----------------------------------------------------------------

def _algebra(obj, ctx: _Ctx) -> BialgebraData:
    if isinstance(obj, str):
        try:
            return get_algebra(obj)
        except KeyError as exc:
            ctx.fail(str(exc.args[0]))
    n = _dim(obj, ctx)
    basis = _basis(obj, n, ctx, "a")
    name = _get(obj, "name", ctx, "")
    if not isinstance(name, str):
        ctx.at("name").fail("name must be a string")
    unit_c = ctx.at("unit")
    unit = {i: _scalar(s, unit_c.at(i)) for i, s in enumerate(_list(_get(obj, "unit", ctx), unit_c, n))}
    mult: dict = {}
    mc = ctx.at("mult")
    for t, row in enumerate(_list(_get(obj, "mult", ctx), mc)):
        c = mc.at(t)
        i, j, vec = _list(row, c, 3)
        key = (_index(i, n, c.at(0)), _index(j, n, c.at(1)))
        if key in mult:
            c.fail(f"duplicate product entry {key}")
        mult[key] = _vector(vec, n, c.at(2))
    comult: dict = {}
    cc = ctx.at("comult")
    for t, row in enumerate(_list(_get(obj, "comult", ctx), cc)):
        c = cc.at(t)
        i, terms = _list(row, c, 2)
        i = _index(i, n, c.at(0))
        if i in comult:
            c.fail(f"duplicate coproduct entry {i}")
        out: dict = {}
        tc = c.at(1)
        for u, term in enumerate(_list(terms, tc)):
            c2 = tc.at(u)
            j, k, s = _list(term, c2, 3)
            key = (_index(j, n, c2.at(0)), _index(k, n, c2.at(1)))
            out[key] = out.get(key, ZERO) + _scalar(s, c2.at(2))
        comult[i] = out
    counit_c = ctx.at("counit")
    counit = {i: _scalar(s, counit_c.at(i)) for i, s in enumerate(_list(_get(obj, "counit", ctx), counit_c, n))}
    algebra = FinAlgebra(basis, mult, unit)
    coalgebra = FinCoalgebra(basis, comult, counit)
    antipode = _get(obj, "antipode", ctx, None)
    if antipode is None:
        return BialgebraData(algebra, coalgebra, name)
    sc = ctx.at("antipode")
    cols = [[ZERO] * n for _ in range(n)]
    for t, row in enumerate(_list(antipode, sc)):
        c = sc.at(t)
        i, vec = _list(row, c, 2)
        i = _index(i, n, c.at(0))
        for j, s in _vector(vec, n, c.at(1)).items():
            cols[i][j] = s
    S = tuple(tuple(cols[i][j] for i in range(n)) for j in range(n))
    return HopfAlgebraData(algebra, coalgebra, name, S)


# -- (co)actions -------------------------------------------------------------

def _matrices(entries, n: int, d: int, ctx: _Ctx) -> tuple:
    mats = [[[ZERO] * d for _ in range(d)] for _ in range(n)]
    seen = set()
    for t, row in enumerate(_list(entries, ctx)):
        c = ctx.at(t)
        j, cells = _list(row, c, 2)
        j = _index(j, n, c.at(0))
        if j in seen:
            c.fail(f"duplicate matrix for basis element {j}")
        seen.add(j)
        cc = c.at(1)
        for u, cell in enumerate(_list(cells, cc)):
            c2 = cc.at(u)
            i, k, s = _list(cell, c2, 3)
            mats[j][_index(i, d, c2.at(0))][_index(k, d, c2.at(1))] = _scalar(s, c2.at(2))
    return tuple(as_matrix(m) for m in mats)


def _coaction_entries(entries, n: int, d: int, ctx: _Ctx) -> tuple:
    ent = [[{} for _ in range(d)] for _ in range(d)]
    for t, row in enumerate(_list(entries, ctx)):
        c = ctx.at(t)
        i, k, vec = _list(row, c, 3)
        i, k = _index(i, d, c.at(0)), _index(k, d, c.at(1))
        ent[i][k] = _vector(vec, n, c.at(2))
    return tuple(tuple(r) for r in ent)


def _module(obj, B, d, basis, ctx, cls):
    return cls(B, d, _matrices(_get(obj, "action", ctx), B.dim, d, ctx.at("action")), basis)


def _comodule(obj, B, d, basis, ctx, cls):
    return cls(B, d, _coaction_entries(_get(obj, "coaction", ctx), B.dim, d, ctx.at("coaction")), basis)


def _rule(obj, B, d, basis, ctx) -> CommutationRule:
    orientation = _get(obj, "orientation", ctx, "left")
    if orientation not in ("left", "right"):
        ctx.at("orientation").fail("orientation must be 'left' or 'right'")
    rule = [[[{} for _ in range(d)] for _ in range(d)] for _ in range(B.dim)]
    rc = ctx.at("rule")
    for t, row in enumerate(_list(_get(obj, "rule", ctx), rc)):
        c = rc.at(t)
        j, i, k, vec = _list(row, c, 4)
        j, i, k = _index(j, B.dim, c.at(0)), _index(i, d, c.at(1)), _index(k, d, c.at(2))
        rule[j][i][k] = _vector(vec, B.dim, c.at(3))
    return CommutationRule(B, d, tuple(tuple(tuple(r) for r in m) for m in rule), orientation, basis)


KINDS = ("algebra", "left-module", "right-module", "left-comodule", "right-comodule", "yd", "bimodule", "fodc")


def parse_definition(obj, source: str = "", algebra: BialgebraData | None = None):
    """Build the structure described by a decoded JSON object."""
    ctx = _Ctx(source)
    if not isinstance(obj, dict):
        ctx.fail("definition must be a JSON object")
    kind = obj.get("kind", "algebra")
    if kind not in KINDS:
        ctx.at("kind").fail(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind == "algebra":
            return _algebra(obj, ctx)
        B = algebra if algebra is not None else _algebra(_get(obj, "algebra", ctx), ctx.at("algebra"))
        d = _dim(obj, ctx)
        basis = _basis(obj, d, ctx)
        if kind in ("left-module", "right-module"):
            return _module(obj, B, d, basis, ctx, LeftModule if kind == "left-module" else RightModule)
        if kind in ("left-comodule", "right-comodule"):
            return _comodule(obj, B, d, basis, ctx, LeftComodule if kind == "left-comodule" else RightComodule)
        if kind == "yd":
            corner = _get(obj, "corner", ctx)
            if corner not in ("LL", "RR", "LR", "RL"):
                ctx.at("corner").fail("corner must be one of LL, RR, LR, RL")
            act_cls = LeftModule if corner[0] == "L" else RightModule
            co_cls = LeftComodule if corner[1] == "L" else RightComodule
            return YDModule(B, _module(obj, B, d, basis, ctx, act_cls), _comodule(obj, B, d, basis, ctx, co_cls), corner)
        if kind == "bimodule":
            rule = _rule(obj, B, d, basis, ctx)
            M = FreeBimodule(rule)
            if "coaction" in obj:
                cls = RightComodule if rule.orientation == "right" else LeftComodule
                return CovariantBimodule(M, B, _comodule(obj, B, d, basis, ctx, cls))
            return CovariantBimodule(M, B)
        # fodc
        action = _module(obj, B, d, basis, ctx, LeftModule)
        pc = ctx.at("partials")
        parts = [zeros(B.dim, B.dim) for _ in range(d)]
        parts = [[list(r) for r in m] for m in parts]
        for t, row in enumerate(_list(_get(obj, "partials", ctx), pc)):
            c = pc.at(t)
            i, cells = _list(row, c, 2)
            i = _index(i, d, c.at(0))
            cc = c.at(1)
            for u, cell in enumerate(_list(cells, cc)):
                c2 = cc.at(u)
                r, col, s = _list(cell, c2, 3)
                parts[i][_index(r, B.dim, c2.at(0))][_index(col, B.dim, c2.at(1))] = _scalar(s, c2.at(2))
        coaction = _comodule(obj, B, d, basis, ctx, LeftComodule) if "coaction" in obj else None
        return FODC(B, action, tuple(parts), coaction, str(obj.get("name", "")))
    except StructureError as exc:
        if isinstance(exc, InputError):
            raise
        ctx.fail(str(exc))


def loads(text: str, source: str = "<string>", algebra: BialgebraData | None = None):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None
    return parse_definition(obj, source, algebra)


def load(path, algebra: BialgebraData | None = None):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None
    return loads(text, str(path), algebra)


# -- writing -----------------------------------------------------------------

def _s(x) -> str:
    return format_scalar(x)


def _vec_out(v: Mapping) -> list:
    return [[p, _s(c)] for p, c in sorted(v.items())]


def _algebra_ref(B: BialgebraData):
    try:
        if B.name and get_algebra(B.name) == B:
            return B.name
    except KeyError:
        pass
    return dump(B)


def _matrices_out(mats) -> list:
    out = []
    for j, m in enumerate(mats):
        cells = [[i, k, _s(x)] for i, row in enumerate(m) for k, x in enumerate(row) if x != 0]
        out.append([j, cells])
    return out


def _coaction_out(entries) -> list:
    return [[i, k, _vec_out(v)] for i, row in enumerate(entries) for k, v in enumerate(row) if v]


def dump(obj) -> dict:
    """JSON-ready definition of a structure (inverse of :func:`parse_definition`)."""
    if isinstance(obj, BialgebraData):
        A, C = obj.algebra, obj.coalgebra
        out = {
            "name": obj.name,
            "dim": obj.dim,
            "basis": list(obj.basis),
            "unit": [_s(A.unit.get(i, ZERO)) for i in range(obj.dim)],
            "mult": [[i, j, _vec_out(v)] for (i, j), v in sorted(A.mult.items())],
            "comult": [[i, [[j, k, _s(c)] for (j, k), c in sorted(v.items())]] for i, v in sorted(C.comult.items())],
            "counit": [_s(C.counit.get(i, ZERO)) for i in range(obj.dim)],
        }
        if isinstance(obj, HopfAlgebraData):
            n = obj.dim
            out["antipode"] = [
                [i, [[j, _s(obj.antipode[j][i])] for j in range(n) if obj.antipode[j][i] != 0]] for i in range(n)
            ]
        return out
    if isinstance(obj, (LeftModule, RightModule)):
        return {
            "kind": "left-module" if isinstance(obj, LeftModule) else "right-module",
            "algebra": _algebra_ref(obj.algebra),
            "dim": obj.dim,
            "basis": list(obj.basis),
            "action": _matrices_out(obj.matrices),
        }
    if isinstance(obj, (LeftComodule, RightComodule)):
        return {
            "kind": "left-comodule" if isinstance(obj, LeftComodule) else "right-comodule",
            "algebra": _algebra_ref(obj.coalgebra),
            "dim": obj.dim,
            "basis": list(obj.basis),
            "coaction": _coaction_out(obj.entries),
        }
    if isinstance(obj, YDModule):
        return {
            "kind": "yd",
            "corner": obj.corner,
            "algebra": _algebra_ref(obj.bialgebra),
            "dim": obj.dim,
            "basis": list(obj.basis),
            "action": _matrices_out(obj.action.matrices),
            "coaction": _coaction_out(obj.coaction.entries),
        }
    if isinstance(obj, FreeBimodule):
        obj = CovariantBimodule(obj, obj.algebra)
    if isinstance(obj, CovariantBimodule):
        R = obj.bimodule.rule
        out = {
            "kind": "bimodule",
            "algebra": _algebra_ref(obj.bialgebra),
            "dim": R.dim,
            "basis": list(R.basis),
            "orientation": R.orientation,
            "rule": [
                [j, i, k, _vec_out(R.rule[j][i][k])]
                for j in range(len(R.rule)) for i in range(R.dim) for k in range(R.dim) if R.rule[j][i][k]
            ],
        }
        if obj.comodule is not None:
            out["coaction"] = _coaction_out(obj.comodule.entries)
        return out
    if isinstance(obj, FODC):
        out = {
            "kind": "fodc",
            "name": obj.name,
            "algebra": _algebra_ref(obj.bialgebra),
            "dim": obj.dim,
            "basis": list(obj.basis),
            "action": _matrices_out(obj.action.matrices),
            "partials": [
                [i, [[r, c, _s(x)] for r, row in enumerate(m) for c, x in enumerate(row) if x != 0]]
                for i, m in enumerate(obj.partials)
            ],
        }
        if obj.coaction is not None:
            out["coaction"] = _coaction_out(obj.coaction.entries)
        return out
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(dump(obj), indent=2, ensure_ascii=False)
