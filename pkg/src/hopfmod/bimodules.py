"""Free bimodules given by commutation rules, twists and covariance conditions.

Two presentations of a free bimodule over an algebra ``A`` with generating
space ``V`` (basis ``e_k``):

* ``"VA"`` -- right free ``V⊗A``; the left action goes through a rule
  ``Λ``: ``a.(e_k⊗1) = e_i⊗Λ^i_k(a)``;
* ``"AV"`` -- left free ``A⊗V``; the right action goes through a rule
  ``Φ``: ``(1⊗e_k).a = Φ^i_k(a)⊗e_i``.

Elements of either are sparse dicts keyed ``(algebra index, carrier index)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg as la
from .algebra import BialgebraData, co_opposite
from .linalg import ONE, ZERO, accumulate, clean
from .modules import LeftComodule, LeftModule, RightComodule, RightModule, verify_comodule, verify_module
from .report import Check, StructureError, VerificationFailed, VerificationReport, run_identity
from .scalars import as_scalar
from .yd import YDModule, check_yd

__all__ = [
    "CommutationRule",
    "TwistMap",
    "FreeBimodule",
    "CovariantBimodule",
    "verify_rule",
    "rule_from_left_module",
    "rule_from_left_module_cop",
    "module_from_rule",
    "twist_from_rule",
    "rule_from_twist",
    "check_twist",
    "rule_from_bimodule",
    "check_bimodule",
    "epsilon_projection",
    "check_epsilon_projection",
    "bimodule_from_right_module",
    "right_action_on_generators",
    "check_covariance",
    "bicovariant_from_yd",
    "check_rule_intertwining",
    "rule_intertwining_witnesses",
    "SIDES",
]

Element = dict  # {(algebra index, carrier index): scalar}


@dataclass(frozen=True)
class CommutationRule:
    """``rule[j][i][k]`` is ``Λ^i_k(a_j)`` (orientation ``"left"``) or ``Φ^i_k(a_j)``
    (orientation ``"right"``), an element of the algebra."""

    algebra: BialgebraData
    dim: int
    rule: tuple
    orientation: str = "left"
    basis: tuple = ()

    def __post_init__(self):
        if self.orientation not in ("left", "right"):
            raise StructureError(f"unknown orientation {self.orientation!r}")
        r = tuple(
            tuple(tuple(clean({int(p): as_scalar(c) for p, c in dict(e).items()}) for e in row) for row in mat)
            for mat in self.rule
        )
        object.__setattr__(self, "rule", r)
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(self.dim)))
        if len(r) != self.algebra.dim:
            raise StructureError("commutation rule needs one matrix per algebra basis element")
        if any(len(m) != self.dim or any(len(row) != self.dim for row in m) for m in r):
            raise StructureError(f"commutation rule matrices are not {self.dim}x{self.dim}")

    def entry(self, i: int, k: int, a: Mapping) -> dict:
        out: dict = {}
        for j, c in a.items():
            for p, x in self.rule[j][i][k].items():
                accumulate(out, p, c * x)
        return clean(out)

    def same_tensors(self, other: "CommutationRule") -> bool:
        return self.orientation == other.orientation and self.rule == other.rule


def verify_rule(R: CommutationRule) -> VerificationReport:
    """Unit and multiplicativity of a commutation rule.

    Left: ``Λ^i_k(ab) = Λ^i_m(a)Λ^m_k(b)``; right: ``Φ^i_k(ab) = Φ^m_k(a)Φ^i_m(b)``.
    """
    A, d = R.algebra, R.dim
    fmt = A.fmt
    report = VerificationReport()
    report.add(run_identity(
        "rule.unit",
        "Λ^i_k(1) = δ^i_k 1",
        (((R.basis[i], R.basis[k]), R.entry(i, k, A.one()), A.one() if i == k else {})
         for i, k in product(range(d), repeat=2)),
        fmt,
    ))

    def cases():
        for a, b in product(range(A.dim), repeat=2):
            ab = A.mul({a: ONE}, {b: ONE})
            for i, k in product(range(d), repeat=2):
                rhs: dict = {}
                for m in range(d):
                    if R.orientation == "left":
                        rhs = la.vadd(rhs, A.mul(R.rule[a][i][m], R.rule[b][m][k]))
                    else:
                        rhs = la.vadd(rhs, A.mul(R.rule[a][m][k], R.rule[b][i][m]))
                yield (A.basis[a], A.basis[b], R.basis[i], R.basis[k]), R.entry(i, k, ab), rhs

    anchor = "Λ^i_k(ab) = Λ^i_m(a)Λ^m_k(b)" if R.orientation == "left" else "Φ^i_k(ab) = Φ^m_k(a)Φ^i_m(b)"
    report.add(run_identity("rule.multiplicative", anchor, cases(), fmt))
    return report


def _require(report: VerificationReport, what: str) -> None:
    if not report.passed:
        raise VerificationFailed(what, report)


# -- rules from representations ----------------------------------------------

def _rule_from_module(B: BialgebraData, lam: LeftModule, cop: bool) -> CommutationRule:
    _require(verify_module(lam), "a commutation rule needs a valid left module")
    if not isinstance(lam, LeftModule):
        raise StructureError("expected a left module")
    d = lam.dim
    rule = []
    for j in range(B.dim):
        mat = [[{} for _ in range(d)] for _ in range(d)]
        for (p, q), c in B.delta({j: ONE}).items():
            act, tail = (q, p) if cop else (p, q)
            for i, k in product(range(d), repeat=2):
                x = lam.matrices[act][i][k]
                if x != 0:
                    mat[i][k] = la.vadd(mat[i][k], {tail: c * x})
        rule.append(tuple(tuple(r) for r in mat))
    return CommutationRule(B, d, tuple(rule), "left", lam.basis)


def rule_from_left_module(B: BialgebraData, lam: LeftModule) -> CommutationRule:
    """``Λ^i_k(a) = λ^i_k(a_(1)) a_(2)``: the right ``B``-covariant bimodule ``V⊗B``."""
    return _rule_from_module(B, lam, cop=False)


def rule_from_left_module_cop(B: BialgebraData, lam: LeftModule) -> CommutationRule:
    """``Λ^i_k(a) = λ^i_k(a_(2)) a_(1)``: the right ``B^cop``-covariant version."""
    return _rule_from_module(B, lam, cop=True)


def module_from_rule(R: CommutationRule) -> LeftModule:
    """``λ^i_k = ε∘Λ^i_k``."""
    B = R.algebra
    mats = tuple(
        tuple(tuple(B.eps(R.rule[j][i][k]) for k in range(R.dim)) for i in range(R.dim))
        for j in range(B.dim)
    )
    return LeftModule(B, R.dim, mats, R.basis)


# -- twists ------------------------------------------------------------------

@dataclass(frozen=True)
class TwistMap:
    """Linear map ``A⊗V → V⊗A``.

    Column ``j*d + k`` is the image of ``a_j⊗e_k``; row ``i*n + l`` the
    coefficient of ``e_i⊗a_l``.
    """

    algebra: BialgebraData
    dim: int
    matrix: tuple
    basis: tuple = ()

    def image(self, j: int, k: int) -> dict:
        """``Λ̂(a_j⊗e_k)`` as a tensor keyed ``(carrier index, algebra index)``."""
        n = self.algebra.dim
        col = la.column(self.matrix, j * self.dim + k)
        return {(r // n, r % n): c for r, c in col.items()}


def twist_from_rule(R: CommutationRule) -> TwistMap:
    """``Λ̂(a⊗e_k) = e_i⊗Λ^i_k(a)``."""
    if R.orientation != "left":
        raise StructureError("twist_from_rule needs a left commutation rule")
    _require(verify_rule(R), "twist_from_rule needs a valid rule")
    n, d = R.algebra.dim, R.dim
    cols = []
    for j, k in product(range(n), range(d)):
        col: dict = {}
        for i in range(d):
            for l, c in R.rule[j][i][k].items():
                col[i * n + l] = c
        cols.append(col)
    return TwistMap(R.algebra, d, la.from_columns(cols, d * n), R.basis)


def rule_from_twist(T: TwistMap) -> CommutationRule:
    n, d = T.algebra.dim, T.dim
    rule = []
    for j in range(n):
        mat = [[{} for _ in range(d)] for _ in range(d)]
        for k in range(d):
            for (i, l), c in T.image(j, k).items():
                mat[i][k] = la.vadd(mat[i][k], {l: c})
        rule.append(tuple(tuple(r) for r in mat))
    return CommutationRule(T.algebra, d, tuple(rule), "left", T.basis)


def check_twist(T: TwistMap) -> VerificationReport:
    """Unit and hexagon conditions of a twist, applied as linear maps.

    ``Λ̂(1⊗v) = v⊗1`` and ``Λ̂∘(m⊗id_V) = (id_V⊗m)∘(Λ̂⊗id_A)∘(id_A⊗Λ̂)`` on
    every basis triple ``a_j⊗a_l⊗e_k``.
    """
    A, n, d = T.algebra, T.algebra.dim, T.dim
    names = lambda idx: f"{T.basis[idx[0]]}⊗{A.basis[idx[1]]}"
    fmt = lambda t: la.format_vec(t, names)
    one = A.one()

    def apply_twist(t: Mapping) -> dict:  # keys (algebra, carrier) -> (carrier, algebra)
        out: dict = {}
        for (j, k), c in t.items():
            for key, x in T.image(j, k).items():
                accumulate(out, key, c * x)
        return clean(out)

    report = VerificationReport()
    report.add(run_identity(
        "twist.unit",
        "Λ̂(1⊗v) = v⊗1",
        (((T.basis[k],), apply_twist({(j, k): c for j, c in one.items()}), {(k, l): c for l, c in one.items()})
         for k in range(d)),
        fmt,
    ))

    def hexagon():
        for j, l, k in product(range(n), range(n), range(d)):
            lhs = apply_twist({(p, k): c for p, c in A.mul({j: ONE}, {l: ONE}).items()})
            # id_A ⊗ Λ̂ : a_j⊗(a_l⊗e_k) -> a_j⊗e_i⊗a_r
            step1 = {(j,) + key: c for key, c in T.image(l, k).items()}
            # Λ̂ ⊗ id_A : (a_j⊗e_i)⊗a_r -> e_s⊗a_t⊗a_r
            step2: dict = {}
            for (jj, i, r), c in step1.items():
                for (s, t), x in T.image(jj, i).items():
                    accumulate(step2, (s, t, r), c * x)
            # id_V ⊗ m
            rhs: dict = {}
            for (s, t, r), c in clean(step2).items():
                for p, x in A.mul({t: ONE}, {r: ONE}).items():
                    accumulate(rhs, (s, p), c * x)
            yield (A.basis[j], A.basis[l], T.basis[k]), lhs, clean(rhs)

    report.add(run_identity(
        "twist.hexagon", "Λ̂∘(m⊗id_V) = (id_V⊗m)∘(Λ̂⊗id_A)∘(id_A⊗Λ̂)", hexagon(), fmt
    ))
    return report


# -- bimodules ---------------------------------------------------------------

@dataclass(frozen=True)
class FreeBimodule:
    """Free bimodule ``V⊗A`` (left rule) or ``A⊗V`` (right rule)."""

    rule: CommutationRule

    @property
    def algebra(self) -> BialgebraData:
        return self.rule.algebra

    @property
    def dim(self) -> int:
        return self.rule.dim

    @property
    def presentation(self) -> str:
        return "VA" if self.rule.orientation == "left" else "AV"

    @property
    def basis(self) -> tuple:
        return self.rule.basis

    def generator(self, k: int) -> Element:
        return {(l, k): c for l, c in self.algebra.one().items()}

    def element(self, l: int, k: int) -> Element:
        """``e_k⊗a_l`` or ``a_l⊗e_k`` depending on the presentation."""
        return {(l, k): ONE}

    def components(self, x: Element) -> list:
        """``x^i`` with ``x = e_i⊗x^i`` (or ``x^i⊗e_i``)."""
        out = [dict() for _ in range(self.dim)]
        for (l, k), c in x.items():
            out[k][l] = c
        return [clean(v) for v in out]

    def from_components(self, comps: Sequence[Mapping]) -> Element:
        return clean({(l, k): c for k, v in enumerate(comps) for l, c in v.items()})

    def left_act(self, a: Mapping, x: Element) -> Element:
        A = self.algebra
        out: dict = {}
        if self.presentation == "AV":
            for (l, k), c in x.items():
                for p, y in A.mul(a, {l: ONE}).items():
                    accumulate(out, (p, k), c * y)
        else:  # a.(e_k⊗x) = e_i⊗Λ^i_k(a) x
            for (l, k), c in x.items():
                for i in range(self.dim):
                    lam = self.rule.entry(i, k, a)
                    if lam:
                        for p, y in A.mul(lam, {l: ONE}).items():
                            accumulate(out, (p, i), c * y)
        return clean(out)

    def right_act(self, x: Element, b: Mapping) -> Element:
        A = self.algebra
        out: dict = {}
        if self.presentation == "VA":
            for (l, k), c in x.items():
                for p, y in A.mul({l: ONE}, b).items():
                    accumulate(out, (p, k), c * y)
        else:  # (x⊗e_k).b = x Φ^i_k(b) ⊗ e_i
            for (l, k), c in x.items():
                for i in range(self.dim):
                    phi = self.rule.entry(i, k, b)
                    if phi:
                        for p, y in A.mul({l: ONE}, phi).items():
                            accumulate(out, (p, i), c * y)
        return clean(out)

    def label(self, key) -> str:
        l, k = key
        a, v = self.algebra.basis[l], self.basis[k]
        return f"{v}⊗{a}" if self.presentation == "VA" else f"{a}⊗{v}"

    def fmt(self, x: Element) -> str:
        return la.format_vec(x, lambda idx: self.label(idx))

    def basis_elements(self) -> Iterable[tuple]:
        return product(range(self.algebra.dim), range(self.dim))


def rule_from_bimodule(M: FreeBimodule) -> CommutationRule:
    """Read the rule back from the non-free action on generators."""
    A, d = M.algebra, M.dim
    rule = []
    for j in range(A.dim):
        mat = [[{} for _ in range(d)] for _ in range(d)]
        for k in range(d):
            if M.presentation == "VA":
                image = M.left_act({j: ONE}, M.generator(k))
            else:
                image = M.right_act(M.generator(k), {j: ONE})
            for i, comp in enumerate(M.components(image)):
                mat[i][k] = comp
        rule.append(tuple(tuple(r) for r in mat))
    return CommutationRule(A, d, tuple(rule), M.rule.orientation, M.basis)


def check_bimodule(M: FreeBimodule) -> VerificationReport:
    """Module axioms for both actions and their compatibility, on basis triples."""
    A = M.algebra
    n = A.dim
    e = lambda i: {i: ONE}
    report = VerificationReport()
    elems = list(M.basis_elements())
    lab = lambda key: M.label(key)
    report.add(run_identity(
        "bimodule.left_unit", "1.x = x",
        (((lab(key),), M.left_act(A.one(), M.element(*key)), M.element(*key)) for key in elems), M.fmt))
    report.add(run_identity(
        "bimodule.right_unit", "x.1 = x",
        (((lab(key),), M.right_act(M.element(*key), A.one()), M.element(*key)) for key in elems), M.fmt))
    report.add(run_identity(
        "bimodule.left_associative", "(ab).x = a.(b.x)",
        (((A.basis[a], A.basis[b], lab(key)),
          M.left_act(A.mul(e(a), e(b)), M.element(*key)),
          M.left_act(e(a), M.left_act(e(b), M.element(*key))))
         for a, b in product(range(n), repeat=2) for key in elems), M.fmt))
    report.add(run_identity(
        "bimodule.right_associative", "x.(ab) = (x.a).b",
        (((lab(key), A.basis[a], A.basis[b]),
          M.right_act(M.element(*key), A.mul(e(a), e(b))),
          M.right_act(M.right_act(M.element(*key), e(a)), e(b)))
         for a, b in product(range(n), repeat=2) for key in elems), M.fmt))
    report.add(run_identity(
        "bimodule.compatible", "(a.x).b = a.(x.b)",
        (((A.basis[a], lab(key), A.basis[b]),
          M.right_act(M.left_act(e(a), M.element(*key)), e(b)),
          M.left_act(e(a), M.right_act(M.element(*key), e(b))))
         for a, b in product(range(n), repeat=2) for key in elems), M.fmt))
    return report


# -- the counit projection and covariant bimodules ---------------------------

def epsilon_projection(M: FreeBimodule, x: Element) -> dict:
    """``ε_V(x^i⊗e_i) = ε(x^i) e_i`` on a left free bimodule ``B⊗V``."""
    if M.presentation != "AV":
        raise StructureError("epsilon_projection is defined on the presentation B⊗V")
    B = M.algebra
    out: dict = {}
    for (l, k), c in x.items():
        accumulate(out, k, c * B.eps({l: ONE}))
    return clean(out)


def _free_left_coaction(B: BialgebraData, x: Element) -> dict:
    """``Δ⊗id`` on ``B⊗V``; keys ``(b, algebra index, carrier index)``."""
    out: dict = {}
    for (l, k), c in x.items():
        for (p, q), y in B.delta({l: ONE}).items():
            accumulate(out, (p, q, k), c * y)
    return clean(out)


def check_epsilon_projection(M: FreeBimodule) -> VerificationReport:
    """``ε_V(a.x) = ε(a)ε_V(x)`` and ``(id⊗ε_V)∘Δ_{B⊗V} = id``."""
    B = M.algebra
    report = VerificationReport()
    elems = list(M.basis_elements())
    fmt_v = lambda v: la.format_vec(v, M.basis)
    report.add(run_identity(
        "epsilon_projection.left_linear", "ε_V(a.x) = ε(a)ε_V(x)",
        (((B.basis[a], M.label(key)),
          epsilon_projection(M, M.left_act({a: ONE}, M.element(*key))),
          la.vscale(epsilon_projection(M, M.element(*key)), B.eps({a: ONE})))
         for a in range(B.dim) for key in elems), fmt_v))

    def counit_cases():
        for key in elems:
            t = _free_left_coaction(B, M.element(*key))
            out: dict = {}
            for (p, q, k), c in t.items():
                e = B.eps({q: ONE})
                if e != 0:
                    accumulate(out, (p, k), c * e)
            yield (M.label(key),), clean(out), M.element(*key)

    report.add(run_identity(
        "epsilon_projection.counit", "(id⊗ε_V)∘Δ_{B⊗V} = id", counit_cases(), M.fmt))
    return report


def bimodule_from_right_module(B: BialgebraData, rho: RightModule, *, cop: bool = False) -> FreeBimodule:
    """Left free bimodule ``B⊗V`` from a right action on ``V``.

    ``(a⊗v).b = a b_(1) ⊗ ρ(b_(2))v``, or ``a b_(2) ⊗ ρ(b_(1))v`` with
    ``cop=True``; the result is left covariant over ``B`` (resp. ``B^cop``).
    """
    if not isinstance(rho, RightModule):
        raise StructureError("expected a right module")
    _require(verify_module(rho), "bimodule_from_right_module needs a valid right module")
    d = rho.dim
    rule = []
    for j in range(B.dim):
        mat = [[{} for _ in range(d)] for _ in range(d)]
        for (p, q), c in B.delta({j: ONE}).items():
            tail, act = (q, p) if cop else (p, q)
            for i, k in product(range(d), repeat=2):
                x = rho.matrices[act][i][k]
                if x != 0:
                    mat[i][k] = la.vadd(mat[i][k], {tail: c * x})
        rule.append(tuple(tuple(r) for r in mat))
    return FreeBimodule(CommutationRule(B, d, tuple(rule), "right", rho.basis))


def right_action_on_generators(M: FreeBimodule, *, cop: bool = False) -> RightModule:
    """``ρ(a)v = ε_V((1⊗v).a)``, checked against the reconstruction formula.

    Every ``(a⊗e_k).b`` must equal ``a b_(1) ⊗ ρ(b_(2))e_k`` (``b_(2)``,
    ``b_(1)`` with ``cop=True``); otherwise ``M`` was not left covariant and
    :class:`VerificationFailed` is raised with the witness.
    """
    if M.presentation != "AV":
        raise StructureError("right_action_on_generators needs the presentation B⊗V")
    B, d = M.algebra, M.dim
    mats = []
    for j in range(B.dim):
        cols = [epsilon_projection(M, M.right_act(M.generator(k), {j: ONE})) for k in range(d)]
        mats.append(la.from_columns(cols, d))
    rho = RightModule(B, d, tuple(mats), M.basis)

    def cases():
        for (l, k), b in product(M.basis_elements(), range(B.dim)):
            expected: dict = {}
            for (p, q), c in B.delta({b: ONE}).items():
                tail, act = (q, p) if cop else (p, q)
                left = B.mul({l: ONE}, {tail: ONE})
                v = la.column(rho.matrices[act], k)
                for (s, x), (i, y) in product(left.items(), v.items()):
                    accumulate(expected, (s, i), c * x * y)
            yield (M.label((l, k)), B.basis[b]), M.right_act(M.element(l, k), {b: ONE}), clean(expected)

    report = VerificationReport()
    report.add(run_identity(
        "reconstruction", "(a⊗v).b = a b_(2)⊗ρ(b_(1))v" if cop else "(a⊗v).b = a b_(1)⊗ρ(b_(2))v",
        cases(), M.fmt))
    _require(report, "bimodule is not left covariant")
    return rho


@dataclass(frozen=True)
class CovariantBimodule:
    """A free bimodule with coactions of ``bialgebra`` (which may be a ``B^cop``).

    On ``B⊗V`` the left coaction is ``Δ⊗id`` and an optional right comodule
    on ``V`` induces the right coaction through ``x ↦ 1⊗e_k ↦ 1⊗e_m⊗R^m_k``
    extended multiplicatively.  On ``V⊗B`` the right coaction is ``id⊗Δ``
    and an optional left comodule on ``V`` induces the left coaction.
    """

    bimodule: FreeBimodule
    bialgebra: BialgebraData
    comodule: object = None

    def __post_init__(self):
        if self.bialgebra.algebra != self.bimodule.algebra.algebra:
            raise StructureError("coacting bialgebra must share the bimodule's algebra")
        want = RightComodule if self.bimodule.presentation == "AV" else LeftComodule
        if self.comodule is not None and not isinstance(self.comodule, want):
            raise StructureError(f"presentation {self.bimodule.presentation} takes a {want.__name__}")

    def left_coaction(self, x: Element) -> Optional[dict]:
        """Keys ``(b, algebra index, carrier index)``."""
        B = self.bialgebra
        if self.bimodule.presentation == "AV":
            return _free_left_coaction(B, x)
        if self.comodule is None:
            return None
        L = self.comodule
        out: dict = {}
        for (l, k), c in x.items():  # e_k⊗a_l ↦ L^m_k a_(1) ⊗ e_m⊗a_(2)
            for (p, q), y in B.delta({l: ONE}).items():
                for m in range(self.bimodule.dim):
                    for s, z in B.mul(L.entries[m][k], {p: ONE}).items():
                        accumulate(out, (s, q, m), c * y * z)
        return clean(out)

    def right_coaction(self, x: Element) -> Optional[dict]:
        """Keys ``(algebra index, carrier index, b)``."""
        B = self.bialgebra
        out: dict = {}
        if self.bimodule.presentation == "VA":
            for (l, k), c in x.items():
                for (p, q), y in B.delta({l: ONE}).items():
                    accumulate(out, (p, k, q), c * y)
            return clean(out)
        if self.comodule is None:
            return None
        R = self.comodule
        for (l, k), c in x.items():  # a_l⊗e_k ↦ a_(1)⊗e_m ⊗ a_(2) R^m_k
            for (p, q), y in B.delta({l: ONE}).items():
                for m in range(self.bimodule.dim):
                    for s, z in B.mul({q: ONE}, R.entries[m][k]).items():
                        accumulate(out, (p, m, s), c * y * z)
        return clean(out)


def _left_tensor_act(M: FreeBimodule, B, pair: Mapping, t: Mapping) -> dict:
    """``(a⊗a').(b⊗y) = ab ⊗ a'.y`` on ``B⊗M``."""
    out: dict = {}
    for (a1, a2), c in pair.items():
        for (b, l, k), x in t.items():
            left = B.mul({a1: ONE}, {b: ONE})
            right = M.left_act({a2: ONE}, {(l, k): ONE})
            for (s, y), (key, z) in product(left.items(), right.items()):
                accumulate(out, (s,) + key, c * x * y * z)
    return clean(out)


def _right_tensor_act(M: FreeBimodule, B, t: Mapping, pair: Mapping) -> dict:
    """``(b⊗y).(a⊗a') = ba ⊗ y.a'`` on ``B⊗M``."""
    out: dict = {}
    for (a1, a2), c in pair.items():
        for (b, l, k), x in t.items():
            left = B.mul({b: ONE}, {a1: ONE})
            right = M.right_act({(l, k): ONE}, {a2: ONE})
            for (s, y), (key, z) in product(left.items(), right.items()):
                accumulate(out, (s,) + key, c * x * y * z)
    return clean(out)


def _left_act_mb(M: FreeBimodule, B, pair: Mapping, t: Mapping) -> dict:
    """``(a⊗a').(y⊗b) = a.y ⊗ a'b`` on ``M⊗B``."""
    out: dict = {}
    for (a1, a2), c in pair.items():
        for (l, k, b), x in t.items():
            left = M.left_act({a1: ONE}, {(l, k): ONE})
            right = B.mul({a2: ONE}, {b: ONE})
            for (key, y), (s, z) in product(left.items(), right.items()):
                accumulate(out, key + (s,), c * x * y * z)
    return clean(out)


def _right_act_mb(M: FreeBimodule, B, t: Mapping, pair: Mapping) -> dict:
    """``(y⊗b).(a⊗a') = y.a ⊗ ba'`` on ``M⊗B``."""
    out: dict = {}
    for (a1, a2), c in pair.items():
        for (l, k, b), x in t.items():
            left = M.right_act({(l, k): ONE}, {a1: ONE})
            right = B.mul({b: ONE}, {a2: ONE})
            for (key, y), (s, z) in product(left.items(), right.items()):
                accumulate(out, key + (s,), c * x * y * z)
    return clean(out)


SIDES = ("left-hopf", "left", "right-hopf", "right", "bicomodule")


def check_covariance(CM: CovariantBimodule, sides: Sequence[str] = SIDES) -> VerificationReport:
    """Hopf-module, covariance and bicomodule identities on all basis elements.

    ``left-hopf``: ``Δ_M(a.x) = Δ(a)Δ_M(x)``;  ``left``: ``Δ_M(x.a) = Δ_M(x)Δ(a)``;
    ``right-hopf`` / ``right``: the mirror identities for the right coaction
    (``right-hopf`` is the condition on the free side);  ``bicomodule``:
    ``(id⊗_MΔ)∘Δ_M = (Δ_M⊗id)∘_MΔ``.  Coaction axioms are included with
    each side that needs the coaction.  Sides whose coaction is absent are
    skipped.
    """
    M, B = CM.bimodule, CM.bialgebra
    unknown = set(sides) - set(SIDES)
    if unknown:
        raise ValueError(f"unknown covariance sides {sorted(unknown)}")
    elems = list(M.basis_elements())
    n = B.dim
    lab = M.label

    def bm_fmt(t):
        return la.format_vec(t, lambda idx: f"{B.basis[idx[0]]}⊗{lab(idx[1:])}")

    def mb_fmt(t):
        return la.format_vec(t, lambda idx: f"{lab(idx[:2])}⊗{B.basis[idx[2]]}")

    report = VerificationReport()
    free_left = M.presentation == "AV"
    has_left = M.dim > 0 and CM.left_coaction(M.generator(0)) is not None
    has_right = M.dim > 0 and CM.right_coaction(M.generator(0)) is not None
    # which side name covers (coaction, acting side); the free side splits off "-hopf"
    side_of = {
        ("L", "left"): "left-hopf" if free_left else "left",
        ("L", "right"): "left" if free_left else "left",
        ("R", "left"): "right" if free_left else "right",
        ("R", "right"): "right" if free_left else "right-hopf",
    }

    if has_left and any(s in sides for s in ("left-hopf", "left", "bicomodule")):
        DL = CM.left_coaction
        report.add(run_identity(
            "left_coaction.coassociative", "(Δ⊗id)∘Δ_M = (id⊗Δ_M)∘Δ_M",
            (((lab(key),),
              B.coalgebra.delta_leg(DL(M.element(*key)), 0),
              clean(_apply_left_to_tail(DL, DL(M.element(*key)))))
             for key in elems), la.format_vec))
        report.add(run_identity(
            "left_coaction.counit", "(ε⊗id)∘Δ_M = id",
            (((lab(key),), B.coalgebra.epsilon_leg(DL(M.element(*key)), 0), M.element(*key)) for key in elems),
            M.fmt))
        acts = {
            "left": ("Δ_M(a.x) = Δ(a)Δ_M(x)",
                     lambda a, key: (DL(M.left_act({a: ONE}, M.element(*key))),
                                     _left_tensor_act(M, B, B.delta({a: ONE}), DL(M.element(*key))))),
            "right": ("Δ_M(x.a) = Δ_M(x)Δ(a)",
                      lambda a, key: (DL(M.right_act(M.element(*key), {a: ONE})),
                                      _right_tensor_act(M, B, DL(M.element(*key)), B.delta({a: ONE})))),
        }
        for acting, (anchor, fn) in acts.items():
            side = side_of[("L", acting)]
            if side in sides:
                report.add(run_identity(
                    f"covariance.{side}.{acting}_action", anchor,
                    (((B.basis[a], lab(key)),) + fn(a, key) for a in range(n) for key in elems), bm_fmt))

    if has_right and any(s in sides for s in ("right-hopf", "right", "bicomodule")):
        DR = CM.right_coaction
        report.add(run_identity(
            "right_coaction.coassociative", "(_MΔ⊗id)∘_MΔ = (id⊗Δ)∘_MΔ",
            (((lab(key),),
              clean(_apply_right_to_head(DR, DR(M.element(*key)))),
              B.coalgebra.delta_leg(DR(M.element(*key)), 2))
             for key in elems), la.format_vec))
        report.add(run_identity(
            "right_coaction.counit", "(id⊗ε)∘_MΔ = id",
            (((lab(key),), B.coalgebra.epsilon_leg(DR(M.element(*key)), 2), M.element(*key)) for key in elems),
            M.fmt))
        acts = {
            "left": ("_MΔ(a.x) = Δ(a)_MΔ(x)",
                     lambda a, key: (DR(M.left_act({a: ONE}, M.element(*key))),
                                     _left_act_mb(M, B, B.delta({a: ONE}), DR(M.element(*key))))),
            "right": ("_MΔ(x.a) = _MΔ(x)Δ(a)",
                      lambda a, key: (DR(M.right_act(M.element(*key), {a: ONE})),
                                      _right_act_mb(M, B, DR(M.element(*key)), B.delta({a: ONE})))),
        }
        for acting, (anchor, fn) in acts.items():
            side = side_of[("R", acting)]
            if side in sides:
                report.add(run_identity(
                    f"covariance.{side}.{acting}_action", anchor,
                    (((B.basis[a], lab(key)),) + fn(a, key) for a in range(n) for key in elems), mb_fmt))

    if "bicomodule" in sides and has_left and has_right:
        DL, DR = CM.left_coaction, CM.right_coaction

        def bicases():
            for key in elems:
                lhs: dict = {}
                for (b, l, k), c in DL(M.element(*key)).items():
                    for kk, x in DR({(l, k): ONE}).items():
                        accumulate(lhs, (b,) + kk, c * x)
                rhs: dict = {}
                for (l, k, b), c in DR(M.element(*key)).items():
                    for kk, x in DL({(l, k): ONE}).items():
                        accumulate(rhs, kk + (b,), c * x)
                yield (lab(key),), clean(lhs), clean(rhs)

        report.add(run_identity(
            "covariance.bicomodule", "(id⊗_MΔ)∘Δ_M = (Δ_M⊗id)∘_MΔ", bicases(), lambda t: la.format_vec(t)))
    return report


def _apply_left_to_tail(DL, t: Mapping) -> dict:
    out: dict = {}
    for (b, l, k), c in t.items():
        for kk, x in DL({(l, k): ONE}).items():
            accumulate(out, (b,) + kk, c * x)
    return out


def _apply_right_to_head(DR, t: Mapping) -> dict:
    out: dict = {}
    for (l, k, b), c in t.items():
        for kk, x in DR({(l, k): ONE}).items():
            accumulate(out, kk + (b,), c * x)
    return out


def bicovariant_from_yd(M: YDModule) -> CovariantBimodule:
    """Bicovariant bimodule ``B⊗V`` generated by a right-right YD module.

    Right action ``(a⊗v).b = a b_(1)⊗ρ(b_(2))v``, left coaction ``Δ⊗id``,
    right coaction ``1⊗v ↦ 1⊗v_(0)⊗v_(1)`` extended multiplicatively.
    Every covariance identity is checked; failures raise
    :class:`VerificationFailed`.
    """
    if M.corner != "RR":
        raise StructureError(f"bicovariant_from_yd needs an RR module, got {M.corner}")
    B = M.bialgebra
    bim = bimodule_from_right_module(B, M.action)
    CM = CovariantBimodule(bim, B, M.coaction)
    report = check_covariance(CM)
    if not report.passed:
        raise VerificationFailed("bicovariant assembly failed (is the YD input broken?)", report)
    return CM


def check_rule_intertwining(B: BialgebraData, lam: LeftModule, L: LeftComodule) -> VerificationReport:
    """Left-left compatibility rewritten through the two commutation rules.

    With ``Λ(a) = λ(a_(1))a_(2)`` and ``Λ^cop(a) = λ(a_(2))a_(1)`` checks
    ``Λ^cop{}^i_m(a) L^m_k = L^i_m Λ^m_k(a)`` for every basis ``a`` and
    ``i, k``; this holds exactly when ``(λ, L)`` is a left-left YD module.
    """
    Lam = rule_from_left_module(B, lam)
    Lcop = rule_from_left_module_cop(B, lam)
    d = lam.dim

    def cases():
        for j in range(B.dim):
            for i, k in product(range(d), repeat=2):
                lhs = la.vsum(B.mul(Lcop.rule[j][i][m], L.entries[m][k]) for m in range(d))
                rhs = la.vsum(B.mul(L.entries[i][m], Lam.rule[j][m][k]) for m in range(d))
                yield (B.basis[j], lam.basis[i], lam.basis[k]), lhs, rhs

    report = VerificationReport()
    report.add(run_identity("yd.rule_intertwining", "Λ^cop(a)^i_m L^m_k = L^i_m Λ^m_k(a)", cases(), B.fmt))
    return report


def rule_intertwining_witnesses(B: BialgebraData, lam: LeftModule, L: LeftComodule, *, swap_roles: bool = False) -> set:
    """All failing ``(a, i, k)``; ``swap_roles=True`` exchanges the roles of ``Λ`` and ``Λ^cop``."""
    Lam = rule_from_left_module(B, lam)
    Lcop = rule_from_left_module_cop(B, lam)
    first, second = (Lam, Lcop) if swap_roles else (Lcop, Lam)
    d = lam.dim
    out = set()
    for j in range(B.dim):
        for i, k in product(range(d), repeat=2):
            lhs = la.vsum(B.mul(first.rule[j][i][m], L.entries[m][k]) for m in range(d))
            rhs = la.vsum(B.mul(L.entries[i][m], second.rule[j][m][k]) for m in range(d))
            if lhs != rhs:
                out.add((B.basis[j], lam.basis[i], lam.basis[k]))
    return out
