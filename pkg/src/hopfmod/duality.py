"""Duals of free bimodules, the canonical pairing and the dual covariance check.

The dual of ``V⊗A`` with rule ``Λ`` is ``A⊗Ṽ`` with the transposed rule
``Φ^i_k = Λ^k_i``; elements of both are stored in component form, so
dualizing is a re-indexing of structure tensors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from . import linalg as la
from .algebra import BialgebraData, HopfAlgebraData, co_opposite
from .bimodules import (
    CommutationRule,
    CovariantBimodule,
    FreeBimodule,
    check_covariance,
    module_from_rule,
    rule_from_left_module,
    verify_rule,
)
from .linalg import ONE, accumulate, clean
from .modules import LeftModule, RightComodule, transpose_module, verify_comodule
from .report import StructureError, VerificationFailed, VerificationReport, run_identity

__all__ = [
    "DualFreeBimodule",
    "pair",
    "dualize",
    "check_pairing",
    "check_dual_covariance",
    "pairing_identity",
    "dual_of_left_module",
]


def _dual_label(label: str) -> str:
    return label[1:] if label.startswith("~") else "~" + label


@dataclass(frozen=True)
class DualFreeBimodule:
    """A free bimodule together with its dual and the pairing between them."""

    source: FreeBimodule
    dual: FreeBimodule

    def pair(self, X: Mapping, x: Mapping) -> dict:
        return pair(self.dual, X, self.source, x)


def pair(dual: FreeBimodule, X: Mapping, source: FreeBimodule, x: Mapping) -> dict:
    """``≪a⊗α, v⊗b≫ = ab α(v)``, extended bilinearly.

    ``X`` lives in the left free ``A⊗Ṽ`` and ``x`` in the right free ``V⊗A``.
    """
    if dual.presentation != "AV" or source.presentation != "VA":
        raise StructureError("pairing expects A⊗Ṽ on the left and V⊗A on the right")
    if dual.dim != source.dim:
        raise StructureError(f"dimension mismatch: {dual.dim} vs {source.dim}")
    A = source.algebra
    out: dict = {}
    for (l, k), c in X.items():
        for (m, i), y in x.items():
            if i == k:
                for p, z in A.mul({l: ONE}, {m: ONE}).items():
                    accumulate(out, p, c * y * z)
    return clean(out)


def _transpose_rule(R: CommutationRule, orientation: str) -> CommutationRule:
    d = R.dim
    rule = tuple(
        tuple(tuple(R.rule[j][k][i] for k in range(d)) for i in range(d)) for j in range(len(R.rule))
    )
    return CommutationRule(R.algebra, d, rule, orientation, tuple(_dual_label(b) for b in R.basis))


def dualize(M: FreeBimodule) -> DualFreeBimodule:
    """The dual bimodule, ``Φ = Λ̃`` (``V⊗A → A⊗Ṽ``) or ``Λ = Φ̃`` back again.

    The rule is checked first; the adjointness of the pairing is verified on
    every basis element before returning.
    """
    rep = verify_rule(M.rule)
    if not rep.passed:
        raise VerificationFailed("dualize needs a valid commutation rule", rep)
    if M.presentation == "VA":
        D = DualFreeBimodule(M, FreeBimodule(_transpose_rule(M.rule, "right")))
    else:
        D = DualFreeBimodule(FreeBimodule(_transpose_rule(M.rule, "left")), M)
    report = check_pairing(D)
    if not report.passed:  # pragma: no cover - guaranteed by the transposition
        raise VerificationFailed("dual pairing is not adjoint", report)
    return D


def check_pairing(D: DualFreeBimodule) -> VerificationReport:
    """Adjointness ``≪X.a, x≫ = ≪X, a.x≫`` and ``A``-bilinearity of the pairing."""
    S, T = D.source, D.dual
    A = S.algebra
    n = A.dim
    fmt = A.fmt
    e = lambda i: {i: ONE}
    Xs = list(T.basis_elements())
    xs = list(S.basis_elements())
    report = VerificationReport()
    report.add(run_identity(
        "pairing.dual_basis", "≪1⊗e^k, e_i⊗1≫ = δ^k_i 1",
        (((T.basis[k], S.basis[i]), D.pair(T.generator(k), S.generator(i)), A.one() if i == k else {})
         for k, i in product(range(S.dim), repeat=2)), fmt))
    report.add(run_identity(
        "pairing.adjoint", "≪X.a, x≫ = ≪X, a.x≫",
        (((T.label(X), A.basis[a], S.label(x)),
          D.pair(T.right_act(T.element(*X), e(a)), S.element(*x)),
          D.pair(T.element(*X), S.left_act(e(a), S.element(*x))))
         for X, a, x in product(Xs, range(n), xs)), fmt))
    report.add(run_identity(
        "pairing.left_linear", "≪a.X, x≫ = a≪X, x≫",
        (((A.basis[a], T.label(X), S.label(x)),
          D.pair(T.left_act(e(a), T.element(*X)), S.element(*x)),
          A.mul(e(a), D.pair(T.element(*X), S.element(*x))))
         for a, X, x in product(range(n), Xs, xs)), fmt))
    report.add(run_identity(
        "pairing.right_linear", "≪X, x.b≫ = ≪X, x≫b",
        (((T.label(X), S.label(x), A.basis[b]),
          D.pair(T.element(*X), S.right_act(S.element(*x), e(b))),
          A.mul(D.pair(T.element(*X), S.element(*x)), e(b)))
         for X, x, b in product(Xs, xs, range(n))), fmt))
    report.add(run_identity(
        "pairing.transpose_rule", "≪(1⊗e^k).a, e_i⊗1≫ = Λ^k_i(a)",
        (((T.basis[k], A.basis[a], S.basis[i]),
          D.pair(T.right_act(T.generator(k), e(a)), S.generator(i)),
          S.rule.rule[a][k][i])
         for k, a, i in product(range(S.dim), range(n), range(S.dim))), fmt))
    return report


def dual_of_left_module(B: BialgebraData, lam: LeftModule) -> DualFreeBimodule:
    """Dual of the right covariant ``V⊗B`` with ``Λ(a) = λ(a_(1))a_(2)``."""
    return dualize(FreeBimodule(rule_from_left_module(B, lam)))


def check_dual_covariance(D: DualFreeBimodule, bialgebra: BialgebraData | None = None) -> VerificationReport:
    """Left covariance of ``A⊗Ṽ`` over ``A^cop`` and, separately, over ``A``.

    The source must come from a left module through ``Λ(a) = λ(a_(1))a_(2)``.
    Checks named ``dual.generators`` verify ``(1⊗α).a = a_(2)⊗λ̃(a_(1))α``;
    ``cop.*`` run the Hopf-module and covariance identities with ``Δ^cop``;
    ``plain.*`` run them with ``Δ``.  Only the ``cop`` part is guaranteed;
    the ``plain`` part fails in general when ``Δ ≠ Δ^cop``.
    """
    B = bialgebra if bialgebra is not None else D.source.algebra
    lam = module_from_rule(D.source.rule)
    if not rule_from_left_module(B, lam).same_tensors(D.source.rule):
        raise StructureError("source bimodule is not of the form Λ(a) = λ(a_(1))a_(2)")
    rho = transpose_module(lam)
    T = D.dual
    d = T.dim

    def generator_cases():
        for k, a in product(range(d), range(B.dim)):
            expected: dict = {}
            for (p, q), c in B.delta({a: ONE}).items():
                for m in range(d):
                    x = rho.matrices[p][m][k]
                    if x != 0:
                        accumulate(expected, (q, m), c * x)
            yield (T.basis[k], B.basis[a]), T.right_act(T.generator(k), {a: ONE}), clean(expected)

    report = VerificationReport()
    report.add(run_identity("dual.generators", "(1⊗α).a = a_(2)⊗λ̃(a_(1))α", generator_cases(), T.fmt))
    sides = ("left-hopf", "left")
    report.extend(check_covariance(CovariantBimodule(T, co_opposite(B)), sides), prefix="cop.")
    report.extend(check_covariance(CovariantBimodule(T, B), sides), prefix="plain.")
    return report


def pairing_identity(R: RightComodule) -> VerificationReport:
    """``R^k_j S(R^j_i) = δ^k_i 1`` and the induced pairing identity.

    The transposed coaction ``e^k ↦ R^k_j⊗e^j`` (in ``B⊗Ṽ``) is paired with
    the antipode push ``e_i ↦ e_m⊗S(R^m_i)`` (in ``V⊗B``); the value must be
    ``1_B⟨e^k, e_i⟩`` for every dual-basis pair.
    """
    H = R.coalgebra
    if not isinstance(R, RightComodule):
        raise StructureError("pairing_identity needs a right comodule")
    if not isinstance(H, HopfAlgebraData):
        raise StructureError("pairing_identity needs a Hopf algebra (antipode)")
    rep = verify_comodule(R)
    if not rep.passed:
        raise VerificationFailed("pairing_identity needs a valid right comodule", rep)
    d = R.dim
    one = H.one()
    report = VerificationReport()
    report.add(run_identity(
        "pairing_identity.matrix", "R^k_j S(R^j_i) = δ^k_i 1",
        (((R.basis[k], R.basis[i]),
          la.vsum(H.mul(R.entries[k][j], H.S(R.entries[j][i])) for j in range(d)),
          one if i == k else {})
         for k, i in product(range(d), repeat=2)), H.fmt))

    # ≪·,·≫ between B⊗Ṽ and V⊗B needs only the algebra and the carrier size
    dual_basis = tuple(_dual_label(b) for b in R.basis)

    def coact_dual(k: int) -> dict:  # e^k ↦ R^k_j ⊗ e^j
        return clean({(p, j): c for j in range(d) for p, c in R.entries[k][j].items()})

    def s_push(i: int) -> dict:
        return clean({(p, m): c for m in range(d) for p, c in H.S(R.entries[m][i]).items()})

    def pairing(X: Mapping, x: Mapping) -> dict:
        out: dict = {}
        for (l, k), c in X.items():
            for (m, i), y in x.items():
                if i == k:
                    for p, z in H.mul({l: ONE}, {m: ONE}).items():
                        accumulate(out, p, c * y * z)
        return clean(out)

    report.add(run_identity(
        "pairing_identity.dual_basis", "1_B⟨α, v⟩ = ≪Δ̃_V(α), S_*(Δ_V^cop)(v)≫",
        (((dual_basis[k], R.basis[i]), pairing(coact_dual(k), s_push(i)), one if i == k else {})
         for k, i in product(range(d), repeat=2)), H.fmt))
    return report
