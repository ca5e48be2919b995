"""Yetter-Drinfeld modules, their antipode transforms, duals and braidings.

A :class:`YDModule` pairs an action and a coaction on one carrier.  The
corner names the sides: ``LL`` (left module, left comodule), ``RR``, ``LR``
(left module, right comodule) and ``RL``.  The left-left and right-right
compatibility conditions are checked as written; the mixed corners are
checked by re-reading them as left-left modules over ``B^cop`` or ``B^op``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Mapping

from . import linalg as la
from .algebra import BialgebraData, HopfAlgebraData, LinearMap, co_opposite, op_cop, opposite
from .linalg import ONE, ZERO
from .modules import (
    LeftComodule,
    LeftModule,
    RightComodule,
    RightModule,
    pull_back,
    push_forward,
    transpose_comodule,
    transpose_module,
    verify_comodule,
    verify_module,
)
from .report import Check, StructureError, VerificationFailed, VerificationReport, run_identity

__all__ = [
    "YDModule",
    "YangBaxterOperator",
    "ConsistencyAlarm",
    "check_yd",
    "yd_condition_witnesses",
    "yd_ll_to_rr",
    "yd_rr_to_ll",
    "yd_lr_to_ll",
    "yd_ll_to_lr",
    "yd_lr_to_rr",
    "yd_to_cop",
    "yd_dual",
    "reinterpret_over_op_cop",
    "yang_baxter",
]

_SIDES = {
    "LL": (LeftModule, LeftComodule),
    "RR": (RightModule, RightComodule),
    "LR": (LeftModule, RightComodule),
    "RL": (RightModule, LeftComodule),
}


class ConsistencyAlarm(RuntimeError):
    """A braiding built from a passing YD module failed the braid relation."""


@dataclass(frozen=True)
class YDModule:
    bialgebra: BialgebraData
    action: object
    coaction: object
    corner: str

    def __post_init__(self):
        if self.corner not in _SIDES:
            raise StructureError(f"unknown corner {self.corner!r}")
        mod_cls, comod_cls = _SIDES[self.corner]
        if type(self.action) is not mod_cls or type(self.coaction) is not comod_cls:
            raise StructureError(
                f"corner {self.corner} needs a {mod_cls.__name__} and a {comod_cls.__name__}, "
                f"got {type(self.action).__name__} and {type(self.coaction).__name__}"
            )
        if self.action.dim != self.coaction.dim:
            raise StructureError("action and coaction live on carriers of different dimension")
        n = self.bialgebra.dim
        if self.action.algebra.dim != n or self.coaction.coalgebra.dim != n:
            raise StructureError("action/coaction refer to an algebra of different dimension")

    @property
    def dim(self) -> int:
        return self.action.dim

    @property
    def basis(self) -> tuple:
        return self.action.basis

    def same_tensors(self, other: "YDModule") -> bool:
        """Structural equality of the corner and all structure tensors."""
        return (
            self.corner == other.corner
            and self.action.matrices == other.action.matrices
            and self.coaction.entries == other.coaction.entries
        )


def _rebind(obj, B: BialgebraData):
    if isinstance(obj, (LeftModule, RightModule)):
        return replace(obj, algebra=B)
    return replace(obj, coalgebra=B)


# -- compatibility conditions ------------------------------------------------

def _ll_cases(B: BialgebraData, lam: Callable, L: Callable, d: int, labels):
    """``a_(1) L^m_k λ^i_m(a_(2)) = L^i_m a_(2) λ^m_k(a_(1))`` on all basis tuples."""
    for j in range(B.dim):
        delta = B.delta({j: ONE})
        for i, k in product(range(d), repeat=2):
            lhs: dict = {}
            rhs: dict = {}
            for (p, q), c in delta.items():
                for m in range(d):
                    x = lam(i, m, q)
                    if x != 0:
                        lhs = la.vadd(lhs, la.vscale(B.mul({p: ONE}, L(m, k)), c * x))
                    y = lam(m, k, p)
                    if y != 0:
                        rhs = la.vadd(rhs, la.vscale(B.mul(L(i, m), {q: ONE}), c * y))
            yield (B.basis[j], labels[i], labels[k]), lhs, rhs


def _rr_cases(B: BialgebraData, rho: Callable, R: Callable, d: int, labels):
    """``a_(1) R^k_m ρ^m_i(a_(2)) = R^m_i a_(2) ρ^k_m(a_(1))`` on all basis tuples."""
    for j in range(B.dim):
        delta = B.delta({j: ONE})
        for i, k in product(range(d), repeat=2):
            lhs: dict = {}
            rhs: dict = {}
            for (p, q), c in delta.items():
                for m in range(d):
                    x = rho(m, i, q)
                    if x != 0:
                        lhs = la.vadd(lhs, la.vscale(B.mul({p: ONE}, R(k, m)), c * x))
                    y = rho(k, m, p)
                    if y != 0:
                        rhs = la.vadd(rhs, la.vscale(B.mul(R(m, i), {q: ONE}), c * y))
            yield (B.basis[j], labels[i], labels[k]), lhs, rhs


_ANCHORS = {
    "LL": "a_(1) L^m_k λ^i_m(a_(2)) = L^i_m a_(2) λ^m_k(a_(1))",
    "RR": "a_(1) R^k_m ρ^m_i(a_(2)) = R^m_i a_(2) ρ^k_m(a_(1))",
    "LR": "left-left condition over B^cop with L := R",
    "RL": "left-left condition over B^op with λ := ρ",
}


def _condition_cases(M: YDModule):
    B, d, labels = M.bialgebra, M.dim, M.basis
    act = lambda i, k, j: M.action.matrices[j][i][k]
    coact = lambda i, k: M.coaction.entries[i][k]
    if M.corner == "LL":
        return _ll_cases(B, act, coact, d, labels)
    if M.corner == "RR":
        return _rr_cases(B, act, coact, d, labels)
    if M.corner == "LR":
        return _ll_cases(co_opposite(B), act, coact, d, labels)
    return _ll_cases(opposite(B), act, coact, d, labels)


def check_yd(M: YDModule) -> VerificationReport:
    """Action, coaction and the corner's compatibility condition, exhaustively."""
    report = VerificationReport()
    report.extend(verify_module(M.action), "action.")
    report.extend(verify_comodule(M.coaction), "coaction.")
    fmt = M.bialgebra.fmt
    report.add(run_identity(f"yd.{M.corner}", _ANCHORS[M.corner], _condition_cases(M), fmt))
    return report


def yd_condition_witnesses(M: YDModule) -> set:
    """Every basis tuple where the compatibility condition fails."""
    return {w for w, lhs, rhs in _condition_cases(M) if lhs != rhs}


def _require_yd(M: YDModule, corner: str, op: str) -> None:
    if M.corner != corner:
        raise StructureError(f"{op} needs a {corner} module, got {M.corner}")
    report = check_yd(M)
    if not report.passed:
        raise VerificationFailed(f"{op} needs a Yetter-Drinfeld module", report)


def _hopf(M: YDModule, op: str) -> HopfAlgebraData:
    H = M.bialgebra
    if not isinstance(H, HopfAlgebraData) or not H.has_bijective_antipode:
        raise StructureError(f"{op} requires bijective antipode")
    return H


# -- antipode transforms -----------------------------------------------------

def yd_ll_to_rr(M: YDModule) -> YDModule:
    """``(V, λ, L) ↦ (V, λ∘S⁻¹, S(L))``: left-left to right-right."""
    _require_yd(M, "LL", "yd_ll_to_rr")
    H = _hopf(M, "yd_ll_to_rr")
    action = pull_back(H.antipode_inverse_map(), M.action)
    coaction = push_forward(H.antipode_map(), M.coaction)
    return YDModule(H, action, coaction, "RR")


def yd_rr_to_ll(M: YDModule) -> YDModule:
    """Inverse of :func:`yd_ll_to_rr`: ``(V, ρ, R) ↦ (V, ρ∘S, S⁻¹(R))``."""
    _require_yd(M, "RR", "yd_rr_to_ll")
    H = _hopf(M, "yd_rr_to_ll")
    action = pull_back(H.antipode_map(), M.action)
    coaction = push_forward(H.antipode_inverse_map(), M.coaction)
    return YDModule(H, action, coaction, "LL")


def yd_lr_to_ll(M: YDModule) -> YDModule:
    """``(V, λ, R) ↦ (V, λ, S(R))``: left-right to left-left."""
    _require_yd(M, "LR", "yd_lr_to_ll")
    H = _hopf(M, "yd_lr_to_ll")
    return YDModule(H, M.action, push_forward(H.antipode_map(), M.coaction), "LL")


def yd_ll_to_lr(M: YDModule) -> YDModule:
    """Inverse of :func:`yd_lr_to_ll`: ``(V, λ, L) ↦ (V, λ, S⁻¹(L))``."""
    _require_yd(M, "LL", "yd_ll_to_lr")
    H = _hopf(M, "yd_ll_to_lr")
    return YDModule(H, M.action, push_forward(H.antipode_inverse_map(), M.coaction), "LR")


def yd_lr_to_rr(M: YDModule) -> YDModule:
    """Left-right to right-right in one step: ``(V, λ, R) ↦ (V, λ∘S⁻¹, S²(R))``."""
    _require_yd(M, "LR", "yd_lr_to_rr")
    H = _hopf(M, "yd_lr_to_rr")
    S2 = LinearMap(la.matmul(H.antipode, H.antipode), "morphism", H, H)
    action = pull_back(H.antipode_inverse_map(), M.action)
    return YDModule(H, action, push_forward(S2, M.coaction), "RR")


def yd_to_cop(M: YDModule) -> YDModule:
    """Move a left-left (or right-right) module over ``B`` to one over ``B^cop``.

    The action is kept; the coaction is read as the opposite-sided coaction
    of ``B^cop`` (same entries) and pushed forward along ``S⁻¹``, which is an
    antipode of ``B^cop``.  Applying the map twice returns to ``B``.
    """
    if M.corner not in ("LL", "RR"):
        raise StructureError(f"yd_to_cop needs an LL or RR module, got {M.corner}")
    _require_yd(M, M.corner, "yd_to_cop")
    H = _hopf(M, "yd_to_cop")
    Hc = co_opposite(H)
    flipped_cls = RightComodule if M.corner == "LL" else LeftComodule
    flipped = flipped_cls(Hc, M.dim, M.coaction.entries, M.coaction.basis)
    coaction = push_forward(Hc.antipode_map(), flipped)
    return YDModule(Hc, _rebind(M.action, Hc), coaction, M.corner)


def yd_dual(M: YDModule) -> YDModule:
    """Transpose action and coaction onto the dual carrier.

    A left-left module becomes a right-right one (and conversely); the
    result satisfies its condition exactly when ``M`` satisfies its own.
    The compatibility condition itself is not required of ``M``.
    """
    if M.corner not in ("LL", "RR"):
        raise StructureError(f"yd_dual needs an LL or RR module, got {M.corner}")
    corner = "RR" if M.corner == "LL" else "LL"
    return YDModule(M.bialgebra, transpose_module(M.action), transpose_comodule(M.coaction), corner)


def reinterpret_over_op_cop(M: YDModule) -> YDModule:
    """Read a left-left module over ``B`` as a right-right one over ``B^{op cop}``.

    Same matrices: ``v.a := a.v`` and ``v ↦ v_(0) ⊗ v_(-1)``.
    """
    if M.corner != "LL":
        raise StructureError("reinterpret_over_op_cop needs an LL module")
    Boc = op_cop(M.bialgebra)
    action = RightModule(Boc, M.dim, M.action.matrices, M.action.basis)
    coaction = RightComodule(Boc, M.dim, M.coaction.entries, M.coaction.basis)
    return YDModule(Boc, action, coaction, "RR")


# -- braiding ----------------------------------------------------------------

@dataclass(frozen=True)
class YangBaxterOperator:
    """Invertible ``d²×d²`` matrix; column ``i*d + k`` is the image of ``e_i⊗e_k``."""

    dim: int
    matrix: tuple
    basis: tuple = ()

    def pair_label(self, idx) -> str:
        names = self.basis or tuple(f"e{i}" for i in range(self.dim))
        return "⊗".join(names[i] for i in idx)

    def entry(self, m: int, n: int, i: int, j: int):
        """Coefficient of ``e_m⊗e_n`` in the image of ``e_i⊗e_j``."""
        d = self.dim
        return self.matrix[m * d + n][i * d + j]

    def is_invertible(self) -> bool:
        return la.rank(self.matrix) == self.dim ** 2

    def flip(self) -> tuple:
        d = self.dim
        return tuple(
            tuple(ONE if (r // d, r % d) == (c % d, c // d) else ZERO for c in range(d * d))
            for r in range(d * d)
        )

    def to_qybe(self) -> tuple:
        """``P∘𝓡``, the matrix for the ``R12 R13 R23 = R23 R13 R12`` convention."""
        return la.matmul(self.flip(), self.matrix)

    def _legs(self, mat):
        d = self.dim
        I = la.identity(d)
        r12 = la.kron(mat, I)
        r23 = la.kron(I, mat)
        p23 = la.kron(I, self.flip())
        r13 = la.matmul(la.matmul(p23, r12), p23)
        return r12, r13, r23

    def _compare(self, name, anchor, lhs, rhs) -> Check:
        d = self.dim

        def cases():
            for col in range(d ** 3):
                idx = (col // (d * d), (col // d) % d, col % d)
                yield (self.pair_label(idx),), la.column(lhs, col), la.column(rhs, col)

        fmt = lambda v: la.format_vec({(k // (d * d), (k // d) % d, k % d): c for k, c in v.items()},
                                      lambda idx: self.pair_label(idx))
        return run_identity(name, anchor, cases(), fmt)

    def check_braid(self) -> Check:
        r12, _, r23 = self._legs(self.matrix)
        lhs = la.matmul(la.matmul(r12, r23), r12)
        rhs = la.matmul(la.matmul(r23, r12), r23)
        return self._compare("yang_baxter.braid", "(𝓡⊗id)(id⊗𝓡)(𝓡⊗id) = (id⊗𝓡)(𝓡⊗id)(id⊗𝓡)", lhs, rhs)

    def check_qybe(self) -> Check:
        r12, r13, r23 = self._legs(self.to_qybe())
        lhs = la.matmul(la.matmul(r12, r13), r23)
        rhs = la.matmul(la.matmul(r23, r13), r12)
        return self._compare("yang_baxter.qybe", "R12 R13 R23 = R23 R13 R12 with R = P𝓡", lhs, rhs)

    def verify(self) -> VerificationReport:
        report = VerificationReport()
        report.add(self.check_braid())
        report.add(self.check_qybe())
        inv = self.is_invertible()
        report.add(Check("yang_baxter.invertible", "rank 𝓡 = d²", inv, () if inv else ("𝓡",),
                         str(la.rank(self.matrix)), str(self.dim ** 2), 1))
        return report


def yang_baxter(M: YDModule) -> YangBaxterOperator:
    """Braiding of a right-right module: ``e_i⊗e_k ↦ ρ^j_i(R^m_k) e_m⊗e_j``."""
    _require_yd(M, "RR", "yang_baxter")
    d = M.dim
    rho, R = M.action, M.coaction
    cols = []
    for i, k in product(range(d), repeat=2):
        col: dict = {}
        for j, m in product(range(d), repeat=2):
            c = rho.entry(j, i, R.entries[m][k])
            if c != 0:
                col[m * d + j] = c
        cols.append(col)
    op = YangBaxterOperator(d, la.from_columns(cols, d * d), M.basis)
    report = op.verify()
    if not report.passed:
        raise ConsistencyAlarm(
            "braiding of a passing right-right module fails: "
            + "; ".join(f"{c.name} at {c.witness}" for c in report.failures())
        )
    return op
