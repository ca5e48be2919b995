"""Modules and comodules in matrix form, their transposes, pull-backs and push-forwards.

Index conventions on a carrier ``V`` with basis ``e_k``:

* left module:  ``a.e_k = λ^i_k(a) e_i``; ``matrices[j][i][k] = λ^i_k(a_j)``
* right module: ``e_k.a = ρ^m_k(a) e_m``; so ``ρ(ab) = ρ(b)ρ(a)`` as matrices
* left comodule:  ``e_k ↦ L^m_k ⊗ e_m`` with ``Δ(L^i_k) = L^m_k ⊗ L^i_m``
* right comodule: ``e_k ↦ e_m ⊗ R^m_k`` with ``Δ(R^m_k) = R^m_j ⊗ R^j_k``

Comodule entries are algebra elements (sparse vectors), stored as
``entries[i][k]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Optional, Sequence, Union

from . import linalg as la
from .algebra import BialgebraData, LinearMap, check_algebra_map, check_coalgebra_map
from .linalg import ONE, ZERO
from .report import StructureError, VerificationFailed, VerificationReport, run_identity
from .scalars import as_scalar

__all__ = [
    "LeftModule",
    "RightModule",
    "LeftComodule",
    "RightComodule",
    "verify_module",
    "verify_comodule",
    "transpose_module",
    "transpose_comodule",
    "pull_back",
    "push_forward",
    "trivial_module",
    "trivial_comodule",
    "regular_module",
]


def _default_basis(d: int, prefix: str = "e") -> tuple:
    return tuple(f"{prefix}{i}" for i in range(d))


def _dual_labels(labels: Sequence[str]) -> tuple:
    out = []
    for s in labels:
        out.append(s[1:] if s.startswith("~") else "~" + s)
    return tuple(out)


@dataclass(frozen=True)
class _Action:
    algebra: BialgebraData
    dim: int
    matrices: tuple
    basis: tuple = ()

    def __post_init__(self):
        mats = tuple(la.as_matrix([[as_scalar(x) for x in row] for row in m]) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if not self.basis:
            object.__setattr__(self, "basis", _default_basis(self.dim))
        object.__setattr__(self, "basis", tuple(self.basis))
        if len(mats) != self.algebra.dim:
            raise StructureError(f"action lists {len(mats)} matrices for an algebra of dim {self.algebra.dim}")
        for j, m in enumerate(mats):
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise StructureError(f"action matrix for {self.algebra.basis[j]} is not {self.dim}x{self.dim}")
        if len(self.basis) != self.dim:
            raise StructureError("carrier basis labels do not match carrier_dim")

    def matrix(self, a: Mapping) -> tuple:
        """Linear extension to an arbitrary algebra element."""
        out = la.zeros(self.dim, self.dim)
        for j, c in a.items():
            out = la.matadd(out, la.matscale(self.matrices[j], c))
        return out

    def entry(self, i: int, k: int, a: Mapping):
        s = ZERO
        for j, c in a.items():
            x = self.matrices[j][i][k]
            if x != 0:
                s = s + c * x
        return s

    def act(self, a: Mapping, v: Mapping) -> dict:
        return la.matvec(self.matrix(a), v)


@dataclass(frozen=True)
class LeftModule(_Action):
    """Representation ``λ`` of an algebra on a finite-dimensional carrier."""


@dataclass(frozen=True)
class RightModule(_Action):
    """Anti-representation ``ρ``: ``e_k.a = ρ^m_k(a) e_m``."""


@dataclass(frozen=True)
class _Coaction:
    coalgebra: BialgebraData
    dim: int
    entries: tuple  # entries[i][k] = sparse vector
    basis: tuple = ()

    def __post_init__(self):
        ent = tuple(
            tuple(la.clean({int(j): as_scalar(c) for j, c in dict(e).items()}) for e in row)
            for row in self.entries
        )
        object.__setattr__(self, "entries", ent)
        if not self.basis:
            object.__setattr__(self, "basis", _default_basis(self.dim))
        object.__setattr__(self, "basis", tuple(self.basis))
        if len(ent) != self.dim or any(len(r) != self.dim for r in ent):
            raise StructureError(f"coaction is not a {self.dim}x{self.dim} array")
        n = self.coalgebra.dim
        if any(not 0 <= j < n for row in ent for e in row for j in e):
            raise StructureError("coaction entry index out of range")

    def __getitem__(self, ik) -> dict:
        i, k = ik
        return self.entries[i][k]


@dataclass(frozen=True)
class LeftComodule(_Coaction):
    """Left coaction ``e_k ↦ L^m_k ⊗ e_m``; ``entries[m][k] = L^m_k``."""

    def coact(self, v: Mapping) -> dict:
        """Image in ``C⊗V`` as a tensor keyed by ``(coalgebra index, carrier index)``."""
        out: dict = {}
        for k, c in v.items():
            for m in range(self.dim):
                for j, x in self.entries[m][k].items():
                    la.accumulate(out, (j, m), c * x)
        return la.clean(out)


@dataclass(frozen=True)
class RightComodule(_Coaction):
    """Right coaction ``e_k ↦ e_m ⊗ R^m_k``; ``entries[m][k] = R^m_k``."""

    def coact(self, v: Mapping) -> dict:
        """Image in ``V⊗C`` keyed by ``(carrier index, coalgebra index)``."""
        out: dict = {}
        for k, c in v.items():
            for m in range(self.dim):
                for j, x in self.entries[m][k].items():
                    la.accumulate(out, (m, j), c * x)
        return la.clean(out)


Module = Union[LeftModule, RightModule]
Comodule = Union[LeftComodule, RightComodule]


# -- verification ------------------------------------------------------------

def verify_module(M: Module) -> VerificationReport:
    """Unit and multiplicativity of the action matrices on all basis pairs."""
    A, n, d = M.algebra, M.algebra.dim, M.dim
    right = isinstance(M, RightModule)
    labels = A.basis
    report = VerificationReport()
    report.add(run_identity(
        "module.unit",
        "ρ(1) = id" if right else "λ^i_k(1) = δ^i_k",
        [((), M.matrix(A.one()), la.identity(d))],
    ))

    def cases():
        for i, j in product(range(n), repeat=2):
            ab = M.matrix(A.mul({i: ONE}, {j: ONE}))
            if right:
                yield (labels[i], labels[j]), ab, la.matmul(M.matrices[j], M.matrices[i])
            else:
                yield (labels[i], labels[j]), ab, la.matmul(M.matrices[i], M.matrices[j])

    report.add(run_identity(
        "module.multiplicative",
        "ρ(ab) = ρ(b)ρ(a)" if right else "λ^i_k(ab) = λ^i_m(a)λ^m_k(b)",
        cases(),
    ))
    return report


def verify_comodule(C: Comodule) -> VerificationReport:
    """Coassociativity and counit law of the matrix-like coaction entries."""
    B, d = C.coalgebra, C.dim
    right = isinstance(C, RightComodule)
    fmt = lambda t: la.format_vec(t, B.basis)
    report = VerificationReport()

    def coassoc():
        for i, k in product(range(d), repeat=2):
            lhs = B.delta(C.entries[i][k])
            parts = []
            for m in range(d):
                if right:   # Δ(R^i_k) = R^i_m ⊗ R^m_k
                    parts.append(la.tensor_product(C.entries[i][m], C.entries[m][k]))
                else:       # Δ(L^i_k) = L^m_k ⊗ L^i_m
                    parts.append(la.tensor_product(C.entries[m][k], C.entries[i][m]))
            yield (C.basis[i], C.basis[k]), lhs, la.vsum(parts)

    report.add(run_identity(
        "comodule.coassociativity",
        "Δ(R^m_k) = R^m_j ⊗ R^j_k" if right else "Δ(L^i_k) = L^m_k ⊗ L^i_m",
        coassoc(),
        fmt,
    ))
    report.add(run_identity(
        "comodule.counit",
        "ε(R^m_k) = δ^m_k" if right else "ε(L^i_k) = δ^i_k",
        (((C.basis[i], C.basis[k]), B.eps(C.entries[i][k]), ONE if i == k else ZERO)
         for i, k in product(range(d), repeat=2)),
    ))
    return report


def _require(report: VerificationReport, what: str) -> None:
    if not report.passed:
        raise VerificationFailed(what, report)


# -- transposes --------------------------------------------------------------

def transpose_module(M: Module) -> Module:
    """Transposed action on the dual carrier.

    A left module ``λ`` becomes the right module ``ρ(a) = λ(a)ᵀ`` on the dual
    space (and conversely), since transposition reverses products.
    """
    _require(verify_module(M), "transpose_module needs a valid module")
    cls = RightModule if isinstance(M, LeftModule) else LeftModule
    return cls(M.algebra, M.dim, tuple(la.transpose(m) for m in M.matrices), _dual_labels(M.basis))


def transpose_comodule(C: Comodule) -> Comodule:
    """Transposed coaction on the dual carrier.

    ``e^k ↦ e^m ⊗ L^k_m``: a left coaction ``L`` gives the right coaction
    ``R^m_k = L^k_m`` (and conversely).
    """
    _require(verify_comodule(C), "transpose_comodule needs a valid comodule")
    cls = RightComodule if isinstance(C, LeftComodule) else LeftComodule
    ent = tuple(tuple(C.entries[k][m] for k in range(C.dim)) for m in range(C.dim))
    return cls(C.coalgebra, C.dim, ent, _dual_labels(C.basis))


# -- pull-back / push-forward ------------------------------------------------

def pull_back(T: LinearMap, M: Module) -> Module:
    """Pull an action back along an algebra (anti-)morphism ``T: A → A'``.

    ``M`` lives over ``T.target``; the result lives over ``T.source`` with
    matrices ``λ(a) = λ'(T(a))``.  An anti-morphism flips the side.
    """
    if T.kind is None:
        raise StructureError("pull_back needs a map tagged morphism or anti-morphism")
    if T.source is None or T.target is None:
        raise StructureError("pull_back needs a map with source and target algebras")
    if T.target_dim != M.algebra.dim:
        raise StructureError("map target does not match the module's algebra")
    _require(check_algebra_map(T, T.source, T.target), f"pull_back along a non-{T.kind}")
    _require(verify_module(M), "pull_back needs a valid module")
    mats = tuple(M.matrix(T({j: ONE})) for j in range(T.source_dim))
    if T.anti:
        cls = RightModule if isinstance(M, LeftModule) else LeftModule
    else:
        cls = type(M)
    return cls(T.source, M.dim, mats, M.basis)


def push_forward(T: LinearMap, C: Comodule) -> Comodule:
    """Push a coaction forward along a coalgebra (anti-)morphism ``T: C → C'``.

    Entries become ``T(L^k_i)``; an anti-morphism flips the side.
    """
    if T.kind is None:
        raise StructureError("push_forward needs a map tagged morphism or anti-morphism")
    if T.source is None or T.target is None:
        raise StructureError("push_forward needs a map with source and target coalgebras")
    if T.source_dim != C.coalgebra.dim:
        raise StructureError("map source does not match the comodule's coalgebra")
    _require(check_coalgebra_map(T, T.source, T.target), f"push_forward along a non-{T.kind}")
    _require(verify_comodule(C), "push_forward needs a valid comodule")
    ent = tuple(tuple(T(e) for e in row) for row in C.entries)
    if T.anti:
        cls = RightComodule if isinstance(C, LeftComodule) else LeftComodule
    else:
        cls = type(C)
    return cls(T.target, C.dim, ent, C.basis)


# -- standard instances ------------------------------------------------------

def trivial_module(B: BialgebraData, dim: int = 1, right: bool = False) -> Module:
    """``a ↦ ε(a)·id``."""
    mats = tuple(la.matscale(la.identity(dim), B.eps({j: ONE})) for j in range(B.dim))
    return (RightModule if right else LeftModule)(B, dim, mats)


def trivial_comodule(B: BialgebraData, dim: int = 1, right: bool = False) -> Comodule:
    """``e_k ↦ 1 ⊗ e_k``."""
    ent = tuple(tuple(B.one() if i == k else {} for k in range(dim)) for i in range(dim))
    return (RightComodule if right else LeftComodule)(B, dim, ent)


def regular_module(B: BialgebraData) -> LeftModule:
    """Left multiplication of ``B`` on itself."""
    mats = []
    for j in range(B.dim):
        cols = [B.mul({j: ONE}, {k: ONE}) for k in range(B.dim)]
        mats.append(la.from_columns(cols, B.dim))
    return LeftModule(B, B.dim, tuple(mats), B.basis)
