"""First-order differential calculi valued in free bimodules ``Γ = V⊗B``.

A calculus is stored through its partial derivatives: ``df = e_i⊗∂^i(f)``
with one ``n×n`` matrix per direction (column ``j`` is ``∂^i(a_j)``).  The
left action on ``Γ`` comes from ``Λ(a) = λ(a_(1))a_(2)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

from . import linalg as la
from .algebra import BialgebraData, HopfAlgebraData
from .bimodules import FreeBimodule, rule_from_left_module
from .catalog import function_algebra
from .duality import DualFreeBimodule, dualize
from .groups import FiniteGroup
from .linalg import ONE, accumulate, clean
from .modules import LeftComodule, LeftModule, verify_module
from .report import StructureError, VerificationFailed, VerificationReport, run_identity
from .scalars import as_scalar, format_scalar
from .yd import YDModule, check_yd, yang_baxter, yd_dual, yd_to_cop

__all__ = [
    "FODC",
    "BracketTable",
    "differential",
    "check_fodc",
    "check_right_covariance",
    "cartan_action",
    "check_cartan",
    "woronowicz_functionals",
    "evaluate",
    "convolution",
    "quantum_lie_bracket",
    "finite_group_calculus",
    "perturbed",
]

Functional = dict  # {basis index: scalar}, the values on the basis of B


@dataclass(frozen=True)
class FODC:
    bialgebra: BialgebraData
    action: LeftModule
    partials: tuple
    coaction: Optional[LeftComodule] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        parts = tuple(la.as_matrix(m) for m in self.partials)
        object.__setattr__(self, "partials", parts)
        n, d = self.bialgebra.dim, self.action.dim
        if len(parts) != d:
            raise StructureError(f"expected {d} partial derivatives, got {len(parts)}")
        if any(len(m) != n or any(len(r) != n for r in m) for m in parts):
            raise StructureError(f"partial derivatives must be {n}x{n} matrices")
        if self.action.algebra.algebra != self.bialgebra.algebra:
            raise StructureError("the action is over a different algebra")
        if self.coaction is not None and self.coaction.dim != d:
            raise StructureError("coaction dimension does not match the generating space")

    @property
    def dim(self) -> int:
        return self.action.dim

    @property
    def basis(self) -> tuple:
        return self.action.basis

    def partial(self, i: int, f: Mapping) -> dict:
        return la.matvec(self.partials[i], f)

    def bimodule(self) -> FreeBimodule:
        return FreeBimodule(rule_from_left_module(self.bialgebra, self.action))


def differential(C: FODC, f: Mapping) -> dict:
    """``df = e_i⊗∂^i(f)`` in component form ``{(algebra index, i): c}``."""
    return clean({(l, i): c for i in range(C.dim) for l, c in C.partial(i, f).items()})


def check_fodc(C: FODC) -> VerificationReport:
    """Twisted Leibniz rule per direction, and the global rule in ``Γ``."""
    rep = verify_module(C.action)
    if not rep.passed:
        raise VerificationFailed("calculus needs a valid left module", rep)
    B, d, n = C.bialgebra, C.dim, C.bialgebra.dim
    G = C.bimodule()
    rule = G.rule
    e = lambda i: {i: ONE}

    def twisted():
        for f, g in product(range(n), repeat=2):
            fg = B.mul(e(f), e(g))
            for i in range(d):
                rhs = B.mul(C.partial(i, e(f)), e(g))
                for k in range(d):
                    rhs = la.vadd(rhs, B.mul(rule.rule[f][i][k], C.partial(k, e(g))))
                yield (B.basis[f], B.basis[g], C.basis[i]), C.partial(i, fg), rhs

    def leibniz():
        for f, g in product(range(n), repeat=2):
            lhs = differential(C, B.mul(e(f), e(g)))
            rhs = la.vadd(G.right_act(differential(C, e(f)), e(g)), G.left_act(e(f), differential(C, e(g))))
            yield (B.basis[f], B.basis[g]), lhs, rhs

    report = VerificationReport()
    report.add(run_identity(
        "fodc.twisted_leibniz", "∂^i(fg) = ∂^i(f)g + λ^i_k(f_(1))f_(2)∂^k(g)", twisted(), B.fmt))
    report.add(run_identity("fodc.leibniz", "d(fg) = df.g + f.dg", leibniz(), G.fmt))
    return report


def _field_map(C: FODC, alpha: Sequence) -> tuple:
    """Matrix of ``(1⊗α)^∂ = Σ_i α_i ∂^i``."""
    n = C.bialgebra.dim
    out = la.zeros(n, n)
    for a, m in zip(alpha, C.partials):
        a = as_scalar(a)
        if a != 0:
            out = la.matadd(out, la.matscale(m, a))
    return out


def _comodule_map_cases(C: FODC, mat, label):
    B, n = C.bialgebra, C.bialgebra.dim
    for f in range(n):
        lhs = B.delta(la.matvec(mat, {f: ONE}))
        rhs = la.apply_leg(B.delta({f: ONE}), 0, lambda j: la.column(mat, j))
        yield (label, B.basis[f]), lhs, rhs


def check_right_covariance(C: FODC, *, samples: int = 0, seed: int = 0) -> VerificationReport:
    """``Δ∘∂^i = (∂^i⊗id)∘Δ`` for every ``i`` and the same for vector fields.

    ``covariance.vector_fields`` checks ``Δ∘(1⊗α)^∂ = ((1⊗α)^∂⊗id)∘Δ`` for
    every dual-basis ``α``; ``samples > 0`` adds that many random rational
    ``α`` drawn from a seeded generator.
    """
    B, d = C.bialgebra, C.dim
    fmt = lambda t: la.format_vec(t, B.basis)
    report = VerificationReport()

    def partial_cases():
        for i in range(d):
            yield from _comodule_map_cases(C, C.partials[i], f"∂^{C.basis[i]}")

    report.add(run_identity("covariance.partials", "Δ∘∂^i = (∂^i⊗id)∘Δ", partial_cases(), fmt))
    fields = [(f"~{C.basis[i]}", [ONE if j == i else 0 for j in range(d)]) for i in range(d)]

    def field_cases(items):
        for label, alpha in items:
            yield from _comodule_map_cases(C, _field_map(C, alpha), label)

    anchor = "Δ∘(1⊗α)^∂ = ((1⊗α)^∂⊗id)∘Δ"
    report.add(run_identity("covariance.vector_fields", anchor, field_cases(fields), fmt))
    if samples:
        rng = random.Random(seed)
        rand = [
            ("α=" + ",".join(format_scalar(x) for x in alpha), alpha)
            for alpha in ([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d)] for _ in range(samples))
        ]
        report.add(run_identity("covariance.random_vector_fields", anchor, field_cases(rand), fmt))
    return report


def cartan_action(C: FODC, X: Mapping, f: Mapping, dual: DualFreeBimodule | None = None) -> dict:
    """``X^∂(f) = ≪X, df≫`` for ``X`` in ``B⊗Ṽ`` (component form)."""
    D = dual if dual is not None else dualize(C.bimodule())
    return D.pair(X, differential(C, f))


def check_cartan(C: FODC) -> VerificationReport:
    """``(a.X)^∂(f) = a X^∂(f)`` and ``(1⊗e^i)^∂ = ∂^i`` on basis inputs."""
    B, n, d = C.bialgebra, C.bialgebra.dim, C.dim
    D = dualize(C.bimodule())
    T = D.dual
    e = lambda i: {i: ONE}
    report = VerificationReport()
    report.add(run_identity(
        "cartan.dual_basis", "(1⊗e^i)^∂ = ∂^i",
        (((T.basis[i], B.basis[f]), cartan_action(C, T.generator(i), e(f), D), C.partial(i, e(f)))
         for i, f in product(range(d), range(n))), B.fmt))
    report.add(run_identity(
        "cartan.left_linear", "(a.X)^∂(f) = a X^∂(f)",
        (((B.basis[a], T.label(X), B.basis[f]),
          cartan_action(C, T.left_act(e(a), T.element(*X)), e(f), D),
          B.mul(e(a), cartan_action(C, T.element(*X), e(f), D)))
         for a, X, f in product(range(n), list(T.basis_elements()), range(n))), B.fmt))
    return report


def woronowicz_functionals(C: FODC) -> list:
    """``χ^i = ε∘∂^i`` as value vectors on the basis of ``B``."""
    B = C.bialgebra
    return [
        clean({j: B.eps(C.partial(i, {j: ONE})) for j in range(B.dim)}) for i in range(C.dim)
    ]


def evaluate(phi: Mapping, f: Mapping):
    s = la.ZERO
    for j, c in f.items():
        x = phi.get(j)
        if x is not None:
            s = s + c * x
    return s


def convolution(phi: Mapping, psi: Mapping, B: BialgebraData) -> dict:
    """``(φ⋆ψ)(f) = φ(f_(1))ψ(f_(2))``."""
    out = {}
    for j in range(B.dim):
        s = la.ZERO
        for (p, q), c in B.delta({j: ONE}).items():
            x, y = phi.get(p), psi.get(q)
            if x is not None and y is not None:
                s = s + c * x * y
        out[j] = s
    return clean(out)


@dataclass(frozen=True)
class BracketTable:
    """Brackets ``[χ_i, χ_j]`` and their coordinates in ``span{χ_k}`` when they exist."""

    basis: tuple
    algebra_basis: tuple
    chi: tuple
    table: tuple  # table[i][j] is a functional
    constants: tuple  # constants[i][j] is a coordinate tuple or None

    @property
    def closed(self) -> bool:
        return all(c is not None for row in self.constants for c in row)

    @property
    def is_zero(self) -> bool:
        return all(not f for row in self.table for f in row)

    def _fmt_functional(self, f: Mapping) -> str:
        return la.format_vec(f, tuple(f"[{b}]" for b in self.algebra_basis))

    def to_dict(self) -> dict:
        d = len(self.basis)
        entries = []
        for i, j in product(range(d), repeat=2):
            c = self.constants[i][j]
            entries.append({
                "i": self.basis[i],
                "j": self.basis[j],
                "bracket": [format_scalar(self.table[i][j].get(k, la.ZERO)) for k in range(len(self.algebra_basis))],
                "in_span": c is not None,
                "coordinates": None if c is None else [format_scalar(x) for x in c],
            })
        return {
            "convention": "[χ_i, χ_j] = χ_i⋆χ_j − 𝓡̃^{mn}_{ij} χ_m⋆χ_n",
            "basis": list(self.basis),
            "algebra_basis": list(self.algebra_basis),
            "chi": [[format_scalar(f.get(k, la.ZERO)) for k in range(len(self.algebra_basis))] for f in self.chi],
            "closed": self.closed,
            "brackets": entries,
        }

    def format_text(self) -> str:
        d = len(self.basis)
        lines = ["convention: [χ_i, χ_j] = χ_i⋆χ_j − 𝓡̃^{mn}_{ij} χ_m⋆χ_n"]
        for k in range(d):
            lines.append(f"χ^{self.basis[k]} = {self._fmt_functional(self.chi[k])}")
        for i, j in product(range(d), repeat=2):
            c = self.constants[i][j]
            span = ("not in span{χ}" if c is None else
                    "= " + la.format_vec(clean(dict(enumerate(c))), tuple(f"χ^{b}" for b in self.basis)))
            lines.append(f"[χ^{self.basis[i]}, χ^{self.basis[j]}] = {self._fmt_functional(self.table[i][j])}  ({span})")
        lines.append(f"closed: {self.closed}")
        return "\n".join(lines)


def braiding_on_dual(C: FODC):
    """The Yang-Baxter operator on ``Ṽ`` from the dual right-right module over ``B^cop``."""
    B = C.bialgebra
    if C.coaction is None:
        raise StructureError("the bracket needs a bicovariant calculus (no left coaction given)")
    if not isinstance(B, HopfAlgebraData) or not B.has_bijective_antipode:
        raise StructureError("the bracket requires a Hopf algebra with bijective antipode")
    M = YDModule(B, C.action, C.coaction, "LL")
    rep = check_yd(M)
    if not rep.passed:
        raise VerificationFailed("the calculus is not bicovariant", rep)
    return yang_baxter(yd_to_cop(yd_dual(M)))


def quantum_lie_bracket(C: FODC) -> BracketTable:
    """Bracket table ``[χ_i, χ_j] = χ_i⋆χ_j − 𝓡̃^{mn}_{ij} χ_m⋆χ_n`` with a closure test."""
    B, d = C.bialgebra, C.dim
    R = braiding_on_dual(C)
    chi = woronowicz_functionals(C)
    conv = {(m, n): convolution(chi[m], chi[n], B) for m, n in product(range(d), repeat=2)}
    span = la.from_columns(chi, B.dim)
    table, constants = [], []
    for i in range(d):
        row_t, row_c = [], []
        for j in range(d):
            br = conv[(i, j)]
            for m, n in product(range(d), repeat=2):
                r = R.entry(m, n, i, j)
                if r != 0:
                    br = la.vsub(br, la.vscale(conv[(m, n)], r))
            sol = la.solve(span, la.dense(br, B.dim))
            row_t.append(br)
            row_c.append(None if sol is None else tuple(sol))
        table.append(tuple(row_t))
        constants.append(tuple(row_c))
    return BracketTable(tuple(C.basis), tuple(B.basis), tuple(chi), tuple(table), tuple(constants))


def finite_group_calculus(G: FiniteGroup, subset: Sequence[int]) -> FODC:
    """Calculus on ``k(G)`` with ``∂^g = L_g − id`` for ``g ∈ T``.

    ``(L_g f)(x) = f(gx)`` and ``λ^g_h(f) = δ^g_h f(g)``.  When ``T`` is closed
    under conjugation the calculus carries the left coaction
    ``L^i_k = Σ_{x: i = x⁻¹kx} δ_x`` as well.
    """
    T = tuple(subset)
    if not T:
        raise StructureError("the subset must be nonempty")
    if G.identity in T:
        raise StructureError("the identity may not belong to the subset (its partial derivative vanishes)")
    if len(set(T)) != len(T):
        raise StructureError("the subset has repeated elements")
    from .catalog import function_algebra_yd

    B = function_algebra(G, f"k{G.name}-fun")
    n = G.order
    partials = []
    for g in T:
        m = [[0] * n for _ in range(n)]
        for a in range(n):  # L_g δ_a = δ_{g⁻¹a}
            m[G.mul(G.inv(g), a)][a] += 1
            m[a][a] -= 1
        partials.append(m)
    closed = G.is_conjugation_closed(T)
    M = function_algebra_yd(G, T, broken=not closed)
    return FODC(B, M.action, tuple(partials), M.coaction if closed else None,
                f"{G.name}:{','.join(G.labels[g] for g in T)}")


def perturbed(C: FODC, direction: int = 0, row: int = 0, col: int = 0, delta=1) -> FODC:
    """A copy with one entry of one partial derivative shifted by ``delta``."""
    mats = [list(map(list, m)) for m in C.partials]
    mats[direction][row][col] = as_scalar(mats[direction][row][col]) + as_scalar(delta)
    return replace(C, partials=tuple(mats), name=C.name + "~perturbed")
