"""Built-in Hopf algebras and (co)module instances.

Algebra names: ``k``, ``kZ2``, ``kZ3``, ``kS3``, ``kZ2-fun``, ``kZ3-fun``,
``kS3-fun``, ``sweedler-H4``, and the parameterized ``group-algebra(G)`` /
``function-algebra(G)`` for ``G`` one of ``Zn`` or ``Sn``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .algebra import FinAlgebra, FinCoalgebra, HopfAlgebraData
from .groups import FiniteGroup, cyclic, parse_group, symmetric
from .linalg import ONE

__all__ = [
    "ground_field",
    "group_algebra",
    "function_algebra",
    "sweedler_h4",
    "get_algebra",
    "ALGEBRA_NAMES",
    "trivial_yd",
    "conjugation_yd",
    "sign_yd_kz2",
    "h4_line_yd",
    "adjoint_yd",
    "function_algebra_yd",
    "yd_catalog",
    "broken_yd_catalog",
    "h4_two_dim_module",
    "kz3_rotation_module",
    "sign_module",
    "function_algebra_module",
    "module_catalog",
    "regular_right_comodule",
    "right_comodule_catalog",
    "BIMODULE_SEEDS",
    "bimodule_seed",
]


def ground_field() -> HopfAlgebraData:
    alg = FinAlgebra(("1",), {(0, 0): {0: 1}}, {0: 1})
    coal = FinCoalgebra(("1",), {0: {(0, 0): 1}}, {0: 1})
    return HopfAlgebraData(alg, coal, "k", antipode=((1,),))


def group_algebra(G: FiniteGroup, name: str | None = None) -> HopfAlgebraData:
    """``k[G]``: grouplike basis, ``S(g) = g⁻¹``."""
    n = G.order
    labels = tuple(_group_label(G, g) for g in range(n))
    mult = {(a, b): {G.mul(a, b): 1} for a in range(n) for b in range(n)}
    alg = FinAlgebra(labels, mult, {G.identity: 1})
    coal = FinCoalgebra(labels, {g: {(g, g): 1} for g in range(n)}, {g: 1 for g in range(n)})
    S = [[1 if i == G.inv(j) else 0 for j in range(n)] for i in range(n)]
    return HopfAlgebraData(alg, coal, name or f"k[{G.name}]", antipode=S)


def function_algebra(G: FiniteGroup, name: str | None = None) -> HopfAlgebraData:
    """``k(G)``: pointwise product of delta functions, ``Δδ_a = Σ_{bc=a} δ_b⊗δ_c``."""
    n = G.order
    labels = tuple(f"δ_{G.labels[g]}" for g in range(n))
    alg = FinAlgebra(labels, {(a, a): {a: 1} for a in range(n)}, {a: 1 for a in range(n)})
    comult = {a: {} for a in range(n)}
    for b in range(n):
        for c in range(n):
            comult[G.mul(b, c)][(b, c)] = 1
    coal = FinCoalgebra(labels, comult, {G.identity: 1})
    S = [[1 if i == G.inv(j) else 0 for j in range(n)] for i in range(n)]
    return HopfAlgebraData(alg, coal, name or f"k({G.name})", antipode=S)


def _group_label(G: FiniteGroup, g: int) -> str:
    if G.name.startswith("Z"):
        k = int(G.labels[g])
        return "1" if k == 0 else ("g" if k == 1 else f"g^{k}")
    return G.labels[g]


def sweedler_h4() -> HopfAlgebraData:
    """Sweedler's 4-dimensional Hopf algebra on ``1, g, x, gx``.

    ``g² = 1``, ``x² = 0``, ``xg = -gx``, ``Δg = g⊗g``, ``Δx = x⊗1 + g⊗x``,
    ``S(x) = -gx``; the antipode has order 4.
    """
    labels = ("1", "g", "x", "gx")
    # basis element (a, b) = g^a x^b; g^a x^b · g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
    idx = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}
    words = {v: k for k, v in idx.items()}
    mult = {}
    for i in range(4):
        a, b = words[i]
        for j in range(4):
            c, d = words[j]
            if b + d < 2:
                mult[(i, j)] = {idx[((a + c) % 2, b + d)]: (-1) ** (b * c)}
    alg = FinAlgebra(labels, mult, {0: 1})
    comult = {
        0: {(0, 0): 1},
        1: {(1, 1): 1},
        2: {(2, 0): 1, (1, 2): 1},
        3: {(3, 1): 1, (0, 3): 1},
    }
    coal = FinCoalgebra(labels, comult, {0: 1, 1: 1})
    # columns: S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    S = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    return HopfAlgebraData(alg, coal, "H4", antipode=S)


ALGEBRA_NAMES = ("k", "kZ2", "kZ3", "kS3", "kZ2-fun", "kZ3-fun", "kS3-fun", "sweedler-H4")

_PARAM = re.compile(r"^(group-algebra|function-algebra)\((\w+)\)$")


@lru_cache(maxsize=None)
def get_algebra(name: str) -> HopfAlgebraData:
    """Look up a catalog algebra by name."""
    fixed = {
        "k": ground_field,
        "kZ2": lambda: group_algebra(cyclic(2), "kZ2"),
        "kZ3": lambda: group_algebra(cyclic(3), "kZ3"),
        "kS3": lambda: group_algebra(symmetric(3), "kS3"),
        "kZ2-fun": lambda: function_algebra(cyclic(2), "kZ2-fun"),
        "kZ3-fun": lambda: function_algebra(cyclic(3), "kZ3-fun"),
        "kS3-fun": lambda: function_algebra(symmetric(3), "kS3-fun"),
        "sweedler-H4": sweedler_h4,
        "H4": sweedler_h4,
    }
    if name in fixed:
        return fixed[name]()
    m = _PARAM.match(name.replace(" ", ""))
    if m:
        G = parse_group(m.group(2))
        build = group_algebra if m.group(1) == "group-algebra" else function_algebra
        return build(G, name)
    raise KeyError(f"unknown catalog algebra {name!r}")


# -- (co)module and Yetter-Drinfeld instances --------------------------------

from . import linalg as la  # noqa: E402
from .modules import (  # noqa: E402
    LeftComodule,
    LeftModule,
    trivial_comodule,
    trivial_module,
)
from .yd import YDModule  # noqa: E402


def _diag_comodule(B, entries, basis=()) -> LeftComodule:
    d = len(entries)
    ent = tuple(tuple(entries[i] if i == k else {} for k in range(d)) for i in range(d))
    return LeftComodule(B, d, ent, basis)


def trivial_yd(B, dim: int = 1) -> YDModule:
    return YDModule(B, trivial_module(B, dim), trivial_comodule(B, dim), "LL")


def conjugation_yd(G: FiniteGroup, classes: tuple | None = None, *, broken: bool = False) -> YDModule:
    """Left-left module over ``k[G]`` on a union of conjugacy classes.

    The default carrier is spanned by the involutions (the transpositions
    for ``S3``).
    ``g.e_c = e_{gcg⁻¹}`` and ``e_c ↦ c ⊗ e_c``.  With ``broken=True`` the
    action is replaced by the trivial one, which breaks compatibility for
    non-central classes.
    """
    B = group_algebra(G, f"k{G.name}")
    if classes is None:
        classes = tuple(g for g in range(G.order) if g != G.identity and G.mul(g, g) == G.identity)
    d = len(classes)
    pos = {c: i for i, c in enumerate(classes)}
    basis = tuple(G.labels[c] for c in classes)
    mats = []
    for g in range(G.order):
        if broken:
            mats.append(la.identity(d))
            continue
        m = [[0] * d for _ in range(d)]
        for c in classes:
            m[pos[G.conj(g, c)]][pos[c]] = 1
        mats.append(m)
    action = LeftModule(B, d, tuple(mats), basis)
    coaction = _diag_comodule(B, [{c: 1} for c in classes], basis)
    return YDModule(B, action, coaction, "LL")


def sign_yd_kz2() -> YDModule:
    """1-dim module over ``kZ2``: ``g ↦ -1`` with coaction ``e ↦ g⊗e``."""
    B = get_algebra("kZ2")
    action = LeftModule(B, 1, (((1,),), ((-1,),)))
    return YDModule(B, action, _diag_comodule(B, [{1: 1}]), "LL")


def h4_line_yd(*, broken: bool = False) -> YDModule:
    """1-dim module over H4: ``g ↦ -1``, ``x ↦ 0``, coaction ``e ↦ g⊗e``.

    ``broken=True`` uses the trivial coaction, which violates compatibility
    at ``a = x``.
    """
    B = get_algebra("sweedler-H4")
    action = LeftModule(B, 1, (((1,),), ((-1,),), ((0,),), ((0,),)))
    return YDModule(B, action, _diag_comodule(B, [{0: 1} if broken else {1: 1}]), "LL")


def adjoint_yd(H) -> YDModule:
    """``H`` acting on itself by ``a.b = a_(1) b S(a_(2))`` and coacting by ``Δ``."""
    n = H.dim
    e = lambda i: {i: ONE}
    mats = []
    for j in range(n):
        cols = []
        for k in range(n):
            col: dict = {}
            for (p, q), c in H.delta(e(j)).items():
                col = la.vadd(col, la.vscale(H.mul(e(p), e(k), H.S(e(q))), c))
            cols.append(col)
        mats.append(la.from_columns(cols, n))
    action = LeftModule(H, n, tuple(mats), H.basis)
    ent = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (p, m), c in H.delta(e(k)).items():
            ent[m][k] = la.vadd(ent[m][k], {p: c})
    coaction = LeftComodule(H, n, tuple(tuple(r) for r in ent), H.basis)
    return YDModule(H, action, coaction, "LL")


def function_algebra_yd(G: FiniteGroup, subset, *, broken: bool = False) -> YDModule:
    """Left-left module over ``k(G)`` on ``span{e_g : g ∈ T}``.

    ``λ^g_h(f) = δ^g_h f(g)`` and ``L^i_k = Σ_{x : i = x⁻¹kx} δ_x``; ``T`` must be
    closed under conjugation.  ``broken=True`` uses the trivial coaction.
    """
    B = function_algebra(G, f"k{G.name}-fun")
    T = tuple(subset)
    if not broken and not G.is_conjugation_closed(T):
        raise ValueError("subset is not closed under conjugation")
    d = len(T)
    basis = tuple(G.labels[g] for g in T)
    mats = []
    for a in range(G.order):
        mats.append([[1 if i == k and T[i] == a else 0 for k in range(d)] for i in range(d)])
    action = LeftModule(B, d, tuple(mats), basis)
    if broken:
        coaction = trivial_comodule(B, d)
        coaction = LeftComodule(B, d, coaction.entries, basis)
    else:
        ent = tuple(
            tuple({x: 1 for x in range(G.order) if T[i] == G.conj(G.inv(x), T[k])} for k in range(d))
            for i in range(d)
        )
        coaction = LeftComodule(B, d, ent, basis)
    return YDModule(B, action, coaction, "LL")


def yd_catalog() -> dict:
    """Named left-left instances expected to pass the compatibility check."""
    S3, Z3 = symmetric(3), cyclic(3)
    return {
        "trivial-kZ2": trivial_yd(get_algebra("kZ2")),
        "trivial-H4": trivial_yd(get_algebra("sweedler-H4"), 2),
        "sign-kZ2": sign_yd_kz2(),
        "conjugation-kS3": conjugation_yd(S3),
        "line-H4": h4_line_yd(),
        "adjoint-H4": adjoint_yd(get_algebra("sweedler-H4")),
        "calculus-kZ3-fun": function_algebra_yd(Z3, (1, 2)),
        "calculus-kS3-fun": function_algebra_yd(S3, (1, 2, 3)),
    }


def broken_yd_catalog() -> dict:
    """Named left-left instances whose action and coaction are incompatible."""
    S3 = symmetric(3)
    return {
        "broken-conjugation-kS3": conjugation_yd(S3, broken=True),
        "broken-line-H4": h4_line_yd(broken=True),
        "broken-calculus-kS3-fun": function_algebra_yd(S3, (1, 2, 3), broken=True),
    }


# -- left modules, right comodules and bimodule seeds ------------------------

def h4_two_dim_module(q=None) -> LeftModule:
    """``g ↦ diag(1, -1)``, ``x ↦ [[0, 0], [q, 0]]`` with ``q`` the indeterminate by default."""
    from .scalars import RationalFunction

    B = get_algebra("sweedler-H4")
    q = RationalFunction.q() if q is None else q
    g = ((1, 0), (0, -1))
    x = ((0, 0), (q, 0))
    return LeftModule(B, 2, (la.identity(2), g, x, la.matmul(g, x)), ("u", "w"))


def kz3_rotation_module() -> LeftModule:
    """2-dim representation of ``Z3`` with ``g ↦ [[0, -1], [1, -1]]``."""
    B = get_algebra("kZ3")
    g = ((0, -1), (1, -1))
    return LeftModule(B, 2, (la.identity(2), g, la.matmul(g, g)))


def sign_module(G: FiniteGroup) -> LeftModule:
    """1-dim sign representation of ``Z2`` or ``S_n`` (``Z_n`` with odd ``n`` has none)."""
    B = group_algebra(G, f"k{G.name}")
    signs = []
    for g in range(G.order):
        if G.name.startswith("S"):
            parity = sum(len(c) - 1 for c in re.findall(r"\(([^)]*)\)", G.labels[g]))
            signs.append(-1 if parity % 2 else 1)
        else:
            signs.append(1 if g == G.identity else -1)
    return LeftModule(B, 1, tuple(((s,),) for s in signs))


def function_algebra_module(G: FiniteGroup, subset) -> LeftModule:
    """``λ^g_h(f) = δ^g_h f(g)`` on ``span{e_g : g ∈ T}``."""
    return function_algebra_yd(G, subset, broken=True).action


def module_catalog() -> dict:
    """Named left modules over catalog algebras."""
    from .modules import regular_module

    S3, Z2, Z3 = symmetric(3), cyclic(2), cyclic(3)
    H4 = get_algebra("sweedler-H4")
    return {
        "trivial-kZ2": trivial_module(get_algebra("kZ2"), 1),
        "sign-kZ2": sign_module(Z2),
        "rotation-kZ3": kz3_rotation_module(),
        "sign-kS3": sign_module(S3),
        "transpositions-kS3": conjugation_yd(S3).action,
        "regular-kS3": regular_module(get_algebra("kS3")),
        "trivial-H4": trivial_module(H4, 2),
        "line-H4": h4_line_yd().action,
        "two-dim-H4": h4_two_dim_module(),
        "regular-H4": regular_module(H4),
        "calculus-kZ2-fun": function_algebra_module(Z2, (1,)),
        "calculus-kZ3-fun": function_algebra_module(Z3, (1, 2)),
        "calculus-kS3-fun": function_algebra_module(S3, (1, 2, 3)),
    }


def regular_right_comodule(H) -> "RightComodule":
    """``H`` coacting on itself by ``Δ``: ``e_k ↦ e_m ⊗ R^m_k``."""
    from .modules import RightComodule

    n = H.dim
    ent = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (m, p), c in H.delta({k: ONE}).items():
            ent[m][k] = la.vadd(ent[m][k], {p: c})
    return RightComodule(H, n, tuple(tuple(r) for r in ent), H.basis)


def right_comodule_catalog() -> dict:
    """Named right comodules over Hopf catalog algebras."""
    from .modules import transpose_comodule
    from .yd import yd_ll_to_rr

    out = {}
    for name in ALGEBRA_NAMES:
        H = get_algebra(name)
        out[f"regular-{name}"] = regular_right_comodule(H)
        out[f"trivial-{name}"] = trivial_comodule(H, 2, right=True)
    for name, M in yd_catalog().items():
        out[f"transpose-{name}"] = transpose_comodule(M.coaction)
        out[f"rr-{name}"] = yd_ll_to_rr(M).coaction
    return dict(sorted(out.items()))


# (algebra, left module) seeds for right covariant bimodules V⊗B and their duals;
# the flag says whether the dual should also be left covariant over B itself
BIMODULE_SEEDS = {
    "kZ2-bimodule": ("sign-kZ2", True),
    "kZ3-bimodule": ("rotation-kZ3", True),
    "kS3-bimodule": ("transpositions-kS3", True),
    "H4-bimodule": ("two-dim-H4", False),
    "kS3-fun-bimodule": ("calculus-kS3-fun", False),
    "kZ3-fun-bimodule": ("calculus-kZ3-fun", True),
}


def bimodule_seed(name: str):
    """``(B, λ, dual_is_B_covariant)`` for a named bimodule seed."""
    try:
        module_name, b_covariant = BIMODULE_SEEDS[name]
    except KeyError:
        raise KeyError(f"unknown catalog bimodule {name!r}; known: {', '.join(BIMODULE_SEEDS)}") from None
    lam = module_catalog()[module_name]
    return lam.algebra, lam, b_covariant
