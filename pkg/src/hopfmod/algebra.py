"""Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras.

Structures are given by sparse structure constants over a labelled basis.
Elements are sparse vectors (``dict[int, Scalar]``) and elements of tensor
powers are sparse tensors keyed by index tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

from . import linalg as la
from .linalg import ONE, ZERO, accumulate, clean
from .report import Check, StructureError, VerificationReport, run_identity
from .scalars import Scalar, as_scalar

__all__ = [
    "FinAlgebra",
    "FinCoalgebra",
    "BialgebraData",
    "HopfAlgebraData",
    "LinearMap",
    "verify",
    "opposite",
    "co_opposite",
    "op_cop",
    "iterated_comultiply",
    "antipode_as_anti_morphisms",
    "check_algebra_map",
    "check_coalgebra_map",
]


def _clean_table(table: Mapping) -> dict:
    out = {}
    for key, vec in table.items():
        vec = clean({k: as_scalar(c) for k, c in vec.items()})
        if vec:
            out[key] = vec
    return out


@dataclass(frozen=True)
class FinAlgebra:
    basis: tuple
    mult: dict  # (i, j) -> {k: c}
    unit: dict  # {k: c}

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "mult", _clean_table(self.mult))
        object.__setattr__(self, "unit", clean({k: as_scalar(c) for k, c in self.unit.items()}))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def one(self) -> dict:
        return dict(self.unit)

    def e(self, i: int) -> dict:
        return {i: ONE}

    def multiply(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                xy = x * y
                for k, c in self.mult.get((i, j), {}).items():
                    accumulate(out, k, xy * c)
        return clean(out)

    def product(self, *elements: Mapping) -> dict:
        out = self.one()
        for el in elements:
            out = self.multiply(out, el)
        return out

    def tensor_multiply(self, s: Mapping, t: Mapping) -> dict:
        """Legwise product in a tensor power of the algebra."""
        out: dict = {}
        for ks, x in s.items():
            for kt, y in t.items():
                parts = [self.mult.get((i, j), {}) for i, j in zip(ks, kt)]
                xy = x * y
                for combo in product(*(p.items() for p in parts)):
                    c = xy
                    for _, ci in combo:
                        c = c * ci
                    accumulate(out, tuple(k for k, _ in combo), c)
        return clean(out)


@dataclass(frozen=True)
class FinCoalgebra:
    basis: tuple
    comult: dict  # i -> {(j, k): c}
    counit: dict  # {i: c}

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "comult", _clean_table(self.comult))
        object.__setattr__(self, "counit", clean({k: as_scalar(c) for k, c in self.counit.items()}))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def comultiply(self, a: Mapping) -> dict:
        out: dict = {}
        for i, x in a.items():
            for jk, c in self.comult.get(i, {}).items():
                accumulate(out, jk, x * c)
        return clean(out)

    def epsilon(self, a: Mapping) -> Scalar:
        s = ZERO
        for i, x in a.items():
            c = self.counit.get(i)
            if c is not None:
                s = s + x * c
        return s

    def delta_leg(self, t: Mapping, leg: int) -> dict:
        return la.apply_leg(t, leg, lambda i: self.comult.get(i, {}))

    def epsilon_leg(self, t: Mapping, leg: int) -> dict:
        out: dict = {}
        for key, c in t.items():
            e = self.counit.get(key[leg])
            if e is not None:
                accumulate(out, key[:leg] + key[leg + 1:], c * e)
        return clean(out)


@dataclass(frozen=True)
class BialgebraData:
    algebra: FinAlgebra
    coalgebra: FinCoalgebra
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise StructureError("algebra and coalgebra have different dimensions")

    # convenience delegation
    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis(self) -> tuple:
        return self.algebra.basis

    def e(self, i: int) -> dict:
        return {i: ONE}

    def one(self) -> dict:
        return self.algebra.one()

    def mul(self, *elements: Mapping) -> dict:
        if len(elements) == 2:
            return self.algebra.multiply(*elements)
        return self.algebra.product(*elements)

    def delta(self, a: Mapping) -> dict:
        return self.coalgebra.comultiply(a)

    def eps(self, a: Mapping) -> Scalar:
        return self.coalgebra.epsilon(a)

    def is_cocommutative(self) -> bool:
        return all(self.delta({i: ONE}) == la.permute_legs(self.delta({i: ONE}), (1, 0)) for i in range(self.dim))

    def is_commutative(self) -> bool:
        return all(
            self.algebra.mult.get((i, j), {}) == self.algebra.mult.get((j, i), {})
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def fmt(self, v: Mapping) -> str:
        return la.format_vec(v, self.basis)

    def label(self, idx: Sequence[int]) -> str:
        return "⊗".join(self.basis[i] for i in idx)


@dataclass(frozen=True)
class HopfAlgebraData(BialgebraData):
    """A bialgebra with antipode ``S`` (matrix whose column ``i`` is ``S(e_i)``).

    ``antipode_inverse`` is computed by exact inversion when not supplied; it
    stays ``None`` when ``S`` is singular, and constructions that need
    ``S^{-1}`` refuse such algebras.
    """

    antipode: tuple = ()
    antipode_inverse: Optional[tuple] = None

    def __post_init__(self):
        super().__post_init__()
        S = la.as_matrix([[as_scalar(x) for x in row] for row in self.antipode])
        if len(S) != self.dim or any(len(r) != self.dim for r in S):
            raise StructureError("antipode matrix has the wrong shape")
        object.__setattr__(self, "antipode", S)
        if self.antipode_inverse is None:
            object.__setattr__(self, "antipode_inverse", la.inverse(S))
        else:
            Si = la.as_matrix([[as_scalar(x) for x in row] for row in self.antipode_inverse])
            object.__setattr__(self, "antipode_inverse", Si)

    @property
    def has_bijective_antipode(self) -> bool:
        return self.antipode_inverse is not None

    def S(self, a: Mapping) -> dict:
        return la.matvec(self.antipode, a)

    def S_inv(self, a: Mapping) -> dict:
        if self.antipode_inverse is None:
            raise StructureError("requires bijective antipode")
        return la.matvec(self.antipode_inverse, a)

    def antipode_map(self) -> "LinearMap":
        return LinearMap(self.antipode, kind="anti-morphism", source=self, target=self)

    def antipode_inverse_map(self) -> "LinearMap":
        if self.antipode_inverse is None:
            raise StructureError("requires bijective antipode")
        return LinearMap(self.antipode_inverse, kind="anti-morphism", source=self, target=self)

    def bialgebra(self) -> BialgebraData:
        return BialgebraData(self.algebra, self.coalgebra, self.name)


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a linear map; column ``i`` is the image of basis vector ``i``.

    ``kind`` tags the map as an algebra/coalgebra ``"morphism"`` or
    ``"anti-morphism"``.  The tag is always verified before it is relied on.
    """

    matrix: tuple
    kind: Optional[str] = None
    source: object = field(default=None, compare=False)
    target: object = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.as_matrix(self.matrix))
        if self.kind not in (None, "morphism", "anti-morphism"):
            raise ValueError(f"unknown map kind {self.kind!r}")

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    @property
    def anti(self) -> bool:
        return self.kind == "anti-morphism"

    def __call__(self, v: Mapping) -> dict:
        return la.matvec(self.matrix, v)

    def compose(self, first: "LinearMap") -> "LinearMap":
        """``self ∘ first``; the kind follows the parity of anti factors."""
        kind = None
        if self.kind and first.kind:
            kind = "morphism" if self.anti == first.anti else "anti-morphism"
        return LinearMap(la.matmul(self.matrix, first.matrix), kind, first.source, self.target)

    @classmethod
    def identity(cls, B) -> "LinearMap":
        return cls(la.identity(B.dim), "morphism", B, B)


# -- verification ------------------------------------------------------------

def _check_dims_algebra(A: FinAlgebra) -> None:
    n = A.dim
    if n == 0:
        raise StructureError("algebra of dimension zero")
    for (i, j), vec in A.mult.items():
        if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
            raise StructureError(f"multiplication entry ({i}, {j}) has an index out of range for dim {n}")
    if any(not 0 <= k < n for k in A.unit):
        raise StructureError("unit vector index out of range")


def _check_dims_coalgebra(C: FinCoalgebra) -> None:
    n = C.dim
    for i, vec in C.comult.items():
        if not 0 <= i < n or any(not (0 <= j < n and 0 <= k < n) for j, k in vec):
            raise StructureError(f"comultiplication entry {i} has an index out of range for dim {n}")
    if any(not 0 <= k < n for k in C.counit):
        raise StructureError("counit index out of range")


def _algebra_checks(A: FinAlgebra, labels) -> list[Check]:
    n = A.dim
    fmt = lambda v: la.format_vec(v, labels)
    e = lambda i: {i: ONE}
    assoc = run_identity(
        "algebra.associativity",
        "(e_i e_j) e_k = e_i (e_j e_k)",
        (
            ((labels[i], labels[j], labels[k]),
             A.multiply(A.multiply(e(i), e(j)), e(k)),
             A.multiply(e(i), A.multiply(e(j), e(k))))
            for i, j, k in product(range(n), repeat=3)
        ),
        fmt,
    )
    unit = run_identity(
        "algebra.unit",
        "1·e_i = e_i·1 = e_i",
        (
            ((labels[i], side), A.multiply(A.unit, e(i)) if side == "left" else A.multiply(e(i), A.unit), e(i))
            for i in range(n)
            for side in ("left", "right")
        ),
        fmt,
    )
    return [assoc, unit]


def _coalgebra_checks(C: FinCoalgebra, labels) -> list[Check]:
    n = C.dim
    tfmt = lambda t: la.format_vec(t, labels)
    coassoc = run_identity(
        "coalgebra.coassociativity",
        "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
        (
            ((labels[i],), C.delta_leg(C.comult.get(i, {}), 0), C.delta_leg(C.comult.get(i, {}), 1))
            for i in range(n)
        ),
        tfmt,
    )
    counit = run_identity(
        "coalgebra.counit",
        "(ε⊗id)∘Δ = (id⊗ε)∘Δ = id",
        (
            ((labels[i], side), C.epsilon_leg(C.comult.get(i, {}), 0 if side == "left" else 1), {(i,): ONE})
            for i in range(n)
            for side in ("left", "right")
        ),
        tfmt,
    )
    return [coassoc, counit]


def _bialgebra_checks(B: BialgebraData) -> list[Check]:
    n, labels = B.dim, B.basis
    A, C = B.algebra, B.coalgebra
    e = lambda i: {i: ONE}
    tfmt = lambda t: la.format_vec(t, labels)
    delta_mult = run_identity(
        "bialgebra.delta_multiplicative",
        "Δ(e_i e_j) = Δ(e_i)Δ(e_j)",
        (
            ((labels[i], labels[j]), C.comultiply(A.multiply(e(i), e(j))),
             A.tensor_multiply(C.comultiply(e(i)), C.comultiply(e(j))))
            for i, j in product(range(n), repeat=2)
        ),
        tfmt,
    )
    delta_unit = run_identity(
        "bialgebra.delta_unital",
        "Δ(1) = 1⊗1",
        [((), C.comultiply(A.unit), la.tensor_product(A.unit, A.unit))],
        tfmt,
    )
    eps_mult = run_identity(
        "bialgebra.counit_multiplicative",
        "ε(e_i e_j) = ε(e_i)ε(e_j)",
        (
            ((labels[i], labels[j]), C.epsilon(A.multiply(e(i), e(j))), C.epsilon(e(i)) * C.epsilon(e(j)))
            for i, j in product(range(n), repeat=2)
        ),
    )
    eps_unit = run_identity("bialgebra.counit_unital", "ε(1) = 1", [((), C.epsilon(A.unit), ONE)])
    return [delta_mult, delta_unit, eps_mult, eps_unit]


def _antipode_axiom(B: BialgebraData, S: tuple, name: str, anchor: str, labels) -> Check:
    n = B.dim
    fmt = lambda v: la.format_vec(v, labels)

    def sides(i):
        d = B.delta({i: ONE})
        left: dict = {}
        right: dict = {}
        for (j, k), c in d.items():
            left = la.vadd(left, la.vscale(B.mul(la.column(S, j), {k: ONE}), c))
            right = la.vadd(right, la.vscale(B.mul({j: ONE}, la.column(S, k)), c))
        return left, right

    def cases():
        for i in range(n):
            left, right = sides(i)
            target = la.vscale(B.one(), B.eps({i: ONE}))
            yield (labels[i], "S⊗id"), left, target
            yield (labels[i], "id⊗S"), right, target

    return run_identity(name, anchor, cases(), fmt)


def _hopf_checks(H: HopfAlgebraData) -> list[Check]:
    n, labels = H.dim, H.basis
    checks = [_antipode_axiom(H, H.antipode, "hopf.antipode", "m∘(S⊗id)∘Δ = m∘(id⊗S)∘Δ = 1·ε", labels)]
    bij = H.antipode_inverse is not None
    checks.append(Check("hopf.antipode_bijective", "S invertible", bij, () if bij else ("S",),
                        "" if bij else f"rank {la.rank(H.antipode)}", "" if bij else f"{n}", 1))
    if bij:
        Si = H.antipode_inverse
        checks.append(run_identity(
            "hopf.antipode_inverse",
            "S∘S⁻¹ = S⁻¹∘S = id",
            [(("S∘S⁻¹",), la.matmul(H.antipode, Si), la.identity(n)),
             (("S⁻¹∘S",), la.matmul(Si, H.antipode), la.identity(n))],
        ))
        cop = co_opposite(H.bialgebra())
        checks.append(_antipode_axiom(cop, Si, "hopf.antipode_inverse_is_cop_antipode",
                                      "S⁻¹ is an antipode of B^cop", labels))
    return checks


def verify(structure, level: Optional[str] = None) -> VerificationReport:
    """Check every axiom of ``structure`` exhaustively on basis elements.

    ``level`` restricts a bialgebra/Hopf algebra to ``"algebra"``,
    ``"coalgebra"``, ``"bialgebra"`` or ``"hopf"``; by default the structure's
    own level is used.  Inconsistent dimensions raise :class:`StructureError`.
    """
    report = VerificationReport()
    if isinstance(structure, FinAlgebra):
        _check_dims_algebra(structure)
        report.checks.extend(_algebra_checks(structure, structure.basis))
        return report
    if isinstance(structure, FinCoalgebra):
        _check_dims_coalgebra(structure)
        report.checks.extend(_coalgebra_checks(structure, structure.basis))
        return report
    if not isinstance(structure, BialgebraData):
        raise TypeError(f"cannot verify {type(structure).__name__}")
    _check_dims_algebra(structure.algebra)
    _check_dims_coalgebra(structure.coalgebra)
    if level is None:
        level = "hopf" if isinstance(structure, HopfAlgebraData) else "bialgebra"
    if level not in ("algebra", "coalgebra", "bialgebra", "hopf"):
        raise ValueError(f"unknown verification level {level!r}")
    if level in ("algebra", "bialgebra", "hopf"):
        report.checks.extend(_algebra_checks(structure.algebra, structure.basis))
    if level in ("coalgebra", "bialgebra", "hopf"):
        report.checks.extend(_coalgebra_checks(structure.coalgebra, structure.basis))
    if level in ("bialgebra", "hopf"):
        report.checks.extend(_bialgebra_checks(structure))
    if level == "hopf":
        if not isinstance(structure, HopfAlgebraData):
            report.add(Check("hopf.antipode", "antipode present", False, ("antipode",), "missing", "S", 0))
        else:
            report.checks.extend(_hopf_checks(structure))
    return report


# -- opposite structures -----------------------------------------------------

def _with_antipode(B: BialgebraData, S, name: str) -> BialgebraData:
    if S is None:
        return BialgebraData(B.algebra, B.coalgebra, name)
    return HopfAlgebraData(B.algebra, B.coalgebra, name, antipode=S)


def opposite(B: BialgebraData) -> BialgebraData:
    """``B^op``: multiplication ``a·b ↦ b·a``.  A Hopf ``B`` gets antipode ``S⁻¹``."""
    A = B.algebra
    alg = FinAlgebra(A.basis, {(j, i): v for (i, j), v in A.mult.items()}, A.unit)
    out = BialgebraData(alg, B.coalgebra)
    S = B.antipode_inverse if isinstance(B, HopfAlgebraData) else None
    return _with_antipode(out, S, _suffix(B.name, "op"))


def co_opposite(B: BialgebraData) -> BialgebraData:
    """``B^cop``: comultiplication ``a_(1)⊗a_(2) ↦ a_(2)⊗a_(1)``.  A Hopf ``B`` gets ``S⁻¹``."""
    C = B.coalgebra
    coal = FinCoalgebra(C.basis, {i: la.permute_legs(v, (1, 0)) for i, v in C.comult.items()}, C.counit)
    out = BialgebraData(B.algebra, coal)
    S = B.antipode_inverse if isinstance(B, HopfAlgebraData) else None
    return _with_antipode(out, S, _suffix(B.name, "cop"))


def op_cop(B: BialgebraData) -> BialgebraData:
    """``B^{op cop}``; a Hopf ``B`` keeps its antipode ``S``."""
    out = co_opposite(opposite(B.bialgebra() if isinstance(B, HopfAlgebraData) else B))
    S = B.antipode if isinstance(B, HopfAlgebraData) else None
    return _with_antipode(out, S, _suffix(B.name, "op cop"))


def _suffix(name: str, tag: str) -> str:
    return f"{name}^{tag}" if name else ""


# -- Sweedler evaluation -----------------------------------------------------

def iterated_comultiply(B, element: Mapping, legs: int) -> dict:
    """``Δ`` applied ``legs - 1`` times, as a tensor with ``legs`` legs.

    The result is computed both by always splitting the first leg and by
    always splitting the last leg; a disagreement (non-coassociative input)
    raises :class:`StructureError`.
    """
    if legs < 1:
        raise ValueError("legs must be at least 1")
    C = B.coalgebra if isinstance(B, BialgebraData) else B
    t = {(i,): c for i, c in clean(dict(element)).items()}
    left = right = t
    for step in range(legs - 1):
        left = C.delta_leg(left, 0)
        right = C.delta_leg(right, step)
    if left != right:
        raise StructureError("comultiplication is not coassociative; iterated coproduct depends on order")
    return left


def antipode_as_anti_morphisms(H: HopfAlgebraData) -> VerificationReport:
    """Check that ``S`` reverses products and coproducts."""
    n, labels = H.dim, H.basis
    fmt = H.fmt
    tfmt = lambda t: la.format_vec(t, labels)
    e = lambda i: {i: ONE}
    report = VerificationReport()
    report.add(run_identity(
        "antipode.algebra_anti_homomorphism",
        "S(ab) = S(b)S(a)",
        (((labels[i], labels[j]), H.S(H.mul(e(i), e(j))), H.mul(H.S(e(j)), H.S(e(i))))
         for i, j in product(range(n), repeat=2)),
        fmt,
    ))
    report.add(run_identity("antipode.unital", "S(1) = 1", [((), H.S(H.one()), H.one())], fmt))
    SS = lambda t: la.apply_leg(la.apply_leg(t, 0, lambda i: H.S(e(i))), 1, lambda i: H.S(e(i)))
    report.add(run_identity(
        "antipode.coalgebra_anti_homomorphism",
        "Δ∘S = (S⊗S)∘Δ^cop",
        (((labels[i],), H.delta(H.S(e(i))), SS(la.permute_legs(H.delta(e(i)), (1, 0)))) for i in range(n)),
        tfmt,
    ))
    report.add(run_identity(
        "antipode.counital",
        "ε∘S = ε",
        (((labels[i],), H.eps(H.S(e(i))), H.eps(e(i))) for i in range(n)),
    ))
    return report


def check_algebra_map(T: LinearMap, source, target, *, anti: Optional[bool] = None) -> VerificationReport:
    """Verify ``T: source → target`` is a unital algebra (anti-)homomorphism."""
    anti = T.anti if anti is None else anti
    if T.source_dim != source.dim or T.target_dim != target.dim:
        raise StructureError("map dimensions do not match its source and target")
    e = lambda i: {i: ONE}
    fmt = lambda v: la.format_vec(v, target.basis)
    report = VerificationReport()
    kind = "anti-homomorphism" if anti else "homomorphism"
    rhs = (lambda i, j: target.mul(T(e(j)), T(e(i)))) if anti else (lambda i, j: target.mul(T(e(i)), T(e(j))))
    report.add(run_identity(
        f"map.algebra_{kind}",
        "T(ab) = T(b)T(a)" if anti else "T(ab) = T(a)T(b)",
        (((source.basis[i], source.basis[j]), T(source.mul(e(i), e(j))), rhs(i, j))
         for i, j in product(range(source.dim), repeat=2)),
        fmt,
    ))
    report.add(run_identity("map.unital", "T(1) = 1", [((), T(source.one()), target.one())], fmt))
    return report


def check_coalgebra_map(T: LinearMap, source, target, *, anti: Optional[bool] = None) -> VerificationReport:
    """Verify ``T`` is a counital coalgebra (anti-)morphism."""
    anti = T.anti if anti is None else anti
    if T.source_dim != source.dim or T.target_dim != target.dim:
        raise StructureError("map dimensions do not match its source and target")
    e = lambda i: {i: ONE}
    tfmt = lambda t: la.format_vec(t, target.basis)
    TT = lambda t: la.apply_leg(la.apply_leg(t, 0, lambda i: T(e(i))), 1, lambda i: T(e(i)))
    report = VerificationReport()
    kind = "anti-morphism" if anti else "morphism"

    def rhs(i):
        d = source.delta(e(i))
        return TT(la.permute_legs(d, (1, 0)) if anti else d)

    report.add(run_identity(
        f"map.coalgebra_{kind}",
        "Δ'∘T = (T⊗T)∘Δ^cop" if anti else "Δ'∘T = (T⊗T)∘Δ",
        (((source.basis[i],), target.delta(T(e(i))), rhs(i)) for i in range(source.dim)),
        tfmt,
    ))
    report.add(run_identity(
        "map.counital",
        "ε'∘T = ε",
        (((source.basis[i],), target.eps(T(e(i))), source.eps(e(i))) for i in range(source.dim)),
    ))
    return report
