"""Sparse vectors, sparse tensors and dense exact matrices.

A vector is a ``dict[int, Scalar]`` and a tensor a ``dict[tuple[int, ...], Scalar]``;
neither ever stores a zero coefficient, so ``==`` decides equality.  Matrices
are tuples of row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .scalars import Scalar, format_scalar

Vec = dict
Tensor = dict
Matrix = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def clean(v: Mapping) -> dict:
    return {k: c for k, c in v.items() if c != 0}


def vadd(*vs: Mapping) -> dict:
    out: dict = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, ZERO) + c
    return clean(out)


def vsub(a: Mapping, b: Mapping) -> dict:
    return vadd(a, vscale(b, -ONE))


def vscale(v: Mapping, c: Scalar) -> dict:
    if c == 0:
        return {}
    return clean({k: x * c for k, x in v.items()})


def vsum(vs: Iterable[Mapping]) -> dict:
    out: dict = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, ZERO) + c
    return clean(out)


def accumulate(out: dict, key, c: Scalar) -> None:
    """In-place ``out[key] += c``; call :func:`clean` when done."""
    if c != 0:
        out[key] = out.get(key, ZERO) + c


def basis_vector(i: int) -> dict:
    return {i: ONE}


def dense(v: Mapping, dim: int) -> list:
    return [v.get(i, ZERO) for i in range(dim)]


def sparse(values: Sequence) -> dict:
    return clean({i: c for i, c in enumerate(values)})


def tensor_product(*vs: Mapping) -> dict:
    """Outer product of vectors (or tensors); keys are flattened tuples."""
    out: dict = {(): ONE}
    for v in vs:
        nxt: dict = {}
        for k1, c1 in out.items():
            for k2, c2 in v.items():
                key = k1 + (k2 if isinstance(k2, tuple) else (k2,))
                accumulate(nxt, key, c1 * c2)
        out = nxt
    return clean(out)


def apply_leg(t: Mapping, leg: int, f: Callable[[int], Mapping]) -> dict:
    """Apply a linear map (given on basis indices) to one tensor leg.

    ``f(i)`` returns a vector or tensor; its keys replace the index at ``leg``.
    """
    out: dict = {}
    for key, c in t.items():
        for k2, c2 in f(key[leg]).items():
            k2 = k2 if isinstance(k2, tuple) else (k2,)
            accumulate(out, key[:leg] + k2 + key[leg + 1:], c * c2)
    return clean(out)


def permute_legs(t: Mapping, perm: Sequence[int]) -> dict:
    """New tensor whose leg ``j`` is old leg ``perm[j]``."""
    return {tuple(key[p] for p in perm): c for key, c in t.items()}


def format_vec(v: Mapping, names: Sequence[str] | Callable | None = None) -> str:
    if not v:
        return "0"
    parts = []
    for key in sorted(v, key=lambda k: k if isinstance(k, tuple) else (k,)):
        c = v[key]
        idx = key if isinstance(key, tuple) else (key,)
        if names is None:
            label = "⊗".join(f"e{i}" for i in idx)
        elif callable(names):
            label = names(idx)
        else:
            label = "⊗".join(names[i] for i in idx)
        cs = format_scalar(c)
        if cs == "1":
            parts.append(label)
        elif cs == "-1":
            parts.append(f"-{label}")
        else:
            if " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{label}")
    return " + ".join(parts).replace("+ -", "- ")


# -- dense matrices ----------------------------------------------------------

def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out_row = []
        for j in range(cols):
            s = ZERO
            for k, x in enumerate(row):
                if x != 0:
                    y = b[k][j]
                    if y != 0:
                        s = s + x * y
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(a: Matrix, c: Scalar) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matvec(a: Matrix, v: Mapping) -> dict:
    out: dict = {}
    for k, c in v.items():
        for i in range(len(a)):
            accumulate(out, i, a[i][k] * c)
    return clean(out)


def column(a: Matrix, k: int) -> dict:
    return clean({i: a[i][k] for i in range(len(a))})


def from_columns(cols: Sequence[Mapping], rows: int) -> Matrix:
    return tuple(tuple(c.get(i, ZERO) for c in cols) for i in range(rows))


def kron(a: Matrix, b: Matrix) -> Matrix:
    rb, cb = len(b), len(b[0]) if b else 0
    return tuple(
        tuple(a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(len(a[0]) * cb))
        for i in range(len(a) * rb)
    )


def rref(a: Matrix) -> tuple[list[list], list[int]]:
    m = [list(r) for r in a]
    pivots: list[int] = []
    row = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1]) if a else 0


def inverse(a: Matrix) -> Matrix | None:
    """Exact inverse by Gauss-Jordan elimination, ``None`` if singular."""
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("inverse of a non-square matrix")
    aug = tuple(tuple(a[i]) + identity(n)[i] for i in range(n))
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return tuple(tuple(m[i][n:]) for i in range(n))


def solve(a: Matrix, b: Sequence) -> list | None:
    """One solution of ``a x = b`` (free variables set to zero), or ``None``."""
    ncols = len(a[0]) if a else 0
    aug = tuple(tuple(a[i]) + (b[i],) for i in range(len(a)))
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, col in enumerate(pivots):
        x[col] = m[r][ncols]
    return x


def format_matrix(a: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in a]
