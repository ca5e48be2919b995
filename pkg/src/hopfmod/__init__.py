"""Exact verification of finite-dimensional Hopf algebras and the structures built on them.

Modules, comodules, Yetter-Drinfeld modules and their braidings, free
covariant bimodules with their duals, and first-order differential calculi;
every identity is checked exhaustively on basis elements over ℚ or ℚ(q).
"""

__version__ = "0.1.0"

from .algebra import (
    BialgebraData,
    FinAlgebra,
    FinCoalgebra,
    HopfAlgebraData,
    LinearMap,
    co_opposite,
    iterated_comultiply,
    op_cop,
    opposite,
    verify,
)
from .catalog import get_algebra
from .report import Check, StructureError, VerificationFailed, VerificationReport
from .scalars import RationalFunction, format_scalar, parse_scalar

__all__ = [
    "__version__",
    "BialgebraData",
    "FinAlgebra",
    "FinCoalgebra",
    "HopfAlgebraData",
    "LinearMap",
    "co_opposite",
    "iterated_comultiply",
    "op_cop",
    "opposite",
    "verify",
    "get_algebra",
    "Check",
    "StructureError",
    "VerificationFailed",
    "VerificationReport",
    "RationalFunction",
    "format_scalar",
    "parse_scalar",
]
