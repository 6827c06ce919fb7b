"""Exact verification of Rota-Baxter and Yang-Baxter style structures.

Everything is represented by structure constants over the field of rational
functions in declared parameters; all checks decide identities for all
parameter values at once by testing that residual scalars are identically
zero.
"""

from .errors import (
    BadPermutation,
    CorpusIntegrityError,
    DivisionByZero,
    MissingCounit,
    MissingUnit,
    NotCoalgebraMap,
    ParameterDependentRank,
    ParseError,
    PreconditionFailed,
    RbxError,
    ShapeMismatch,
    UnknownParameter,
)
from .scalar import ParamRing, Poly, Scalar, parse_scalar

__all__ = [
    "BadPermutation",
    "CorpusIntegrityError",
    "DivisionByZero",
    "MissingCounit",
    "MissingUnit",
    "NotCoalgebraMap",
    "ParamRing",
    "ParameterDependentRank",
    "ParseError",
    "Poly",
    "PreconditionFailed",
    "RbxError",
    "Scalar",
    "ShapeMismatch",
    "UnknownParameter",
    "parse_scalar",
]
