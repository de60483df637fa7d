"""Exact factorization of singular matrices into two nilpotent matrices."""

from .errors import (
    CertificateError,
    DimensionMismatch,
    ExceptionalCase,
    FieldMismatch,
    NilfactorError,
    NotNilpotent,
    NotSingular,
    ParseError,
    SquareZero,
)
from .factorizer import Certificate, Factorization, Route, factor, is_factorable
from .field import GF, QQ, FieldScalar, parse_field
from .forensics import ForensicReport, Verdict, check_sourour_projection_flaw, check_wu_counterexample
from .matrix import Matrix
from .matrixfile import format_text, parse_matrix
from .sourour import SourourForm, sourour_form

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "DimensionMismatch",
    "ExceptionalCase",
    "FieldMismatch",
    "NilfactorError",
    "NotNilpotent",
    "NotSingular",
    "ParseError",
    "SquareZero",
    "Certificate",
    "Factorization",
    "Route",
    "factor",
    "is_factorable",
    "GF",
    "QQ",
    "FieldScalar",
    "parse_field",
    "ForensicReport",
    "Verdict",
    "check_sourour_projection_flaw",
    "check_wu_counterexample",
    "Matrix",
    "format_text",
    "parse_matrix",
    "SourourForm",
    "sourour_form",
]
