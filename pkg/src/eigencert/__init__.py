"""Certified real-eigenvalue localization.

Computes intervals that provably contain every real eigenvalue of a real
square matrix: Gershgorin disks bound the spectrum, Hermite-form signature
tests certify which regions actually touch the real spectrum, and certified
bisection narrows them to any requested width.  Works in exact rational
arithmetic or at a chosen binary float precision.
"""

from eigencert.charpoly import SquareMatrix, charpoly
from eigencert.cli import run
from eigencert.localize import CertificationContext, certify_interval, locate
from eigencert.numerics import (
    DEFAULT_BITS,
    EXACT,
    BackendMismatchError,
    InternalConsistencyError,
    ParseError,
    PrecisionExhaustedError,
    UnsupportedOperationError,
    float_backend,
    parse_decimal,
    to_float,
)
from eigencert.poly import Poly
from eigencert.refine import refine_all, refine_interval

__version__ = "0.1.0"

__all__ = [
    "BackendMismatchError",
    "CertificationContext",
    "DEFAULT_BITS",
    "EXACT",
    "InternalConsistencyError",
    "ParseError",
    "Poly",
    "PrecisionExhaustedError",
    "SquareMatrix",
    "UnsupportedOperationError",
    "__version__",
    "certify_interval",
    "charpoly",
    "float_backend",
    "locate",
    "parse_decimal",
    "refine_all",
    "refine_interval",
    "run",
    "to_float",
]
