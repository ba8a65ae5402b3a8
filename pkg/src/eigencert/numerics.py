"""Scalar backends: exact rationals and fixed-precision binary floats.

Every number handled by this package belongs to exactly one backend:

* the exact backend works in ``fractions.Fraction`` and never rounds;
* a float backend works in an mpmath context pinned to ``bits`` bits of
  precision (one shared context per precision, so values from two float
  backends with the same ``bits`` are interchangeable).

Containers (polynomials, matrices, certification contexts) carry their
backend and refuse to mix scalars from another one: silent coercion between
exact and rounded arithmetic is precisely the failure mode this package
exists to rule out.  Decimal text is converted to a float scalar with a
single correct rounding, never through an intermediate double.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from mpmath import libmp
from mpmath.ctx_mp import MPContext

try:
    from gmpy2 import mpz as _fast_int
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _fast_int = int

MIN_BITS = 64
DEFAULT_BITS = 256


class ParseError(ValueError):
    """Malformed numeric literal or malformed matrix input."""


class BackendMismatchError(TypeError):
    """Scalars from different backends were combined."""


class UnsupportedOperationError(RuntimeError):
    """Operation is meaningless on this backend (e.g. float-mode gcd)."""


class PrecisionExhaustedError(ArithmeticError):
    """Float-mode results disagree between independent methods.

    The computation is not wrong, it is undecidable at the working precision;
    callers should retry with more bits or in exact mode.
    """


class InternalConsistencyError(ArithmeticError):
    """An internal invariant failed; indicates a bug or hopeless rounding."""


# Optional sign, digits with optional fractional part, optional exponent.
_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal literal into an exact rational.

    Accepts integer and finite decimal literals with optional sign and
    optional exponent ("3", "-0.625", "1e-7").  Anything else (including
    inf/nan and fraction syntax) raises ParseError naming the token.
    """
    token = text.strip()
    if not _DECIMAL_RE.fullmatch(token):
        raise ParseError(f"not a decimal literal: {text!r}")
    return Fraction(token)


class ExactBackend:
    """Arithmetic in arbitrary-precision rationals."""

    kind = "exact"
    bits = None

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, value) -> Fraction:
        """Coerce value (int, Fraction, decimal string) to an exact scalar.

        Binary floats are refused: the caller has already rounded and we
        cannot know to what; feed decimal strings instead.
        """
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return parse_decimal(value)
        if isinstance(value, float):
            raise ParseError(
                f"refusing binary float {value!r} in exact mode; "
                "pass a decimal string instead"
            )
        raise ParseError(f"cannot convert {value!r} to an exact scalar")

    def owns(self, value) -> bool:
        return isinstance(value, Fraction)

    def to_text(self, value) -> str:
        return str(value)

    def __repr__(self):
        return "ExactBackend()"

    def __eq__(self, other):
        return isinstance(other, ExactBackend)

    def __hash__(self):
        return hash("exact")


class FloatBackend:
    """Arithmetic in binary floats with a fixed mantissa size."""

    kind = "float"

    def __init__(self, bits: int):
        if bits < MIN_BITS:
            raise ValueError(f"float backend needs >= {MIN_BITS} bits, got {bits}")
        self.bits = bits
        ctx = MPContext()
        ctx.prec = bits
        self.ctx = ctx
        # Digits needed so that to_text/parse round-trips exactly.
        self.repr_digits = int(bits / 3.3219280948873626) + 3

    @property
    def zero(self):
        return self.ctx.zero

    @property
    def one(self):
        return self.ctx.one

    def from_fraction(self, value: Fraction):
        """Correctly rounded conversion of an exact rational."""
        raw = libmp.from_rational(
            value.numerator, value.denominator, self.bits, libmp.round_nearest
        )
        return self.ctx.make_mpf(raw)

    def convert(self, value):
        if self.owns(value):
            return value
        if isinstance(value, int):
            return self.from_fraction(Fraction(value))
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, str):
            return self.from_fraction(parse_decimal(value))
        if isinstance(value, float):
            # Doubles are exact binary rationals; widening them is lossless.
            return self.from_fraction(Fraction(value))
        raise ParseError(f"cannot convert {value!r} to a float scalar")

    def owns(self, value) -> bool:
        return isinstance(value, self.ctx.mpf)

    def to_text(self, value) -> str:
        return self.ctx.nstr(value, self.repr_digits, strip_zeros=True)

    def __repr__(self):
        return f"FloatBackend(bits={self.bits})"

    def __eq__(self, other):
        return isinstance(other, FloatBackend) and other.bits == self.bits

    def __hash__(self):
        return hash(("float", self.bits))


EXACT = ExactBackend()


@lru_cache(maxsize=None)
def float_backend(bits: int = DEFAULT_BITS) -> FloatBackend:
    """Shared FloatBackend for the given precision."""
    return FloatBackend(bits)


def to_float(value, bits: int = DEFAULT_BITS):
    """Round an exact rational (or int) to an mpmath float, correctly."""
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise BackendMismatchError(f"to_float expects an exact value, got {value!r}")
    return float_backend(bits).from_fraction(value)


def exact_value(value) -> Fraction:
    """Exact rational value of a scalar from either backend.

    Binary floats (mpf) are exact dyadic rationals, so this never rounds.
    Useful for cross-backend comparisons in tests and the SVG projector.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    mpf_tuple = getattr(value, "_mpf_", None)
    if mpf_tuple is not None:
        sign, man, exp, _ = mpf_tuple
        if man == 0:
            if exp != 0:
                raise BackendMismatchError(f"non-finite float {value!r}")
            return Fraction(0)
        frac = Fraction(int(man)) * Fraction(2) ** exp
        return -frac if sign else frac
    raise BackendMismatchError(f"no exact value for {value!r}")


def check_same_backend(backend, *others):
    """Raise BackendMismatchError unless all backends are equal."""
    for other in others:
        if other != backend:
            raise BackendMismatchError(f"mixed backends: {backend!r} vs {other!r}")
    return backend


def fast_int(value):
    """Cast a Python int to the fastest available big-integer type."""
    return _fast_int(value)
