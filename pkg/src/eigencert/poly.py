"""Dense univariate polynomials over a scalar backend.

Coefficients are stored ascending ([c0, c1, ..., cn] is c0 + c1 x + ... +
cn x^n) with trailing zeros stripped; the zero polynomial keeps a single
zero coefficient and reports degree -1.  Exact-only operations (gcd,
square-free part, Sturm chains) refuse float backends instead of silently
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from eigencert import kernels
from eigencert.numerics import (
    EXACT,
    InternalConsistencyError,
    UnsupportedOperationError,
    check_same_backend,
)


class SquareFreeRequiredError(ValueError):
    """Repeated roots detected where a square-free polynomial is required."""


@dataclass(frozen=True)
class Poly:
    coeffs: tuple
    backend: object

    @staticmethod
    def from_coeffs(coeffs, backend) -> "Poly":
        vals = [backend.convert(c) for c in coeffs]
        return _strip(vals, backend)

    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree() < 0

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def eval(self, x):
        return kernels.horner_eval(self.coeffs, self.backend.convert(x))

    def derivative(self) -> "Poly":
        if len(self.coeffs) == 1:
            return Poly((self.backend.zero,), self.backend)
        vals = [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        return _strip(vals, self.backend)

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        lead = self.coeffs[-1]
        return Poly(tuple(c / lead for c in self.coeffs), self.backend)

    def reflected(self) -> "Poly":
        """p(-x): negate the odd-degree coefficients."""
        vals = [(-c if k % 2 else c) for k, c in enumerate(self.coeffs)]
        return _strip(vals, self.backend)

    def scaled(self, factor) -> "Poly":
        factor = self.backend.convert(factor)
        return _strip([c * factor for c in self.coeffs], self.backend)

    def deflated(self, root) -> "Poly":
        """Exact synthetic division by (x - root); root must be a root."""
        root = self.backend.convert(root)
        out = []
        acc = self.backend.zero
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        if rem != 0:
            raise ValueError(f"{root!r} is not a root; remainder {rem!r}")
        out.reverse()
        return _strip(out, self.backend)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs), self.backend)

    def __add__(self, other: "Poly") -> "Poly":
        check_same_backend(self.backend, other.backend)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        vals = list(a)
        for k in range(len(b)):
            vals[k] = vals[k] + b[k]
        return _strip(vals, self.backend)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        check_same_backend(self.backend, other.backend)
        if self.is_zero() or other.is_zero():
            return Poly((self.backend.zero,), self.backend)
        zero = self.backend.zero
        vals = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                vals[i + j] = vals[i + j] + a * b
        return _strip(vals, self.backend)


def _strip(vals: list, backend) -> Poly:
    while len(vals) > 1 and vals[-1] == 0:
        vals.pop()
    if not vals:
        vals = [backend.zero]
    return Poly(tuple(vals), backend)


def divmod_poly(num: Poly, den: Poly):
    """Quotient and remainder over the coefficient field."""
    check_same_backend(num.backend, den.backend)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot, rem = kernels.poly_divmod(list(num.coeffs), list(den.coeffs))
    return _strip(quot, num.backend), _strip(rem, num.backend)


def sign_variations(values) -> int:
    """Sign changes in a coefficient/value sequence, zeros dropped."""
    return kernels.sign_variations(list(values))


def cauchy_root_bound(p: Poly):
    """B with every (complex) root of p inside |z| <= B."""
    if p.degree() < 1:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(p.coeffs[-1])
    top = max(abs(c) for c in p.coeffs[:-1])
    return p.backend.one + top / lead


def _require_exact(p: Poly, what: str):
    if p.backend != EXACT:
        raise UnsupportedOperationError(
            f"{what} is exact-only; convert the input or use exact mode"
        )


def _int_coeffs(p: Poly) -> list:
    scale = lcm(*(c.denominator for c in p.coeffs))
    out = []
    for c in p.coeffs:
        v = c * scale
        out.append(int(v))
    return out


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of two exact polynomials (fraction-free internally)."""
    _require_exact(p, "gcd")
    check_same_backend(p.backend, q.backend)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    fa, fb = _int_coeffs(p), _int_coeffs(q)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while True:
        rem = kernels.int_prem_primitive(fa, fb)
        if not rem:
            return Poly.from_coeffs(fb, EXACT).monic()
        fa, fb = fb, rem


def square_free_part(p: Poly) -> Poly:
    """Monic polynomial with the same roots as p, all simple."""
    _require_exact(p, "square-free part")
    if p.degree() < 1:
        return p.monic()
    g = gcd(p, p.derivative())
    if g.degree() < 1:
        return p.monic()
    quot, rem = divmod_poly(p, g)
    if not rem.is_zero():
        raise InternalConsistencyError("gcd does not divide its input")
    return quot.monic()


@dataclass(frozen=True)
class SturmChain:
    polys: tuple


def sturm_chain(p: Poly) -> SturmChain:
    """Textbook Sturm chain p, p', -rem(...), ... for square-free exact p."""
    _require_exact(p, "Sturm chain")
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    polys = [p]
    if p.degree() >= 1:
        polys.append(p.derivative())
        while polys[-1].degree() >= 1:
            _, rem = divmod_poly(polys[-2], polys[-1])
            if rem.is_zero():
                raise SquareFreeRequiredError(
                    "polynomial has repeated roots; deflate with "
                    "square_free_part before building a Sturm chain"
                )
            polys.append(-rem)
    return SturmChain(tuple(polys))


def sturm_count(chain: SturmChain, a, b) -> int:
    """Number of real roots in (a, b]; endpoints must not be roots.

    With non-root endpoints the half-open and open counts coincide, which
    is how this is used everywhere in the package.
    """
    p = chain.polys[0]
    a = p.backend.convert(a)
    b = p.backend.convert(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.eval(a) == 0 or p.eval(b) == 0:
        raise ValueError("Sturm count endpoint is a root")
    va = kernels.sign_variations([q.eval(a) for q in chain.polys])
    vb = kernels.sign_variations([q.eval(b) for q in chain.polys])
    return va - vb


def sturm_count_all(chain: SturmChain) -> int:
    """Total number of distinct real roots (count over (-inf, +inf))."""
    neg_signs = []
    pos_signs = []
    for q in chain.polys:
        lead = q.coeffs[-1]
        deg = q.degree()
        if deg < 0:
            continue
        pos_signs.append(lead)
        neg_signs.append(lead if deg % 2 == 0 else -lead)
    return kernels.sign_variations(neg_signs) - kernels.sign_variations(pos_signs)
