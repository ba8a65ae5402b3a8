"""Hermite quadratic forms attached to a polynomial, and their signatures.

For monic p of degree n with roots z_1..z_n (with multiplicity), the
Hermite matrix of a weight polynomial q is

    H_q[i][j] = sum_k q(z_k) z_k^(i+j-2)     (1-based i, j),

a symmetric n x n matrix computable from p's coefficients alone: H_1 is
the Hankel matrix of the Newton power sums, and H_q = H_1 q(C) for C the
companion matrix of p.  Its signature counts real roots weighted by the
sign of q, which is what turns sign tests into interval certificates:
sigma(H_1) is the number of distinct real roots, and sigma(H_q) differs
from it exactly when q takes negative values on some real root.

Signatures are computed from the characteristic polynomial of the form
(Descartes' rule is exact for a symmetric matrix's spectrum); exact mode
switches to fraction-free symmetric inertia above a degree threshold where
big-integer Faddeev-Leverrier stops being economical, and float mode runs
an independent LDL inertia as a cross-check, refusing to answer when the
two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from eigencert import kernels
from eigencert.numerics import (
    EXACT,
    InternalConsistencyError,
    PrecisionExhaustedError,
    check_same_backend,
)
from eigencert.charpoly import (
    SquareMatrix,
    charpoly,
    cleared_int_rows,
    faddeev_leverrier,
)
from eigencert.poly import Poly

# Above this degree, exact signatures come from Bareiss inertia instead of
# Descartes on an exact charpoly; both are certificates, the charpoly route
# just grows a factor ~n faster in big-integer work.
SIGNATURE_CHARPOLY_MAX_DEGREE = 12


@dataclass
class HermiteForm:
    poly: Poly
    q: Poly
    matrix: SquareMatrix
    _signature: int | None = field(default=None, repr=False, compare=False)


def power_sums(p: Poly, m: int) -> list:
    """Newton power sums S_0..S_m of the roots of monic p (degree >= 1)."""
    if p.degree() < 1:
        raise ValueError("power sums need degree >= 1")
    if not p.is_monic():
        raise ValueError("power sums need a monic polynomial")
    return kernels.power_sums(p.coeffs, m)


def companion(p: Poly) -> SquareMatrix:
    """Companion matrix: ones on the subdiagonal, -coefficients last column."""
    n = p.degree()
    if n < 1 or not p.is_monic():
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    zero = p.backend.zero
    rows = []
    for i in range(n):
        row = [zero] * n
        if i > 0:
            row[i - 1] = p.backend.one
        row[n - 1] = -p.coeffs[i]
        rows.append(tuple(row))
    return SquareMatrix(tuple(rows), p.backend)


def apply_poly(q: Poly, m: SquareMatrix) -> SquareMatrix:
    """q(M) by Horner's rule on matrices (cross-check path, O(d n^3))."""
    check_same_backend(q.backend, m.backend)
    n = m.n
    zero = m.backend.zero
    acc = [[zero] * n for _ in range(n)]
    top = q.coeffs[-1]
    for i in range(n):
        acc[i][i] = top
    rows = [list(r) for r in m.rows]
    for k in range(len(q.coeffs) - 2, -1, -1):
        acc = kernels.mat_mul(acc, rows)
        ck = q.coeffs[k]
        for i in range(n):
            acc[i][i] = acc[i][i] + ck
    return SquareMatrix(tuple(tuple(r) for r in acc), m.backend)


def hermite_base(p: Poly) -> HermiteForm:
    """H_1: the Hankel matrix of power sums S_0..S_{2n-2}."""
    n = p.degree()
    sums = power_sums(p, 2 * n - 2)
    rows = tuple(tuple(sums[i + j] for j in range(n)) for i in range(n))
    one_poly = Poly.from_coeffs([p.backend.one], p.backend)
    return HermiteForm(p, one_poly, SquareMatrix(rows, p.backend))


def _last_col(p: Poly) -> list:
    return [-c for c in p.coeffs[: p.degree()]]


def hermite_weighted(base: HermiteForm, q: Poly) -> HermiteForm:
    """H_q = H_1 q(C) via companion column shifts, O(deg(q) n^2).

    Float mode symmetrizes the product and refuses (internal-consistency
    error) if the asymmetry exceeds 2^(-bits/2) relative to the largest
    entry - at that point the working precision cannot support the test.
    """
    p = base.poly
    check_same_backend(p.backend, q.backend)
    raw = kernels.hermite_product(
        [list(r) for r in base.matrix.rows], list(q.coeffs), _last_col(p)
    )
    n = len(raw)
    backend = p.backend
    if backend == EXACT:
        for i in range(n):
            for j in range(i + 1, n):
                if raw[i][j] != raw[j][i]:
                    raise InternalConsistencyError("Hermite product is not symmetric")
    else:
        ctx = backend.ctx
        biggest = ctx.zero
        asym = ctx.zero
        for i in range(n):
            for j in range(i, n):
                mag = abs(raw[i][j])
                if mag > biggest:
                    biggest = mag
                if j > i:
                    gap = abs(raw[i][j] - raw[j][i])
                    if gap > asym:
                        asym = gap
        if biggest > 0 and asym > ctx.ldexp(biggest, -(backend.bits // 2)):
            raise InternalConsistencyError(
                "Hermite product asymmetry exceeds precision budget; "
                "raise --bits or use exact mode"
            )
        half = ctx.convert("0.5")
        for i in range(n):
            for j in range(i + 1, n):
                avg = (raw[i][j] + raw[j][i]) * half
                raw[i][j] = avg
                raw[j][i] = avg
    mat = SquareMatrix(tuple(tuple(r) for r in raw), backend)
    return HermiteForm(p, q, mat)


def descartes_signature(char: Poly) -> int:
    """V(p_H(x)) - V(p_H(-x)): #positive - #negative roots, all roots real."""
    return kernels.sign_variations(char.coeffs) - kernels.sign_variations(
        char.reflected().coeffs
    )


def inertia(m: SquareMatrix):
    """(n+, n-, n0) of a symmetric matrix by congruence elimination."""
    if not m.is_symmetric():
        raise ValueError("inertia needs a symmetric matrix")
    if m.backend == EXACT:
        rows, _ = cleared_int_rows(m)  # positive scaling preserves inertia
        return kernels.bareiss_inertia(rows)
    return kernels.ldl_inertia([list(r) for r in m.rows])


def signature(form: HermiteForm) -> int:
    """sigma(H_q) = (#positive - #negative eigenvalues), cached on the form."""
    if form._signature is None:
        form._signature = _signature_of(form.matrix)
    return form._signature


def _signature_of(m: SquareMatrix) -> int:
    if m.backend == EXACT:
        if m.n <= SIGNATURE_CHARPOLY_MAX_DEGREE:
            return descartes_signature(faddeev_leverrier(m))
        pos, neg, _ = inertia(m)
        return pos - neg
    by_charpoly = descartes_signature(charpoly(m))
    pos, neg, _ = inertia(m)
    if by_charpoly != pos - neg:
        raise PrecisionExhaustedError(
            f"signature methods disagree ({by_charpoly} vs {pos - neg}); "
            "raise --bits or use exact mode"
        )
    return by_charpoly
