"""Square matrices and their characteristic polynomials.

Two routes, one per backend.  Exact: Faddeev-Leverrier after clearing
denominators, so the whole computation runs in (big) integers and the
result is exact.  Float: Householder reduction to upper Hessenberg form
followed by the La Budde recurrence, which is the numerically trustworthy
way to get coefficients at fixed precision.  Both return monic ascending
polynomials equal to det(xI - A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from eigencert import kernels
from eigencert.numerics import (
    EXACT,
    UnsupportedOperationError,
    check_same_backend,
    fast_int,
)
from eigencert.poly import Poly


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple
    backend: object

    @staticmethod
    def from_rows(rows, backend) -> "SquareMatrix":
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must be nonempty")
        conv = []
        for row in rows:
            if len(row) != n:
                raise ValueError(
                    f"matrix must be square; row of length {len(row)} "
                    f"in a matrix with {n} rows"
                )
            conv.append(tuple(backend.convert(v) for v in row))
        return SquareMatrix(tuple(conv), backend)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "SquareMatrix":
        n = self.n
        return SquareMatrix(
            tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(n)),
            self.backend,
        )

    def matmul(self, other: "SquareMatrix") -> "SquareMatrix":
        check_same_backend(self.backend, other.backend)
        prod = kernels.mat_mul([list(r) for r in self.rows], [list(r) for r in other.rows])
        return SquareMatrix(tuple(tuple(r) for r in prod), self.backend)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(
            self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n)
        )


@dataclass(frozen=True)
class HessenbergForm:
    matrix: SquareMatrix
    alphas: tuple  # diagonal
    betas: tuple  # subdiagonal, betas[j] = H[j+1][j]


def cleared_int_rows(m: SquareMatrix):
    """(D*A as big-int rows, D) for exact A; D = lcm of all denominators."""
    denom = 1
    for row in m.rows:
        for v in row:
            denom = lcm(denom, v.denominator)
    rows = [[fast_int(int(v * denom)) for v in row] for row in m.rows]
    return rows, denom


def faddeev_leverrier(m: SquareMatrix) -> Poly:
    """Characteristic polynomial by trace recursion; exact for exact input.

    On the exact backend the matrix is scaled to integers first (roots
    scale by D, coefficient k by D^(n-k)), keeping every step in integer
    arithmetic.  On the float backend this runs directly and is only a
    diagnostic - use charpoly() for the stable route.
    """
    if m.backend == EXACT:
        rows, denom = cleared_int_rows(m)
        raw = kernels.fl_charpoly_int(rows)
        n = m.n
        coeffs = [Fraction(int(raw[k]), denom ** (n - k)) for k in range(n + 1)]
        return Poly.from_coeffs(coeffs, EXACT)
    raw = kernels.fl_charpoly([list(r) for r in m.rows])
    return Poly.from_coeffs(raw, m.backend)


def hessenberg_reduce(m: SquareMatrix) -> HessenbergForm:
    """Orthogonal (Householder) reduction to upper Hessenberg form."""
    if m.backend == EXACT:
        raise UnsupportedOperationError(
            "Hessenberg reduction needs square roots; use the float backend"
        )
    ctx = m.backend.ctx
    n = m.n
    h = [list(row) for row in m.rows]
    for k in range(n - 2):
        norm2 = ctx.zero
        for i in range(k + 1, n):
            norm2 = norm2 + h[i][k] * h[i][k]
        if norm2 == 0:
            continue
        norm = ctx.sqrt(norm2)
        alpha = -norm if h[k + 1][k] >= 0 else norm
        v = [h[i][k] for i in range(k + 1, n)]
        v[0] = v[0] - alpha
        vnorm2 = ctx.zero
        for t in range(len(v)):
            vnorm2 = vnorm2 + v[t] * v[t]
        if vnorm2 == 0:
            continue
        two = ctx.convert(2)
        for j in range(k, n):
            s = ctx.zero
            for t in range(len(v)):
                s = s + v[t] * h[k + 1 + t][j]
            f = two * s / vnorm2
            if f == 0:
                continue
            for t in range(len(v)):
                h[k + 1 + t][j] = h[k + 1 + t][j] - f * v[t]
        for i in range(n):
            s = ctx.zero
            for t in range(len(v)):
                s = s + h[i][k + 1 + t] * v[t]
            f = two * s / vnorm2
            if f == 0:
                continue
            for t in range(len(v)):
                h[i][k + 1 + t] = h[i][k + 1 + t] - f * v[t]
        h[k + 1][k] = alpha
        for i in range(k + 2, n):
            h[i][k] = ctx.zero
    for i in range(n):
        for j in range(i - 1):
            h[i][j] = ctx.zero
    mat = SquareMatrix(tuple(tuple(r) for r in h), m.backend)
    alphas = tuple(h[i][i] for i in range(n))
    betas = tuple(h[i + 1][i] for i in range(n - 1))
    return HessenbergForm(mat, alphas, betas)


def labudde(hf: HessenbergForm) -> Poly:
    """Characteristic polynomial of a Hessenberg form via La Budde."""
    raw = kernels.labudde_charpoly(
        list(hf.alphas), list(hf.betas), [list(r) for r in hf.matrix.rows]
    )
    return Poly.from_coeffs(raw, hf.matrix.backend)


def charpoly(m: SquareMatrix) -> Poly:
    """det(xI - A), monic ascending, by the backend-appropriate route."""
    if m.backend == EXACT:
        return faddeev_leverrier(m)
    return labudde(hessenberg_reduce(m))
