"""Independent slow paths used to check the fast ones.

Nothing here shares code with the production pipeline: the characteristic
polynomial comes from cofactor expansion instead of trace recurrences, root
counting and isolation come from Sturm chains instead of Hermite signatures,
and the dense eigensolver is mpmath's QR iteration.  Tests hold the two
sides against each other.
"""

from __future__ import annotations

from eigencert.charpoly import SquareMatrix
from eigencert.numerics import EXACT
from eigencert.poly import (
    Poly,
    cauchy_root_bound,
    square_free_part,
    sturm_chain,
    sturm_count,
)


class OracleError(RuntimeError):
    """The reference computation itself failed (e.g. QR did not converge)."""


def naive_charpoly(m: SquareMatrix) -> Poly:
    """det(xI - A) by cofactor expansion over polynomial entries.

    Exponential-with-memo (about n 2^n polynomial terms); fine for the
    n <= 8 matrices it is used on, and entirely independent of the
    Faddeev-Leverrier / La Budde routes.
    """
    n = m.n
    backend = m.backend
    one = Poly.from_coeffs([backend.one], backend)
    entries = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                entries[i, j] = Poly.from_coeffs([-m.rows[i][j], backend.one], backend)
            else:
                entries[i, j] = Poly.from_coeffs([-m.rows[i][j]], backend)
    memo = {(): one}

    def det(cols):
        try:
            return memo[cols]
        except KeyError:
            pass
        row = n - len(cols)
        acc = None
        for idx, col in enumerate(cols):
            e = entries[row, col]
            if e.is_zero():
                continue
            term = e * det(cols[:idx] + cols[idx + 1 :])
            if idx % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = Poly.from_coeffs([backend.zero], backend)
        memo[cols] = acc
        return acc

    return det(tuple(range(n)))


def sturm_isolate_roots(p: Poly, eps) -> list:
    """Disjoint intervals of width <= eps, one per real root of p.

    Exact backend, square-free p.  Plain Sturm bisection inside the Cauchy
    bound; a midpoint that is a root becomes the zero-width interval
    [m, m] and the remaining roots are isolated on the deflated quotient.
    """
    if p.backend != EXACT:
        raise ValueError("root isolation is exact-only")
    eps = p.backend.convert(eps)
    if not eps > 0:
        raise ValueError("epsilon must be positive")
    bound = cauchy_root_bound(p.monic()) + 1

    def isolate(poly, lo, hi):
        chain = sturm_chain(poly)
        found = []

        def walk(a, b):
            count = sturm_count(chain, a, b)
            if count == 0:
                return
            if count == 1 and b - a <= eps:
                found.append((a, b))
                return
            mid = (a + b) / 2
            if poly.eval(mid) == 0:
                found.append((mid, mid))
                rest = poly.deflated(mid)
                if rest.degree() >= 1:
                    found.extend(isolate(rest, a, b))
                return
            walk(a, mid)
            walk(mid, b)

        walk(lo, hi)
        return found

    roots = isolate(p.monic(), -bound, bound)
    roots.sort()
    return roots


def sturm_count_closed(p: Poly, lo, hi) -> int:
    """Exact number of distinct real roots in the closed interval [lo, hi].

    Handles root endpoints (where a raw Sturm count is undefined) by
    exact deflation, so tests can interrogate any interval the pipeline
    emits, including point intervals.
    """
    if p.backend != EXACT:
        raise ValueError("closed-interval counting is exact-only")
    lo = p.backend.convert(lo)
    hi = p.backend.convert(hi)
    if hi < lo:
        raise ValueError("need lo <= hi")
    work = square_free_part(p)
    extra = 0
    for endpoint in {lo, hi}:
        if work.eval(endpoint) == 0:
            extra += 1
            work = work.deflated(endpoint)
    if lo == hi or work.degree() < 1:
        return extra
    return extra + sturm_count(sturm_chain(work), lo, hi)


def reference_eigensolve(m: SquareMatrix) -> list:
    """All eigenvalues by mpmath QR iteration (float backend).

    Returns mpmath complex numbers in no particular order.  This is the
    bought reference path; convergence failures surface as OracleError.
    """
    backend = m.backend
    if backend == EXACT:
        raise ValueError("reference eigensolver runs on the float backend")
    ctx = backend.ctx
    mat = ctx.matrix([[v for v in row] for row in m.rows])
    try:
        eigenvalues = ctx.eig(mat, left=False, right=False)
    except (RuntimeError, ZeroDivisionError) as exc:
        raise OracleError(f"QR iteration failed: {exc}") from exc
    return list(eigenvalues)


def real_eigenvalues(m: SquareMatrix, imag_cut=None) -> list:
    """Sorted real parts of eigenvalues whose imaginary part is tiny.

    imag_cut defaults to 2^(-bits/2) * (1 + max |eigenvalue|); good enough
    for test comparisons, carries no certificate (that is the point of the
    rest of the package).
    """
    backend = m.backend
    ctx = backend.ctx
    values = reference_eigensolve(m)
    if imag_cut is None:
        biggest = max((abs(v) for v in values), default=ctx.zero)
        imag_cut = ctx.ldexp(1 + biggest, -(backend.bits // 2))
    reals = [ctx.re(v) for v in values if abs(ctx.im(v)) <= imag_cut]
    return sorted(reals)
