# cython: language_level=3
"""Compiled arithmetic kernels; behavioral twin of _kernels_py.

Scalars stay Python objects (Fraction / int / mpz / mpf) - the win is
stripping interpreter overhead from the loop structure, not changing the
arithmetic.  Any edit here must be mirrored in _kernels_py.py; the test
suite runs both implementations against each other.
"""


def horner_eval(coeffs, x):
    """Evaluate a polynomial at x by Horner's rule."""
    cdef Py_ssize_t k
    acc = coeffs[len(coeffs) - 1]
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * x + coeffs[k]
    return acc


def sign_variations(values):
    """Number of sign changes in a sequence, zeros dropped."""
    cdef int count = 0
    cdef int last = 0
    cdef int s
    for v in values:
        if v == 0:
            continue
        s = -1 if v < 0 else 1
        if last != 0 and s != last:
            count += 1
        last = s
    return count


def poly_divmod(num, den):
    """Quotient and remainder of polynomial division over a field."""
    cdef Py_ssize_t dlen, top, shift, k
    num = list(num)
    while num and num[len(num) - 1] == 0:
        num.pop()
    dlen = len(den)
    while dlen and den[dlen - 1] == 0:
        dlen -= 1
    if dlen == 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[dlen - 1]
    if len(num) < dlen:
        return [], num
    quot = [num[0] * 0] * (len(num) - dlen + 1)
    for top in range(len(num) - 1, dlen - 2, -1):
        c = num[top]
        if c == 0:
            continue
        q = c / lead
        shift = top - (dlen - 1)
        quot[shift] = q
        for k in range(dlen):
            num[shift + k] = num[shift + k] - q * den[k]
    rem = num[: dlen - 1]
    while rem and rem[len(rem) - 1] == 0:
        rem.pop()
    return quot, rem


def power_sums(coeffs, m):
    """Power sums S[0..m] of the roots of a monic polynomial."""
    cdef Py_ssize_t n = len(coeffs) - 1
    cdef Py_ssize_t k, j
    one = coeffs[n]
    sums = [one * n]
    for k in range(1, m + 1):
        if k <= n:
            acc = coeffs[n - k] * (-k)
            for j in range(1, k):
                acc = acc - coeffs[n - j] * sums[k - j]
        else:
            acc = coeffs[n - 1] * sums[k - 1] * (-1)
            for j in range(2, n + 1):
                acc = acc - coeffs[n - j] * sums[k - j]
        sums.append(acc)
    return sums


def mat_mul(a, b):
    """Dense matrix product of two square row-major matrices."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    out = []
    for i in range(n):
        arow = a[i]
        row = []
        for j in range(n):
            acc = arow[0] * b[0][j]
            for k in range(1, n):
                acc = acc + arow[k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def fl_charpoly_int(rows):
    """Characteristic polynomial of an integer matrix, ascending and monic."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, k
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [list(r) for r in rows]
    tr = work[0][0]
    for i in range(1, n):
        tr = tr + work[i][i]
    coeffs[n - 1] = -tr
    for k in range(2, n + 1):
        shift = coeffs[n - k + 1]
        for i in range(n):
            work[i][i] = work[i][i] + shift
        work = mat_mul(rows, work)
        tr = work[0][0]
        for i in range(1, n):
            tr = tr + work[i][i]
        coeffs[n - k] = -tr // k
    return coeffs


def fl_charpoly(rows):
    """Faddeev-Leverrier over a field (Fraction or mpf entries)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, k
    one = rows[0][0] * 0 + 1
    coeffs = [one * 0] * (n + 1)
    coeffs[n] = one
    work = [list(r) for r in rows]
    tr = work[0][0]
    for i in range(1, n):
        tr = tr + work[i][i]
    coeffs[n - 1] = -tr
    for k in range(2, n + 1):
        shift = coeffs[n - k + 1]
        for i in range(n):
            work[i][i] = work[i][i] + shift
        work = mat_mul(rows, work)
        tr = work[0][0]
        for i in range(1, n):
            tr = tr + work[i][i]
        coeffs[n - k] = -tr / k
    return coeffs


def labudde_charpoly(alphas, betas, hrows):
    """Characteristic polynomial of an upper Hessenberg matrix, ascending."""
    cdef Py_ssize_t n = len(alphas)
    cdef Py_ssize_t i, m, t
    zero = alphas[0] * 0
    one = zero + 1
    polys = [[one]]
    polys.append([zero - alphas[0], one])
    for i in range(2, n + 1):
        prev = polys[i - 1]
        cur = [zero] * (len(prev) + 1)
        for t in range(len(prev)):
            cur[t + 1] = prev[t]
        ai = alphas[i - 1]
        for t in range(len(prev)):
            cur[t] = cur[t] - ai * prev[t]
        prod = one
        for m in range(1, i):
            prod = prod * betas[i - m - 1]
            if prod == 0:
                break
            hv = hrows[i - m - 1][i - 1]
            if hv == 0:
                continue
            coef = hv * prod
            low = polys[i - m - 1]
            for t in range(len(low)):
                cur[t] = cur[t] - coef * low[t]
        polys.append(cur)
    return polys[n]


def companion_right_multiply(rows, last_col):
    """X -> X*C for C a bottom-companion matrix, in O(n^2)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, t
    out = []
    for i in range(n):
        row = rows[i]
        acc = row[0] * last_col[0]
        for t in range(1, n):
            acc = acc + row[t] * last_col[t]
        out.append(row[1:] + [acc])
    return out


def hermite_product(h1_rows, q_coeffs, last_col):
    """H_q = sum_k q_k * (H_1 C^k) using the companion column-shift trick."""
    cdef Py_ssize_t n = len(h1_rows)
    cdef Py_ssize_t i, j, k
    q0 = q_coeffs[0]
    acc = [[q0 * v for v in row] for row in h1_rows]
    power = h1_rows
    for k in range(1, len(q_coeffs)):
        power = companion_right_multiply(power, last_col)
        qk = q_coeffs[k]
        if qk == 0:
            continue
        for i in range(n):
            arow = acc[i]
            prow = power[i]
            for j in range(n):
                arow[j] = arow[j] + qk * prow[j]
    return acc


def ldl_inertia(rows):
    """Inertia (n+, n-, n0) of a symmetric matrix over a field."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t ii, jj
    cdef int pos = 0, neg = 0, nil = 0
    a = [list(r) for r in rows]
    active = list(range(n))
    while active:
        p = active[0]
        best = abs(a[p][p])
        for r in active[1:]:
            mag = abs(a[r][r])
            if mag > best:
                best = mag
                p = r
        d = a[p][p]
        if d != 0:
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(p)
            prow = a[p]
            for j in active:
                f = a[j][p] / d
                if f == 0:
                    continue
                jrow = a[j]
                for k in active:
                    jrow[k] = jrow[k] - f * prow[k]
            continue
        q = -1
        best = 0
        for ii in range(len(active)):
            for jj in range(ii + 1, len(active)):
                mag = abs(a[active[ii]][active[jj]])
                if mag > best:
                    best = mag
                    p = active[ii]
                    q = active[jj]
        if q < 0:
            nil += len(active)
            break
        b = a[p][q]
        pos += 1
        neg += 1
        active.remove(p)
        active.remove(q)
        prow = a[p]
        qrow = a[q]
        for j in active:
            u = a[j][p]
            v = a[j][q]
            if u == 0 and v == 0:
                continue
            jrow = a[j]
            for k in active:
                jrow[k] = jrow[k] - (u * qrow[k] + v * prow[k]) / b
    return pos, neg, nil


def bareiss_inertia(rows):
    """Inertia (n+, n-, n0) of a symmetric integer matrix, fraction-free."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t ii, jj
    cdef int pos = 0, neg = 0, nil = 0
    a = [list(r) for r in rows]
    active = list(range(n))
    prev = 1
    while active:
        p = active[0]
        best = abs(a[p][p])
        for r in active[1:]:
            mag = abs(a[r][r])
            if mag > best:
                best = mag
                p = r
        piv = a[p][p]
        if piv != 0:
            if (piv > 0) == (prev > 0):
                pos += 1
            else:
                neg += 1
            active.remove(p)
            prow = a[p]
            for j in active:
                ajp = a[j][p]
                jrow = a[j]
                for k in active:
                    jrow[k] = (piv * jrow[k] - ajp * prow[k]) // prev
            prev = piv
            continue
        q = -1
        best = 0
        for ii in range(len(active)):
            for jj in range(ii + 1, len(active)):
                mag = abs(a[active[ii]][active[jj]])
                if mag > best:
                    best = mag
                    p = active[ii]
                    q = active[jj]
        if q < 0:
            nil += len(active)
            break
        b = a[p][q]
        pos += 1
        neg += 1
        active.remove(p)
        active.remove(q)
        prow = a[p]
        qrow = a[q]
        det2 = -(b * b)
        prev2 = prev * prev
        for j in active:
            u = a[j][p]
            v = a[j][q]
            jrow = a[j]
            for k in active:
                jrow[k] = (det2 * jrow[k] + b * (u * qrow[k] + v * prow[k])) // prev2
        prev = det2 // prev
    return pos, neg, nil


def int_content_strip(coeffs):
    """Divide an integer coefficient list by its positive content."""
    g = 0
    for c in coeffs:
        if c < 0:
            c = -c
        if g == 0:
            g = c
        elif c != 0:
            while c:
                g, c = c, g % c
        if g == 1:
            return list(coeffs)
    if g == 0 or g == 1:
        return list(coeffs)
    return [c // g for c in coeffs]


def int_prem_primitive(f, g):
    """Primitive positively-scaled pseudo-remainder of integer polynomials."""
    cdef Py_ssize_t dg, shift, t
    num = list(f)
    while num and num[len(num) - 1] == 0:
        num.pop()
    dg = len(g) - 1
    while dg >= 0 and g[dg] == 0:
        dg -= 1
    if dg < 0:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    lg = g[dg]
    neg_lead = lg < 0
    mag_lg = -lg if neg_lead else lg
    while len(num) - 1 >= dg:
        ln = num[len(num) - 1]
        shift = len(num) - 1 - dg
        if neg_lead:
            ln = -ln
        num = [mag_lg * c for c in num]
        for t in range(dg + 1):
            num[shift + t] = num[shift + t] - ln * g[t]
        while num and num[len(num) - 1] == 0:
            num.pop()
        if not num:
            return []
    return int_content_strip(num)
