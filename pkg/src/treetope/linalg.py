"""Exact linear algebra over the rationals.

Fraction-valued routines cover the general code paths; the enumeration hot
loops use fraction-free integer kernels (Bareiss determinants, Montante
solves) to avoid per-operation Fraction overhead.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def frac_rref(rows, width):
    """Reduced row echelon form of Fraction rows; returns (rref, pivot_cols)."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def frac_rank(rows, width):
    return len(frac_rref(rows, width)[1])


def frac_solve(matrix, rhs):
    """Solve a square Fraction system exactly; None if singular."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rref, pivots = frac_rref(aug, n)
    if pivots != list(range(n)):
        return None
    return [rref[i][n] for i in range(n)]


def frac_nullspace(rows, width):
    """Basis of the right nullspace of the given Fraction rows."""
    rref, pivots = frac_rref(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return basis


def affine_dim(points):
    """Affine dimension of a point set (-1 for the empty set, 0 for a point)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in pts[1:]]
    if not diffs:
        return 0
    return frac_rank(diffs, len(base))


def row_to_int(row):
    """Scale one Fraction row by the lcm of denominators; returns int list."""
    m = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * m) for x in row]


def rows_to_int(rows):
    return [row_to_int(r) for r in rows]


def int_rank(rows, width):
    """Rank of integer rows (cross-multiplication elimination, exact)."""
    work = [list(r) for r in rows if any(r)]
    rank = 0
    for c in range(width):
        pr = next((i for i in range(rank, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        pc = work[rank][c]
        for i in range(rank + 1, len(work)):
            if work[i][c] != 0:
                f = work[i][c]
                work[i] = [pc * a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def int_det(rows):
    """Determinant of a square integer matrix (Bareiss, exact divisions)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pr = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pr is None:
            return 0
        if pr != k:
            m[k], m[pr] = m[pr], m[k]
            sign = -sign
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            ri, rk = m[i], m[k]
            for j in range(k + 1, n):
                ri[j] = (mkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = mkk
    return sign * m[n - 1][n - 1]


def primitive(vec):
    """Divide an integer vector by the gcd and make the first nonzero entry
    positive; the zero vector is returned unchanged."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return list(vec)
    out = [x // g for x in vec]
    lead = next((x for x in out if x != 0), 0)
    if lead < 0:
        out = [-x for x in out]
    return out


def cross_normal(rows, width):
    """Primitive integer normal to the span of (width-1) x width integer rows,
    via signed maximal minors.  Returns None when the rows have rank < width-1
    (normal direction not unique)."""
    k = len(rows)
    if k != width - 1:
        raise ValueError("cross_normal needs width-1 rows")
    out = []
    for j in range(width):
        minor = [[row[c] for c in range(width) if c != j] for row in rows]
        d = int_det(minor)
        out.append(d if j % 2 == 0 else -d)
    if all(x == 0 for x in out):
        return None
    return primitive(out)


def montante_solve(matrix, rhs):
    """Solve a square integer system exactly (Montante / Bareiss-Jordan).

    Returns (numerators, denominator) with denominator > 0, or None when the
    matrix is singular.  All intermediate arithmetic is integer-only.
    """
    n = len(matrix)
    if n == 0:
        return [], 1
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        pr = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pr is None:
            return None
        if pr != k:
            m[k], m[pr] = m[pr], m[k]
        mkk = m[k][k]
        rk = m[k]
        for i in range(n):
            if i == k:
                continue
            ri = m[i]
            mik = ri[k]
            for j in range(n + 1):
                if j != k:
                    ri[j] = (mkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = mkk
    den = m[0][0]
    nums = [m[i][n] for i in range(n)]
    if den < 0:
        den = -den
        nums = [-x for x in nums]
    return nums, den
