"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or fractions.Fraction.  Nothing
here touches floating point.  Sizes are desk scale (a few hundred), so plain
Gaussian elimination is used throughout.
"""

from fractions import Fraction
from math import gcd


def _frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows):
    """Rational rank via Gaussian elimination."""
    if not rows or not rows[0]:
        return 0
    m = _frac_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve_with_certificate(rows, rhs):
    """Solve A x = b exactly.

    Returns ("solution", x) with one exact solution, or ("infeasible", y)
    where y is a row functional with y.A = 0 and y.b != 0.  The functional is
    recovered from the tracked row operations.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = _frac_rows(rows)
    b = [Fraction(x) for x in rhs]
    if len(b) != nrows:
        raise ValueError("rhs length does not match row count")
    # L tracks the row transform: current a == L @ original, same for b.
    ell = [[Fraction(int(i == j)) for j in range(nrows)] for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        b[r], b[piv] = b[piv], b[r]
        ell[r], ell[piv] = ell[piv], ell[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        b[r] *= inv
        ell[r] = [x * inv for x in ell[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                b[i] -= f * b[r]
                ell[i] = [x - f * y for x, y in zip(ell[i], ell[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if b[i] != 0:
            return "infeasible", ell[i]
    x = [Fraction(0)] * ncols
    for row_i, col in enumerate(pivots):
        x[col] = b[row_i]
    return "solution", x


def nullspace(rows, ncols=None):
    """Basis of {x : A x = 0}, one vector per free column, integer scaled."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    a = _frac_rows(rows)
    nrows = len(a)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_i, col in enumerate(pivots):
            v[col] = -a[row_i][free]
        basis.append(scale_to_integers(v))
    return basis


def scale_to_integers(vec):
    """Clear denominators and divide by the content; returns Fractions with denominator 1."""
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g > 1:
        ints = [n // g for n in ints]
    return [Fraction(n) for n in ints]


def mat_mul(a, b):
    if not a or not b:
        return []
    n = len(b)
    cols = len(b[0])
    return [
        [sum(row[k] * b[k][j] for k in range(n)) for j in range(cols)]
        for row in a
    ]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def determinant(rows):
    """Exact determinant of a square matrix (fraction-free not needed at this scale)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = _frac_rows(rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det
