"""Exact kernel computations over the supported coefficient rings.

Used by the uniqueness checkers to find a nonzero relation among matrix
powers: given columns c_0..c_{m-1} over R, find r with sum r_j c_j = 0 and
some r_j nonzero.  Rationals and integers go through fraction-free Gaussian
elimination; integers mod n go through an integer diagonalization so that
zero divisors are handled correctly.
"""

from fractions import Fraction
from math import gcd

from .errors import LpaError
from .rings import IntegerRing, ModRing, RationalRing


def _rational_kernel(columns):
    """A nonzero rational kernel vector of the column family, or None.
    Deterministic: the earliest non-pivot column gets coefficient 1."""
    cols = len(columns)
    if cols == 0:
        return None
    rows = len(columns[0])
    a = [[Fraction(columns[j][i]) for j in range(cols)] for i in range(rows)]
    pivot_row_of = {}
    r = 0
    for j in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][j] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][j]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][j] != 0:
                f = a[i][j]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivot_row_of[j] = r
        r += 1
        if r == rows:
            break
    free = next((j for j in range(cols) if j not in pivot_row_of), None)
    if free is None:
        return None
    x = [Fraction(0)] * cols
    x[free] = Fraction(1)
    for j, i in pivot_row_of.items():
        x[j] = -a[i][free]
    return x


def _integer_scale(xs):
    """Scale a rational vector to a primitive integer vector."""
    denom = 1
    for v in xs:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in xs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def _diagonalize_int(a):
    """Row/column reduce an integer matrix to diagonal shape, tracking only
    the column transforms: returns (diag, V) with V unimodular and the
    reduced matrix equal to (row ops) . a . V.  Full Smith divisibility is
    not needed for kernel extraction mod n."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    a = [row[:] for row in a]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(rows):
            a[i][j] -= q * a[i][k]
        for i in range(cols):
            v[i][j] -= q * v[i][k]

    def col_swap(j, k):
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    t = 0
    while t < rows and t < cols:
        pivot = min(
            ((abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
             if a[i][j] != 0),
            default=None,
        )
        if pivot is None:
            break
        _, pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            col_swap(t, pj)
        dirty = True
        while dirty:
            dirty = False
            for j in range(cols):
                if j != t and a[t][j] != 0:
                    col_op(j, t, a[t][j] // a[t][t])
                    if a[t][j] != 0:  # remainder smaller than pivot: swap in
                        col_swap(t, j)
                        dirty = True
            for i in range(rows):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
        t += 1
    diag = [a[i][i] if i < cols else 0 for i in range(min(rows, cols))]
    return diag, v


def _mod_kernel(columns, n):
    """A vector r (not all zero mod n) with sum r_j col_j = 0 mod n, or None."""
    cols = len(columns)
    if cols == 0:
        return None
    rows = len(columns[0])
    if rows == 0:
        return [1] + [0] * (cols - 1)
    a = [[columns[j][i] % n for j in range(cols)] for i in range(rows)]
    diag, v = _diagonalize_int(a)
    for j in range(cols):
        d = diag[j] if j < len(diag) else 0
        g = gcd(d, n)
        if g > 1 or d == 0:
            zj = n // g if d else 1
            r = [(v[i][j] * zj) % n for i in range(cols)]
            if any(r):
                return r
    return None


def annihilator_kernel(columns, ring):
    """Nonzero R-relation among the columns, or None.  columns entries must
    already be scalars of the given ring."""
    if isinstance(ring, RationalRing):
        return _rational_kernel(columns)
    if isinstance(ring, IntegerRing):
        xs = _rational_kernel([[Fraction(v) for v in col] for col in columns])
        return None if xs is None else _integer_scale(xs)
    if isinstance(ring, ModRing):
        return _mod_kernel(columns, ring.n)
    raise LpaError(f"kernel solving not supported over {ring!r}")
