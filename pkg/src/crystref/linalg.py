"""Exact linear algebra helpers: rational row reduction, integer Hermite-style
row reduction with unimodular tracking, and repeated-solve helpers.

Everything here is dense and desk-scale (dimensions at most ~20); clarity and
exactness over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

FracRow = list[Fraction]


# -- rational matrices ----------------------------------------------------

def frac_rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[FracRow], list[int]]:
    """Reduced row echelon form; returns (new rows, pivot column indices)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        prow = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if prow is None:
            continue
        mat[r], mat[prow] = mat[prow], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [mat[i][j] - f * mat[r][j] for j in range(ncols)]
        pivots.append(col)
        r += 1
    return mat, pivots


def frac_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(frac_rref(rows)[1])


def frac_right_kernel(rows: Sequence[Sequence[Fraction]]) -> list[FracRow]:
    """Basis of {x : A x = 0}, one vector per free column, deterministic."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = frac_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rref[i][fc]
        basis.append(vec)
    return basis


def frac_invert(rows: Sequence[Sequence[Fraction]]) -> list[FracRow]:
    """Inverse of a square rational matrix (raises on singular input)."""
    n = len(rows)
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    rref, pivots = frac_rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rref[:n]]


class RowSolver:
    """Solves x @ G = v repeatedly for a fixed G with independent rows."""

    __slots__ = ("gmat", "k", "ncols", "piv_cols", "inv_piv")

    def __init__(self, gmat: Sequence[Sequence[Fraction]]):
        self.gmat = [[Fraction(x) for x in row] for row in gmat]
        self.k = len(self.gmat)
        self.ncols = len(self.gmat[0]) if self.k else 0
        _, pivots = frac_rref(self.gmat)
        if len(pivots) != self.k:
            raise ValueError("rows are not independent")
        self.piv_cols = pivots
        sub = [[self.gmat[i][c] for i in range(self.k)] for c in pivots]
        # sub[a][b] = G[b][piv_cols[a]]; we need inverse of G restricted to pivot cols
        self.inv_piv = frac_invert(sub)

    def solve(self, v: Sequence[Fraction]) -> Optional[FracRow]:
        """Return x with x @ G == v, or None when v is outside the row span."""
        if self.k == 0:
            return [] if all(x == 0 for x in v) else None
        vj = [v[c] for c in self.piv_cols]
        x = [sum(self.inv_piv[b][a] * vj[a] for a in range(self.k))
             for b in range(self.k)]
        for col in range(self.ncols):
            if sum(x[b] * self.gmat[b][col] for b in range(self.k)) != v[col]:
                return None
        return x

    def solve_integral(self, v: Sequence[Fraction]) -> Optional[list[int]]:
        """Like solve, but only succeeds when the solution is integral."""
        x = self.solve(v)
        if x is None or any(xi.denominator != 1 for xi in x):
            return None
        return [int(xi) for xi in x]


# -- integer matrices ------------------------------------------------------

def _scale_rows_to_int(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale a rational matrix by the global denominator lcm."""
    den = 1
    for row in rows:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    out = [[int(Fraction(x) * den) for x in row] for row in rows]
    return out, den


def int_row_echelon(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Echelon Z-basis of the integer row span (unimodular row operations)."""
    mat = [list(map(int, row)) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, nrows):
            while mat[i][col] != 0:
                a, b = mat[r][col], mat[i][col]
                if abs(a) > abs(b):
                    mat[r], mat[i] = mat[i], mat[r]
                    continue
                q = mat[i][col] // mat[r][col]
                mat[i] = [mat[i][j] - q * mat[r][j] for j in range(ncols)]
        if mat[r][col] < 0:
            mat[r] = [-x for x in mat[r]]
        r += 1
    return [row for row in mat[:r]]


def int_hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form (positive pivots, reduced above)."""
    mat = int_row_echelon(rows)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    for row in mat:
        pivots.append(next(c for c in range(ncols) if row[c] != 0))
    for i in range(len(mat) - 1, -1, -1):
        c = pivots[i]
        p = mat[i][c]
        for k in range(i):
            q = mat[k][c] // p
            if q:
                mat[k] = [mat[k][j] - q * mat[i][j] for j in range(ncols)]
    return mat


def int_left_kernel(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Saturated Z-basis of {y in Z^m : y @ mat == 0}."""
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    rows = [list(map(int, mat[i])) + [int(i == j) for j in range(m)]
            for i in range(m)]
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            a, b = rows[r][col], rows[i][col]
            if b == 0:
                continue
            g = gcd(a, b)
            x0, y0 = _xgcd(a, b)
            ag, bg = a // g, b // g
            new_r = [x0 * rows[r][j] + y0 * rows[i][j] for j in range(ncols + m)]
            new_i = [-bg * rows[r][j] + ag * rows[i][j] for j in range(ncols + m)]
            rows[r], rows[i] = new_r, new_i
        r += 1
    return [row[ncols:] for row in rows[r:]]


def _xgcd(a: int, b: int) -> tuple[int, int]:
    """Bezout coefficients (x, y) with x*a + y*b == gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y = -x, -y
    return x, y


def frac_row_basis_hnf(rows: Sequence[Sequence[Fraction]]) -> tuple[list[FracRow], int]:
    """Z-basis (canonical, HNF-derived) of the Z-row-span of rational rows.

    Returns (basis rows as Fractions, rank).
    """
    if not rows:
        return [], 0
    scaled, den = _scale_rows_to_int(rows)
    hnf = int_hnf(scaled)
    basis = [[Fraction(x, den) for x in row] for row in hnf]
    return basis, len(hnf)


def int_matrix_and_den(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """(numerator matrix, denominator) with rows = num / den exactly."""
    return _scale_rows_to_int(rows)
