"""Exact linear algebra over the rationals (or any exact field)."""
from __future__ import annotations

from fractions import Fraction


def invert_matrix(rows):
    """Invert a square matrix of rationals by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_overdetermined(rows, rhs, field=None):
    """Solve an (over)determined linear system exactly.

    Returns (status, solution) where status is one of "unique",
    "underdetermined" (solution is None), "inconsistent" (solution is None).
    With a `field` argument the entries are taken to be field elements;
    otherwise plain Fractions.
    """
    if field is None:
        from .fields import RATIONALS
        field = RATIONALS
    m, n = len(rows), (len(rows[0]) if rows else 0)
    aug = [[field.of(x) for x in row] + [field.of(b)] for row, b in zip(rows, rhs)]
    pivots = []
    row_at = 0
    for col in range(n):
        pivot = next((r for r in range(row_at, m) if aug[r][col] != field.zero), None)
        if pivot is None:
            continue
        aug[row_at], aug[pivot] = aug[pivot], aug[row_at]
        inv = field.div(field.one, aug[row_at][col])
        aug[row_at] = [field.mul(x, inv) for x in aug[row_at]]
        for r in range(m):
            if r != row_at and aug[r][col] != field.zero:
                factor = aug[r][col]
                aug[r] = [field.sub(x, field.mul(factor, y))
                          for x, y in zip(aug[r], aug[row_at])]
        pivots.append(col)
        row_at += 1
        if row_at == m:
            break
    for r in range(row_at, m):
        if aug[r][n] != field.zero:
            return "inconsistent", None
    if len(pivots) < n:
        return "underdetermined", None
    sol = [field.zero] * n
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    return "unique", sol
