"""Exact linear algebra over the rationals.

Forward elimination is fraction-free (Bareiss) on denominator-cleared integer
rows; fractions only appear in the final normalization to reduced echelon
form.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def rref_with_transform(rows: list[list]) -> tuple[list[list[Fraction]], list[list[Fraction]], list[int]]:
    """Reduced row echelon form of `rows` with the transform that produced it.

    Returns (R, T, pivots) where R = T * rows exactly, R is in reduced echelon
    form with leading coefficient 1 in each nonzero row (zero rows trail), and
    pivots lists the pivot column of each nonzero row.
    """
    n = len(rows)
    if n == 0:
        return [], [], []
    m = len(rows[0])
    # clear denominators row by row; fold the scale into the augmented part
    work: list[list[int]] = []
    aug: list[list[Fraction]] = []
    for i, row in enumerate(rows):
        if len(row) != m:
            raise ValueError("ragged matrix")
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        work.append([int(Fraction(x) * den) for x in row])
        aug.append([Fraction(den) if j == i else Fraction(0) for j in range(n)])

    # Bareiss fraction-free forward elimination; divisions are exact
    prev = 1
    piv_row = 0
    pivots: list[int] = []
    for col in range(m):
        sel = None
        for i in range(piv_row, n):
            if work[i][col]:
                sel = i
                break
        if sel is None:
            continue
        if sel != piv_row:
            work[piv_row], work[sel] = work[sel], work[piv_row]
            aug[piv_row], aug[sel] = aug[sel], aug[piv_row]
        p = work[piv_row][col]
        for i in range(piv_row + 1, n):
            f = work[i][col]
            for j in range(m):
                work[i][j] = (work[i][j] * p - f * work[piv_row][j]) // prev
            for j in range(n):
                aug[i][j] = (aug[i][j] * p - f * aug[piv_row][j]) / prev
        prev = p
        pivots.append(col)
        piv_row += 1
        if piv_row == n:
            break

    # normalize and back-substitute (small systems; fractions are fine here)
    result = [[Fraction(x) for x in row] for row in work]
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        lead = result[r][col]
        result[r] = [x / lead for x in result[r]]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(r):
            f = result[i][col]
            if f:
                result[i] = [a - f * b for a, b in zip(result[i], result[r])]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
    return result, aug, pivots


def rank(rows: list[list]) -> int:
    return len(rref_with_transform(rows)[2])
