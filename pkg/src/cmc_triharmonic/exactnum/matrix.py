'''
Created on 13 Oct 2026

@author: ante
'''
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, TypeVar

log = logging.getLogger(__name__)

T = TypeVar("T")


def determinant(matrix: Sequence[Sequence[T]]) -> T:
    """
    Fraction-free (Bareiss) elimination. Entries need +, -, * and an exact `/`;
    works for Fractions and for UniPoly entries alike.
    """
    m: List[List[T]] = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]
    k = len(m)
    if k == 0 or any(len(row) != k for row in m):
        raise ValueError("determinant needs a non-empty square matrix")

    sign = 1
    prev = None
    for i in range(k - 1):
        if not m[i][i]:
            swap = next((r for r in range(i + 1, k) if m[r][i]), None)
            if swap is None:
                return m[i][i]
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        pivot = m[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                num = m[r][c] * pivot - m[r][i] * m[i][c]
                m[r][c] = num if prev is None else num / prev
        prev = pivot
    det = m[k - 1][k - 1]
    return det if sign > 0 else -det


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """Exact Gauss-Jordan solve of a square nonsingular system."""
    k = len(matrix)
    if len(rhs) != k or any(len(row) != k for row in matrix):
        raise ValueError("solve needs a square matrix and a matching right-hand side")
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for col in range(k):
        pivot = next((r for r in range(col, k) if a[r][col]), None)
        if pivot is None:
            raise ValueError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[k] for row in a]
