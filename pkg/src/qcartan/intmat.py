"""Exact integer matrix helpers.

Matrices are tuples of row tuples of Python ints. Nothing here touches
floating point.
"""
from __future__ import annotations

from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def congruence(m: IntMatrix, a: IntMatrix) -> IntMatrix:
    """Return m^T a m."""
    return matmul(matmul(transpose(m), a), m)


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def leading_principal_minors(a: IntMatrix) -> list[int]:
    return [det(tuple(row[:k] for row in a[:k])) for k in range(1, len(a) + 1)]


def leading_minors_positive(a: IntMatrix) -> bool:
    """True iff every leading principal minor is strictly positive.

    Bareiss elimination without pivoting: the k-th pivot is exactly the
    k-th leading principal minor, so the first non-positive pivot ends
    the scan.
    """
    n = len(a)
    m = [list(row) for row in a]
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return True


def is_unimodular(a: IntMatrix) -> bool:
    # an integer matrix has an integer inverse iff its determinant is +-1
    return det(a) in (1, -1)
