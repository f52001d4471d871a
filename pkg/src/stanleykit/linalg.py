"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows.

    Bareiss pivoting keeps every intermediate entry an integer; the division
    below is exact.  An empty matrix or one with no columns has rank 0.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, n_rows):
            for k in range(c + 1, n_cols):
                m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank
