"""Dense row reduction over a prime field ``F_p`` (``p <= 2**16``)."""

from __future__ import annotations

import numpy as np

MAX_PRIME = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_prime(p: int) -> int:
    if not is_prime(p) or p > MAX_PRIME:
        raise ValueError(f"field characteristic must be a prime <= 2**16, got {p}")
    return p


def inv_mod(a: int, p: int) -> int:
    return pow(int(a), -1, p)


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p``; pivots are leftmost nonzero columns.

    Returns the nonzero rows and their pivot columns.
    """
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        a = a.reshape(0, 0) if a.size == 0 else a.reshape(1, -1)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_mod(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(mat, p: int) -> int:
    return len(rref(mat, p)[1])


def in_row_space(reduced: np.ndarray, pivots: list[int], vec, p: int) -> bool:
    """Whether ``vec`` lies in the span of rows already in reduced echelon form."""
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(reduced, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return not v.any()
