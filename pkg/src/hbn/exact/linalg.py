"""Exact linear algebra mod p on numpy int64 matrices.

Entries are reduced into [0, p).  All pivoting is exact; products of two
reduced entries stay below 2^63 for any prime below 2^31, so int64
arithmetic never overflows between reductions.
"""

from __future__ import annotations

import numpy as np

from hbn.exact.field import inv_mod


def _as_mod_array(mat, p: int) -> np.ndarray:
    a = np.asarray(mat, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2d matrix")
    return a % p


def matrix_rank(mat, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    a = _as_mod_array(mat, p)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(a[rank:, c])[0]
        if pivots.size == 0:
            continue
        r = rank + int(pivots[0])
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        inv = inv_mod(int(a[rank, c]), p)
        a[rank] = a[rank] * inv % p
        rest = np.nonzero(a[rank + 1 :, c])[0] + rank + 1
        if rest.size:
            a[rest] = (a[rest] - np.outer(a[rest, c], a[rank])) % p
        rank += 1
    return rank


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    a = _as_mod_array(mat, p)
    rows, cols = a.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        a[rank] = a[rank] * inv_mod(int(a[rank, c]), p) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[rank])) % p
        pivots.append(c)
        rank += 1
    return a, pivots


def nullspace_vector(mat, p: int) -> np.ndarray | None:
    """One nonzero kernel vector over F_p, or None if the kernel is 0."""
    a, pivots = rref(mat, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    v = np.zeros(cols, dtype=np.int64)
    v[c0] = 1
    for row, pc in enumerate(pivots):
        v[pc] = (-a[row, c0]) % p
    return v


def solve(mat, rhs, p: int) -> np.ndarray | None:
    """One solution of mat @ x = rhs over F_p, or None if inconsistent."""
    a = _as_mod_array(mat, p)
    b = np.asarray(rhs, dtype=np.int64).reshape(-1, 1) % p
    aug, pivots = rref(np.hstack([a, b]), p)
    cols = a.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = aug[row, cols]
    return x


def det_mod(mat, p: int) -> int:
    a = _as_mod_array(mat, p)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("determinant needs a square matrix")
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            a[[c, r]] = a[[r, c]]
            det = -det
        piv = int(a[c, c])
        det = det * piv % p
        inv = inv_mod(piv, p)
        rows = np.nonzero(a[c + 1 :, c])[0] + c + 1
        if rows.size:
            factors = a[rows, c] * inv % p
            a[rows] = (a[rows] - np.outer(factors, a[c])) % p
    return det % p


def batch_det_mod(mats, p: int) -> np.ndarray:
    """Determinants of a stack of square matrices (n_mats, n, n) mod p."""
    stack = np.asarray(mats, dtype=np.int64) % p
    return np.array([det_mod(m, p) for m in stack], dtype=np.int64)


def fp2_matrix_rank(re, im, p: int, nr: int) -> int:
    """Rank over F_p^2 of the matrix re + w*im, with w^2 = nr.

    Uses the regular representation: each entry a + w*b becomes the 2x2
    block [[a, nr*b], [b, a]], and the F_p rank of the blown-up matrix is
    exactly twice the F_p^2 rank.
    """
    a = _as_mod_array(re, p)
    b = _as_mod_array(im, p)
    if a.shape != b.shape:
        raise ValueError("real and imaginary parts must share a shape")
    rows, cols = a.shape
    big = np.zeros((2 * rows, 2 * cols), dtype=np.int64)
    big[0::2, 0::2] = a
    big[0::2, 1::2] = b * nr % p
    big[1::2, 0::2] = b
    big[1::2, 1::2] = a
    r = matrix_rank(big, p)
    assert r % 2 == 0
    return r // 2
