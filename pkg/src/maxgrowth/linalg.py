"""Small exact linear algebra: integer matrices, mod-p elimination, HNF.

Everything here works on tiny dense matrices (rank <= 3 in practice, plus
cocycle systems with a few dozen rows), so the implementations favour
exactness and determinism over asymptotics: cofactor determinants, plain
Gaussian elimination with first-nonzero pivoting, and a gcd-free row HNF.
"""

from __future__ import annotations

import numpy as np


def as_int_matrix(mat) -> np.ndarray:
    arr = np.array(mat, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    return arr


def int_det(mat) -> int:
    """Exact determinant by cofactor expansion (tiny matrices only)."""
    arr = as_int_matrix(mat)
    n = arr.shape[0]
    if n == 1:
        return int(arr[0, 0])
    if n == 2:
        return int(arr[0, 0]) * int(arr[1, 1]) - int(arr[0, 1]) * int(arr[1, 0])
    total = 0
    for j in range(n):
        minor = np.delete(np.delete(arr, 0, axis=0), j, axis=1)
        total += (-1) ** j * int(arr[0, j]) * int_det(minor)
    return total


def int_inverse_unimodular(mat) -> np.ndarray:
    """Exact inverse of an integer matrix with determinant +-1 (adjugate)."""
    arr = as_int_matrix(mat)
    d = int_det(arr)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    n = arr.shape[0]
    if n == 1:
        return np.array([[d]], dtype=np.int64)
    cof = np.zeros_like(arr)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(arr, i, axis=0), j, axis=1)
            cof[i, j] = (-1) ** (i + j) * int_det(minor)
    return (cof.T * d).astype(np.int64)


def rref_mod(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (rref, pivot_columns). Pivoting picks the first nonzero entry
    in each column, which keeps the reduction deterministic.
    """
    a = np.atleast_2d(np.array(mat, dtype=np.int64)) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        sel = -1
        for i in range(r, rows):
            if a[i, c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank_mod(mat, p: int) -> int:
    return len(rref_mod(mat, p)[1])


def nullity_mod(mat, p: int) -> int:
    a = np.atleast_2d(np.asarray(mat))
    return a.shape[1] - rank_mod(a, p)


def inv_mod(mat, p: int) -> np.ndarray:
    """Matrix inverse over F_p, via elimination on an augmented matrix."""
    arr = as_int_matrix(mat) % p
    n = arr.shape[0]
    aug = np.hstack([arr, np.eye(n, dtype=np.int64)])
    red, pivots = rref_mod(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError(f"matrix is singular mod {p}")
    return red[:, n:].copy()


def reduce_by_rref(vec, rref: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Remainder of a vector after eliminating the pivot coordinates."""
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * rref[r]) % p
    return v


def in_row_span_mod(vec, rref: np.ndarray, pivots: list[int], p: int) -> bool:
    return not reduce_by_rref(vec, rref, pivots, p).any()


def hnf_rows(rows) -> np.ndarray:
    """Row Hermite normal form of the lattice generated by integer rows.

    The result is in echelon form with positive pivots and the entries
    above each pivot reduced to 0 <= entry < pivot; zero rows are dropped.
    HNF is a canonical form, so two generating sets span the same lattice
    exactly when their HNFs are equal.
    """
    arr = np.atleast_2d(np.array(rows, dtype=np.int64))
    mat = [list(map(int, row)) for row in arr]
    nrows = len(mat)
    ncols = arr.shape[1]
    top = 0
    for col in range(ncols):
        if top == nrows:
            break
        # gcd-style elimination: make mat[top][col] the only nonzero at or
        # below row `top` in this column
        while True:
            nonzero = [i for i in range(top, nrows) if mat[i][col]]
            if not nonzero:
                break
            sel = min(nonzero, key=lambda i: abs(mat[i][col]))
            mat[top], mat[sel] = mat[sel], mat[top]
            done = True
            for i in range(top + 1, nrows):
                if mat[i][col]:
                    q = mat[i][col] // mat[top][col]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[top])]
                    if mat[i][col]:
                        done = False
            if done:
                break
        if mat[top][col]:
            if mat[top][col] < 0:
                mat[top] = [-x for x in mat[top]]
            for i in range(top):
                q = mat[i][col] // mat[top][col]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[top])]
            top += 1
    if top == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(mat[:top], dtype=np.int64)
