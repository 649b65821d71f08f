"""Dense linear algebra over small finite fields.

Matrices are numpy uint8 arrays of canonical element indices of one
FiniteField.  Characteristic-2 fields add by XOR of indices, which keeps
row elimination at memory bandwidth; odd characteristic goes through the
field's add/sub tables.  Everything here is plain Gaussian elimination --
adequate at desk scale and deliberately free of structure shortcuts.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows):
    A = np.asarray(rows, dtype=np.uint8)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A


def gf_add(F, A, B):
    if F.p == 2:
        return A ^ B
    return F.np_add[A, B]


def gf_sub(F, A, B):
    if F.p == 2:
        return A ^ B
    return F.np_sub[A, B]


def gf_scale(F, c, A):
    return F.np_mul[c][A]


def gf_sum(F, A, axis):
    """Field sum along an axis."""
    if F.p == 2:
        return np.bitwise_xor.reduce(A, axis=axis)
    digits = F.np_digits[A].astype(np.int64)  # (..., t)
    s = digits.sum(axis=axis) % F.p
    powers = F.p ** np.arange(F.t, dtype=np.int64)
    return (s * powers).sum(axis=-1).astype(np.uint8)


def gf_matvec(F, A, v):
    """A @ v over the field; A is (r, n), v length n."""
    A = as_matrix(A)
    v = np.asarray(v, dtype=np.uint8)
    prods = F.np_mul[A, v[None, :]]
    return gf_sum(F, prods, axis=1)


def gf_matmul(F, A, B):
    A = as_matrix(A)
    B = as_matrix(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for i in range(A.shape[1]):
        col = A[:, i]
        if not col.any():
            continue
        out = gf_add(F, out, F.np_mul[col[:, None], B[i][None, :]])
    return out


def rref(F, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    A = as_matrix(rows=A).copy()
    nrows, ncols = A.shape
    mul = F.np_mul
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if A[r, c] != 1:
            A[r] = mul[F.inv(int(A[r, c]))][A[r]]
        # eliminate every other row in one gathered update
        colv = A[:, c].copy()
        colv[r] = 0
        rows = np.nonzero(colv)[0]
        if rows.size:
            scaled_all = mul[:, A[r]]  # (q, ncols): factor -> factor * pivot row
            updates = scaled_all[colv[rows]]
            if F.p == 2:
                A[rows] ^= updates
            else:
                A[rows] = F.np_sub[A[rows], updates]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F, A):
    A = as_matrix(A)
    if A.size == 0:
        return 0
    return rref(F, A)[0].shape[0]


def nullspace(F, A):
    """Rows form a basis of {x : A x = 0}."""
    A = as_matrix(A)
    n = A.shape[1]
    R, pivots = rref(F, A)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = F.neg(int(R[ri, fc]))
    return basis


def in_rowspace(F, A, w):
    A = as_matrix(A)
    w = np.asarray(w, dtype=np.uint8).reshape(1, -1)
    r = rank(F, A)
    return rank(F, np.vstack([A, w])) == r


def rowspace_contains(F, A, B):
    """True iff every row of B lies in the row space of A."""
    A = as_matrix(A)
    B = as_matrix(B)
    r = rank(F, A)
    return rank(F, np.vstack([A, B])) == r


def rowspace_equal(F, A, B):
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[1]:
        return False
    ra, rb = rank(F, A), rank(F, B)
    if ra != rb:
        return False
    return rank(F, np.vstack([A, B])) == ra


def left_nullspace(F, A):
    """Rows x with x A = 0."""
    return nullspace(F, as_matrix(A).T)


def span_all(F, G):
    """Every word in the row space, one per message, message digits varying
    fastest in the last row.  Size grows as q^rows: small inputs only."""
    G = as_matrix(G)
    q = F.order
    out = np.zeros((1, G.shape[1]), dtype=np.uint8)
    for row in G:
        blocks = [gf_add(F, out, gf_scale(F, c, row)[None, :]) for c in range(q)]
        out = np.concatenate(blocks, axis=0)
    return out


def solve_particular(F, A, b):
    """One solution x of A x = b, or None if inconsistent."""
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.uint8).reshape(-1, 1)
    aug = np.hstack([A, b])
    R, pivots = rref(F, aug)
    n = A.shape[1]
    if n in pivots:
        return None  # pivot in the constant column
    x = np.zeros(n, dtype=np.uint8)
    for ri, pc in enumerate(pivots):
        x[pc] = R[ri, n]
    return x
