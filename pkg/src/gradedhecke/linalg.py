"""Exact dense linear algebra over a field.

Matrices are lists of rows. Prime fields go through numpy ``int64`` arrays
(entries stay below ``p < 2^31`` so products fit); other fields use the
field protocol directly.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .scalars import Field, PrimeField

Matrix = List[list]


def _is_prime_field(R: Field) -> bool:
    return isinstance(R, PrimeField)


def _np_rref(A: np.ndarray, p: int, ncols: Optional[int] = None):
    """Reduced row echelon form mod ``p``; pivots only in the first ``ncols``."""
    A = A.copy() % p
    rows, cols = A.shape
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _gen_rref(M: Matrix, R: Field, ncols: Optional[int] = None):
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    ncols = cols if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if not R.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = R.inv(A[r][c])
        A[r] = [R.mul(x, inv) for x in A[r]]
        for i in range(rows):
            if i != r and not R.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M: Matrix, R: Field, ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    if not M:
        return [], []
    if _is_prime_field(R):
        A, piv = _np_rref(np.array(M, dtype=np.int64), R.p, ncols)
        return A.tolist(), piv
    return _gen_rref(M, R, ncols)


def rank(M: Matrix, R: Field) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(M, R)[1])


def identity(n: int, R: Field) -> Matrix:
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def inverse(M: Matrix, R: Field) -> Matrix:
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(n, R))]
    A, piv = rref(aug, R, n)
    if len(piv) < n:
        raise ArithmeticError("singular matrix")
    return [row[n:] for row in A]


def solve(M: Matrix, B: Matrix, R: Field) -> Optional[Matrix]:
    """Some ``X`` with ``M X = B`` (free variables set to 0), or ``None``."""
    rows = len(M)
    ncols = len(M[0]) if rows else 0
    k = len(B[0]) if B else 0
    aug = [list(M[i]) + list(B[i]) for i in range(rows)]
    A, piv = rref(aug, R, ncols)
    X = [[R.zero] * k for _ in range(ncols)]
    for r, c in enumerate(piv):
        X[c] = A[r][ncols:]
    for r in range(len(piv), rows):
        if any(not R.is_zero(x) for x in A[r][ncols:]):
            return None
    return X


def nullspace(M: Matrix, R: Field) -> Matrix:
    """Basis of ``{v : M v = 0}`` as a list of vectors."""
    if not M:
        return []
    ncols = len(M[0])
    A, piv = rref(M, R)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [R.zero] * ncols
        v[f] = R.one
        for r, c in enumerate(piv):
            v[c] = R.neg(A[r][f])
        out.append(v)
    return out


def matmul(A: Matrix, B: Matrix, R: Field) -> Matrix:
    if _is_prime_field(R) and A and B:
        p = R.p
        a = np.array(A, dtype=np.int64)
        b = np.array(B, dtype=np.int64)
        # split to keep partial sums below 2^63
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        step = max(1, (2**62) // (p * p))
        for s in range(0, a.shape[1], step):
            out = (out + a[:, s:s + step] @ b[s:s + step, :]) % p
        return out.tolist()
    m = len(B[0]) if B else 0
    return [[R.sum(R.mul(row[k], B[k][j]) for k in range(len(row))) for j in range(m)] for row in A]


def matvec(A: Matrix, v: Sequence, R: Field) -> list:
    return [row[0] for row in matmul(A, [[x] for x in v], R)]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def is_zero_matrix(A: Matrix, R: Field) -> bool:
    return all(R.is_zero(x) for row in A for x in row)
