"""Arithmetic over the residue ring Z_N.

Vectors are tuples of residues, matrices are tuples of row tuples.  The
points of Z_N^n are enumerated little-endian mixed-radix: coordinate ``i``
of index ``k`` is ``(k // N**i) % N``.  Every table in the package uses this
order.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd, prod
from typing import Sequence

import numpy as np

ZVec = tuple[int, ...]
ZMatrix = tuple[tuple[int, ...], ...]


class NotInvertible(ValueError):
    """Raised when a matrix has a non-unit determinant mod N."""


def check_modulus(N: int) -> None:
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {N!r}")


def idx_to_vec(index: int, N: int, n: int) -> ZVec:
    if not 0 <= index < N**n:
        raise IndexError(f"index {index} out of range for Z_{N}^{n}")
    out = []
    for _ in range(n):
        index, r = divmod(index, N)
        out.append(r)
    return tuple(out)


def vec_to_idx(v: Sequence[int], N: int) -> int:
    index = 0
    for x in reversed(v):
        index = index * N + (x % N)
    return index


def vector(v: Sequence[int], N: int) -> ZVec:
    return tuple(int(x) % N for x in v)


def inner_product(a: Sequence[int], x: Sequence[int], N: int) -> int:
    if len(a) != len(x):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(x)}")
    return sum(ai * xi for ai, xi in zip(a, x)) % N


def vec_add(a: Sequence[int], b: Sequence[int], N: int) -> ZVec:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple((x + y) % N for x, y in zip(a, b))


def vec_neg(a: Sequence[int], N: int) -> ZVec:
    return tuple((-x) % N for x in a)


def matrix(rows: Sequence[Sequence[int]], N: int) -> ZMatrix:
    rows = [tuple(int(x) % N for x in r) for r in rows]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return tuple(rows)


def identity(n: int) -> ZMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_apply(x: Sequence[int], A: ZMatrix, N: int) -> ZVec:
    """Row vector times matrix: ``y_j = sum_i x_i A[i][j] mod N``."""
    if len(x) != len(A):
        raise ValueError(f"dimension mismatch: vector {len(x)} vs matrix {len(A)}")
    n = len(A)
    return tuple(sum(x[i] * A[i][j] for i in range(n)) % N for j in range(n))


def mat_mul(A: ZMatrix, B: ZMatrix, N: int) -> ZMatrix:
    if len(A) != len(B):
        raise ValueError("dimension mismatch")
    n = len(A)
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(n)) % N for j in range(n))
        for i in range(n)
    )


def mat_transpose(A: ZMatrix) -> ZMatrix:
    return tuple(zip(*A)) if A else ()


def det(A: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by Bareiss fraction-free elimination."""
    M = [list(map(int, r)) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def det_leibniz(A: Sequence[Sequence[int]]) -> int:
    """Permutation expansion; exponential, for cross-checking small matrices."""
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        total += (-1) ** inversions * prod(A[i][perm[i]] for i in range(n))
    return total


def is_invertible(A: ZMatrix, N: int) -> bool:
    return gcd(det(A) % N, N) == 1


def mat_inverse(A: ZMatrix, N: int) -> ZMatrix:
    """Inverse over Z_N via the adjugate; raises :class:`NotInvertible`."""
    n = len(A)
    d = det(A) % N
    if gcd(d, N) != 1:
        raise NotInvertible(f"det = {d} is not a unit mod {N}")
    d_inv = pow(d, -1, N)
    if n == 1:
        return ((d_inv,),)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [A[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            # adj is the transposed cofactor matrix
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(d_inv * adj[i][j] % N for j in range(n)) for i in range(n))


def random_invertible(N: int, n: int, rng: np.random.Generator) -> ZMatrix:
    while True:
        A = tuple(tuple(int(x) for x in row) for row in rng.integers(0, N, (n, n)))
        if is_invertible(A, N):
            return A


# -- vectorized views of Z_N^n -------------------------------------------------


@lru_cache(maxsize=64)
def _all_vectors(N: int, n: int) -> np.ndarray:
    idx = np.arange(N**n, dtype=np.int64)
    out = np.empty((N**n, n), dtype=np.int64)
    for i in range(n):
        out[:, i] = (idx // N**i) % N
    out.setflags(write=False)
    return out


def all_vectors(N: int, n: int) -> np.ndarray:
    """Array of shape ``(N**n, n)``; row ``k`` is ``idx_to_vec(k)``."""
    return _all_vectors(N, n)


def encode(vectors: np.ndarray, N: int) -> np.ndarray:
    """Vectorized ``vec_to_idx`` over the last axis (entries reduced mod N)."""
    vectors = np.asarray(vectors) % N
    n = vectors.shape[-1]
    weights = N ** np.arange(n, dtype=np.int64)
    return vectors @ weights


def apply_matrix(vectors: np.ndarray, A: ZMatrix, N: int) -> np.ndarray:
    return (np.asarray(vectors) @ np.asarray(A, dtype=np.int64).reshape(len(A), len(A))) % N
