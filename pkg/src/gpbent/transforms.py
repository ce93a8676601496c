"""Logic functions Z_N^n -> Z_N and their exact spectral tables.

Spectra are stored unnormalized, ``Shat(w) = sum_x u^(f(x) - w.x)``, which is
``N**n`` times the Chrestenson coefficient.  That keeps every entry a
cyclotomic integer; only display code divides by ``N**n``.
"""
from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from . import zn
from .cyclotomic import (
    CycInt,
    group_ring_norm_sq,
    int_dtype,
    rows_is_zero,
    rows_norm_sq,
    to_canonical,
    totient,
)


class LogicFunction:
    """Truth table of ``f: Z_N^n -> Z_N`` in little-endian index order."""

    __slots__ = ("N", "n", "table")

    def __init__(self, N: int, n: int, table):
        zn.check_modulus(N)
        if n < 0:
            raise ValueError("arity must be non-negative")
        arr = np.array(table, dtype=np.int64).reshape(-1)
        if arr.size != N**n:
            raise ValueError(f"table has {arr.size} entries, expected {N}^{n} = {N**n}")
        if arr.size and (arr.min() < 0 or arr.max() >= N):
            raise ValueError(f"table values must lie in [0, {N})")
        arr.setflags(write=False)
        self.N, self.n, self.table = int(N), int(n), arr

    @classmethod
    def from_callable(cls, N: int, n: int, fn) -> LogicFunction:
        vecs = zn.all_vectors(N, n)
        return cls(N, n, [int(fn(tuple(int(c) for c in v))) % N for v in vecs])

    @property
    def size(self) -> int:
        return self.N**self.n

    def __call__(self, x: Sequence[int]) -> int:
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(x)}")
        return int(self.table[zn.vec_to_idx(x, self.N)])

    def __eq__(self, other):
        if not isinstance(other, LogicFunction):
            return NotImplemented
        return (self.N, self.n) == (other.N, other.n) and np.array_equal(
            self.table, other.table
        )

    def __hash__(self):
        return hash((self.N, self.n, self.table.tobytes()))

    def __repr__(self):
        return f"LogicFunction(N={self.N}, n={self.n}, table={self.table.tolist()})"


class CycTable:
    """``N**n`` cyclotomic integers stored as a ``(N**n, phi(N))`` array."""

    __slots__ = ("N", "n", "coeffs")

    def __init__(self, N: int, n: int, coeffs: np.ndarray):
        if coeffs.shape != (N**n, totient(N)):
            raise ValueError(f"bad table shape {coeffs.shape}")
        coeffs.setflags(write=False)
        self.N, self.n, self.coeffs = N, n, coeffs

    def __len__(self):
        return self.coeffs.shape[0]

    def __getitem__(self, key) -> CycInt:
        if isinstance(key, (tuple, list)):
            key = zn.vec_to_idx(key, self.N)
        return CycInt(self.N, tuple(int(c) for c in self.coeffs[key]))

    def __iter__(self) -> Iterator[CycInt]:
        for i in range(len(self)):
            yield self[i]

    def __eq__(self, other):
        if not isinstance(other, CycTable):
            return NotImplemented
        return (self.N, self.n) == (other.N, other.n) and np.array_equal(
            self.coeffs, other.coeffs
        )

    __hash__ = None

    def zero_mask(self) -> np.ndarray:
        return rows_is_zero(self.coeffs)

    def norm_sq(self) -> np.ndarray:
        return rows_norm_sq(self.coeffs, self.N)

    def __repr__(self):
        return f"{type(self).__name__}(N={self.N}, n={self.n})"


class SpectrumTable(CycTable):
    """Entry ``w`` is ``N**n * S_f(w)``."""

    __slots__ = ()

    def normalized(self, key) -> complex:
        return self[key].to_complex() / self.N**self.n


class AutocorrTable(CycTable):
    """Entry ``s`` is ``C_f(s) = sum_x u^(f(x+s) - f(x))``."""

    __slots__ = ()


def _chunks(total: int, width: int, budget: int = 1 << 22) -> Iterator[slice]:
    step = max(1, budget // max(width, 1))
    for lo in range(0, total, step):
        yield slice(lo, min(total, lo + step))


def _histogram_rows(exponents: np.ndarray, N: int, dtype) -> np.ndarray:
    counts = np.empty((exponents.shape[0], N), dtype=dtype)
    for k in range(N):
        counts[:, k] = np.count_nonzero(exponents == k, axis=1)
    return counts


def chrestenson_spectrum(f: LogicFunction) -> SpectrumTable:
    """Direct summation, one output row at a time (O(N^(2n)))."""
    N, n = f.N, f.n
    V = zn.all_vectors(N, n)
    size = f.size
    dtype = int_dtype(size * N)
    out = np.empty((size, N), dtype=dtype)
    for sl in _chunks(size, size):
        exps = (f.table[None, :] - V[sl] @ V.T) % N
        out[sl] = _histogram_rows(exps, N, dtype)
    return SpectrumTable(N, n, to_canonical(out, N))


def _butterfly(data: np.ndarray, N: int, n: int, sign: int) -> np.ndarray:
    """Radix-N transform of group-ring rows.

    ``data`` has shape ``(N**n, N)``; row ``x`` holds an element of
    Z[x]/(x^N - 1).  Returns rows ``sum_x u^(sign * w.x) data[x]``.  Each of
    the ``n`` stages applies an N-point kernel along one coordinate, and
    multiplying by a root of unity is a cyclic shift, so only additions occur.
    """
    if n == 0:
        return data.copy()
    A = data.reshape((N,) * n + (N,))
    for axis in range(n):
        B = np.moveaxis(A, axis, 0)
        out = np.zeros_like(B)
        for x in range(N):
            rolled = [np.roll(B[x], r, axis=-1) for r in range(N)] if x else None
            for w in range(N):
                out[w] += B[x] if x == 0 else rolled[(sign * w * x) % N]
        A = np.moveaxis(out, 0, axis)
    return np.ascontiguousarray(A).reshape(N**n, N)


def _one_hot(f: LogicFunction, dtype) -> np.ndarray:
    out = np.zeros((f.size, f.N), dtype=dtype)
    out[np.arange(f.size), f.table] = 1
    return out


def _spectrum_group_ring(f: LogicFunction) -> np.ndarray:
    return _butterfly(_one_hot(f, int_dtype(f.size * f.N)), f.N, f.n, -1)


def fast_chrestenson(f: LogicFunction) -> SpectrumTable:
    """Butterfly evaluation of the same table as :func:`chrestenson_spectrum`."""
    return SpectrumTable(f.N, f.n, to_canonical(_spectrum_group_ring(f), f.N))


def _shift_index(N: int, n: int, rows: slice) -> np.ndarray:
    V = zn.all_vectors(N, n)
    return zn.encode(V[rows][:, None, :] + V[None, :, :], N)


def autocorrelation(f: LogicFunction) -> AutocorrTable:
    """Direct double sum over shifts and points (O(N^(2n)))."""
    N, n, size = f.N, f.n, f.size
    dtype = int_dtype(size * N)
    out = np.empty((size, N), dtype=dtype)
    for sl in _chunks(size, size * max(n, 1)):
        exps = (f.table[_shift_index(N, n, sl)] - f.table[None, :]) % N
        out[sl] = _histogram_rows(exps, N, dtype)
    return AutocorrTable(N, n, to_canonical(out, N))


def autocorr_via_spectrum(f: LogicFunction) -> AutocorrTable:
    """Recover C_f from |Shat|^2 with the inverse transform.

    ``sum_w |Shat(w)|^2 u^(w.s) = N^n C_f(s)``; the division by N^n is exact
    on canonical coefficients because they form a Z-basis.
    """
    N, n, size = f.N, f.n, f.size
    g = _spectrum_group_ring(f)
    # |Shat|^2 <= N^(2n); the inverse transform multiplies by at most N^n more
    bound = size**3 * N * N
    g = g.astype(int_dtype(bound))
    power = group_ring_norm_sq(g)
    scaled = to_canonical(_butterfly(power, N, n, +1), N)
    quot, rem = scaled // size, scaled % size
    if np.any(rem != 0):
        raise ArithmeticError("inverse transform not divisible by N^n")
    return AutocorrTable(N, n, quot)


def linear_substitute(f: LogicFunction, A: zn.ZMatrix) -> LogicFunction:
    """``g(x) = f(xA)``; ``A`` must be invertible over Z_N."""
    N = f.N
    if len(A) != f.n:
        raise ValueError(f"matrix size {len(A)} does not match arity {f.n}")
    if not zn.is_invertible(A, N):
        raise zn.NotInvertible(f"matrix is singular mod {N}")
    V = zn.all_vectors(N, f.n)
    return LogicFunction(N, f.n, f.table[zn.encode(zn.apply_matrix(V, A, N), N)])


def add_affine(f: LogicFunction, t: Sequence[int], c: int = 0) -> LogicFunction:
    """Pointwise ``f(x) + t.x + c``."""
    if len(t) != f.n:
        raise ValueError(f"dimension mismatch: {len(t)} vs {f.n}")
    V = zn.all_vectors(f.N, f.n)
    lin = V @ np.asarray(t, dtype=np.int64).reshape(f.n) if f.n else 0
    return LogicFunction(f.N, f.n, (f.table + lin + c) % f.N)


def restrict(f: LogicFunction, fixed: dict[int, int]) -> LogicFunction:
    """Sub-function with coordinates in ``fixed`` pinned to given values."""
    free = [i for i in range(f.n) if i not in fixed]
    V = zn.all_vectors(f.N, len(free))
    full = np.zeros((V.shape[0], f.n), dtype=np.int64)
    for i, val in fixed.items():
        full[:, i] = val
    for j, i in enumerate(free):
        full[:, i] = V[:, j]
    return LogicFunction(f.N, len(free), f.table[zn.encode(full, f.N)])
