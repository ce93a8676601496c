"""Exact arithmetic in Z[u], u = exp(2*pi*i/N).

An element is stored by its coefficients modulo the cyclotomic polynomial
Phi_N, which has degree phi(N).  Since ``1, u, ..., u^(phi(N)-1)`` is a
Z-basis of Z[u], two elements are equal exactly when their coefficient
tuples are equal, and zero tests need no divisibility check.

Besides the scalar :class:`CycInt`, the module has row-wise helpers that act
on integer arrays of shape ``(M, phi(N))``.  The transforms use them to hold
whole tables.  Intermediate sums are kept in the group ring Z[x]/(x^N - 1),
where multiplying by u^k is a cyclic shift.  :func:`reduction_matrix`
projects group-ring vectors to canonical form.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

# Bound below which int64 arithmetic cannot overflow; larger tables use
# Python integers in object arrays.
INT64_SAFE = 2**62


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low degree first); ``den`` must be monic."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) <= dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if N < 1:
        raise ValueError("N must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem), "Phi_d must divide x^N - 1"
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def totient(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


def reduce_poly(coeffs: Sequence[int], N: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(N)
    deg = len(phi) - 1
    _, rem = _poly_divmod(list(coeffs) or [0], list(phi))
    rem = list(rem) + [0] * (deg - len(rem))
    return tuple(rem[:deg])


@lru_cache(maxsize=None)
def _reduction_matrix(N: int) -> np.ndarray:
    deg = totient(N)
    R = np.zeros((N, deg), dtype=np.int64)
    for k in range(N):
        R[k] = reduce_poly([0] * k + [1], N)
    R.setflags(write=False)
    return R


def reduction_matrix(N: int) -> np.ndarray:
    """``(N, phi(N))`` matrix whose row k is the canonical form of u^k."""
    return _reduction_matrix(N)


@dataclass(frozen=True)
class CycInt:
    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != totient(self.N):
            # accept any polynomial and canonicalize it
            object.__setattr__(self, "coeffs", reduce_poly(self.coeffs, self.N))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_int(cls, N: int, k: int) -> CycInt:
        return cls(N, (k,) + (0,) * (totient(N) - 1))

    @classmethod
    def zero(cls, N: int) -> CycInt:
        return cls.from_int(N, 0)

    @classmethod
    def from_group_ring(cls, N: int, counts: Sequence[int]) -> CycInt:
        """Element ``sum_k counts[k] u^k`` for ``k < N``."""
        R = reduction_matrix(N)
        return cls(N, tuple(sum(int(c) * int(r) for c, r in zip(counts, col)) for col in R.T))

    def _check(self, other: CycInt) -> None:
        if other.N != self.N:
            raise ValueError(f"modulus mismatch: {self.N} vs {other.N}")

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.N, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.N, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycInt(self.N, reduce_poly(prod, self.N))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycInt.from_int(self.N, int(other))
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def scale(self, k: int) -> CycInt:
        return CycInt(self.N, tuple(k * a for a in self.coeffs))

    def conj(self) -> CycInt:
        """Complex conjugate, the automorphism u -> u^(N-1)."""
        counts = [0] * self.N
        for k, a in enumerate(self.coeffs):
            counts[(-k) % self.N] += a
        return CycInt.from_group_ring(self.N, counts)

    def norm_sq(self) -> CycInt:
        return self * self.conj()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        """Floating-point value; for display only."""
        u = cmath.exp(2j * cmath.pi / self.N)
        return sum((a * u**k for k, a in enumerate(self.coeffs)), 0j)

    def __repr__(self):
        return f"CycInt({self.N}, {self.coeffs})"

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            elif a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def root_power(N: int, k: int) -> CycInt:
    """Canonical form of u^k."""
    return CycInt(N, tuple(int(c) for c in reduction_matrix(N)[k % N]))


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def scale(a: CycInt, k: int) -> CycInt:
    return a.scale(k)


def conj(a: CycInt) -> CycInt:
    return a.conj()


def norm_sq(a: CycInt) -> CycInt:
    return a.norm_sq()


def is_zero(a: CycInt) -> bool:
    return a.is_zero()


def to_complex(a: CycInt) -> tuple[float, float]:
    z = a.to_complex()
    return (z.real, z.imag)


# -- row-wise operations on coefficient arrays ---------------------------------


def int_dtype(bound: int):
    """int64 when every intermediate stays below ``bound``, else Python ints."""
    return np.int64 if bound < INT64_SAFE else object


def to_canonical(group_ring: np.ndarray, N: int) -> np.ndarray:
    """Project ``(M, N)`` group-ring rows to ``(M, phi(N))`` canonical rows."""
    R = reduction_matrix(N)
    if group_ring.dtype == object:
        R = R.astype(object)
    return group_ring @ R


def lift(rows: np.ndarray, N: int) -> np.ndarray:
    """Embed canonical rows into the group ring (zero padding)."""
    out = np.zeros(rows.shape[:-1] + (N,), dtype=rows.dtype)
    out[..., : rows.shape[-1]] = rows
    return out


def group_ring_norm_sq(g: np.ndarray) -> np.ndarray:
    """Rows ``g * conj(g)`` in Z[x]/(x^N - 1), where conj maps x^k to x^-k."""
    N = g.shape[-1]
    out = np.zeros_like(g)
    for a in range(N):
        ga = g[..., a : a + 1]
        # x^a * x^-b lands on exponent a - b
        out += ga * np.roll(g[..., ::-1], a + 1, axis=-1)
    return out


def rows_norm_sq(rows: np.ndarray, N: int) -> np.ndarray:
    return to_canonical(group_ring_norm_sq(lift(rows, N)), N)


def rows_is_zero(rows: np.ndarray) -> np.ndarray:
    return ~np.any(rows != 0, axis=-1)


def rows_equal(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.all(a == b, axis=-1)


def integer_rows(values: np.ndarray, N: int) -> np.ndarray:
    """Canonical rows of plain integers ``values``."""
    values = np.asarray(values)
    out = np.zeros(values.shape + (totient(N),), dtype=values.dtype)
    out[..., 0] = values
    return out
