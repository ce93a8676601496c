"""Deterministic function generators, exhaustive enumeration and census.

Random tables use SplitMix64 so that a seed names the same table in any
language::

    state = seed mod 2^64
    for each table entry, in index order:
        state = (state + 0x9E3779B97F4A7C15) mod 2^64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
        z = z ^ (z >> 31)
        entry = z mod N
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import zn
from .analysis import analyze
from .transforms import LogicFunction

DEFAULT_CAP = 10**6
FAMILIES = ("example_2_1", "affine", "quadratic_form", "product_bent", "random", "exhaustive")

_MASK64 = (1 << 64) - 1


class CapExceeded(ValueError):
    """Enumeration would exceed the configured function cap."""


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def random_function(N: int, n: int, seed: int) -> LogicFunction:
    stream = splitmix64(seed)
    return LogicFunction(N, n, [next(stream) % N for _ in range(N**n)])


def make_example_2_1() -> LogicFunction:
    """``f(x, y) = I(x) + I(y) + x + y`` over Z_4, where I marks the odd residues."""
    return LogicFunction.from_callable(4, 2, lambda v: (v[0] % 2) + (v[1] % 2) + v[0] + v[1])


def make_affine(N: int, n: int, t: Sequence[int], c: int = 0) -> LogicFunction:
    if len(t) != n:
        raise ValueError(f"affine coefficients need length {n}")
    V = zn.all_vectors(N, n)
    lin = V @ np.asarray(t, dtype=np.int64).reshape(n) if n else 0
    return LogicFunction(N, n, (lin + c) % N)


def make_quadratic(
    N: int, n: int, Q: Sequence[Sequence[int]], t: Sequence[int] | None = None, c: int = 0
) -> LogicFunction:
    """``sum_{i<=j} Q[i][j] x_i x_j + t.x + c``; entries below the diagonal are ignored."""
    if len(Q) != n or any(len(row) != n for row in Q):
        raise ValueError(f"Q must be {n}x{n}")
    V = zn.all_vectors(N, n)
    total = np.zeros(N**n, dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            if Q[i][j] % N:
                total += (Q[i][j] % N) * V[:, i] * V[:, j]
    if t is not None:
        if len(t) != n:
            raise ValueError(f"t must have length {n}")
        total += V @ np.asarray(t, dtype=np.int64)
    return LogicFunction(N, n, (total + c) % N)


def make_product_bent(N: int, n: int) -> LogicFunction:
    """``x_1 x_2 + x_3 x_4 + ...``; generalized bent for every N when n is even."""
    if n % 2:
        raise ValueError("product_bent needs an even number of variables")
    Q = [[0] * n for _ in range(n)]
    for k in range(0, n, 2):
        Q[k][k + 1] = 1
    return make_quadratic(N, n, Q)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    N: int
    n: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        zn.check_modulus(self.N)
        if self.n < 0:
            raise ValueError("arity must be non-negative")

    def build(self) -> LogicFunction:
        N, n, p = self.N, self.n, self.params
        if self.family == "example_2_1":
            if (N, n) != (4, 2):
                raise ValueError("example_2_1 is defined for N=4 n=2")
            return make_example_2_1()
        if self.family == "affine":
            return make_affine(N, n, p.get("t", [0] * n), p.get("c", 0))
        if self.family == "quadratic_form":
            Q = p.get("Q", [[0] * n for _ in range(n)])
            return make_quadratic(N, n, Q, p.get("t"), p.get("c", 0))
        if self.family == "product_bent":
            return make_product_bent(N, n)
        if self.family == "random":
            if "seed" not in p:
                raise ValueError("random family needs a seed")
            return random_function(N, n, p["seed"])
        raise ValueError("the exhaustive family describes a sweep, not a single function")


def function_count(N: int, n: int) -> int:
    return N ** (N**n)


def enumerate_all(N: int, n: int, cap: int = DEFAULT_CAP) -> Iterator[LogicFunction]:
    """All functions, truth tables in lexicographic order (entry 0 most significant)."""
    total = function_count(N, n)
    if total > cap:
        raise CapExceeded(f"{N}^({N}^{n}) = {total} functions exceeds the cap of {cap}")
    for table in itertools.product(range(N), repeat=N**n):
        yield LogicFunction(N, n, table)


def is_affine(f: LogicFunction) -> bool:
    c = int(f.table[0])
    # f(e_i) - f(0) are the only candidate coefficients
    t = [(int(f.table[f.N**i]) - c) % f.N for i in range(f.n)]
    return np.array_equal(f.table, make_affine(f.N, f.n, t, c).table)


@dataclass
class Census:
    N: int
    n: int
    total: int = 0
    gbent: int = 0
    gpb: int = 0
    pure_gpb: int = 0
    affine: int = 0
    other: int = 0
    inequality_violations: int = 0

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("N", "n", "total", "gbent", "gpb", "pure_gpb", "affine", "other",
                 "inequality_violations")}


def census(N: int, n: int, cap: int = DEFAULT_CAP) -> Census:
    """Classify every function on Z_N^n.

    ``other`` counts functions that are not partially bent.  The categories
    overlap: bent and affine functions are also counted as partially bent.
    """
    out = Census(N, n)
    for f in enumerate_all(N, n, cap):
        report = analyze(f)
        out.total += 1
        out.gbent += report.is_gbent
        out.gpb += report.is_gpb
        out.pure_gpb += report.is_gpb and report.is_pure
        out.affine += is_affine(f)
        out.other += not report.is_gpb
        out.inequality_violations += not report.inequality_holds
    return out
