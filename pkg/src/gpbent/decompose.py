"""Split a non-pure partially bent function into affine coordinates and a pure core.

Each step picks a point ``alpha`` of ``E`` with a unit coordinate ``i`` and
changes variables with ``A = A2 @ A1``.  ``A1`` is the identity with row
``i`` replaced by ``alpha``.  ``A2`` moves row ``i`` to the top.  In the new
coordinates ``g(y) = f(yA)`` is affine in ``y_1``:
``g(y) = g(0, y_2..) - (alpha.t) y_1``.  The step then recurses on the
remaining ``n - 1`` coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import zn
from .analysis import AnalysisReport, InvariantViolation, NotGPB, analyze, is_generalized_bent
from .transforms import LogicFunction, linear_substitute, restrict


class PureInput(ValueError):
    """No coordinate can be peeled: the function is already pure."""


@dataclass(frozen=True)
class Decomposition:
    """``f(x A_total) = residual(x[m:]) + sum_j affine_coeffs[j] x_j + constant``.

    ``residual`` is normalized so that ``residual(0) = 0``.
    """

    N: int
    n: int
    A_total: zn.ZMatrix
    m: int
    affine_coeffs: zn.ZVec
    residual: LogicFunction
    constant: int


def build_peel_matrices(alpha, i: int, N: int) -> tuple[zn.ZMatrix, zn.ZMatrix]:
    """Return ``(A1, A2)`` for the 0-based coordinate ``i`` (``alpha[i]`` must be 1)."""
    n = len(alpha)
    if alpha[i] % N != 1:
        raise ValueError(f"alpha[{i}] = {alpha[i]} is not 1")
    A1 = [list(row) for row in zn.identity(n)]
    A1[i] = [a % N for a in alpha]
    order = [i] + [r for r in range(n) if r != i]
    A2 = tuple(zn.identity(n)[r] for r in order)
    return tuple(tuple(r) for r in A1), A2


def _witness(report: AnalysisReport) -> tuple[int, zn.ZVec]:
    """Smallest ``i`` with ``m_i = 1``, then the lex-smallest alpha in E with alpha_i = 1."""
    for i, mi in enumerate(report.m):
        if mi == 1:
            alphas = [v for v in report.E_vectors() if v[i] == 1]
            return i, min(alphas)
    raise PureInput("every m_i differs from 1")


def decompose_step(f: LogicFunction, report: AnalysisReport | None = None):
    """One peeling step.

    Returns ``(A, g, t_prime)`` with ``g = f(yA)`` and ``t_prime = t A^T``.
    ``g(y + k e_1) = g(y) - k t_prime[0]`` then holds for all y.
    """
    report = report if report is not None else analyze(f)
    if not report.is_gpb:
        raise NotGPB("decomposition needs a partially bent function")
    i, alpha = _witness(report)
    A1, A2 = build_peel_matrices(alpha, i, f.N)
    A = zn.mat_mul(A2, A1, f.N)
    g = linear_substitute(f, A)
    t_prime = zn.mat_apply(report.t, zn.mat_transpose(A), f.N)
    return A, g, t_prime


def _lift(A: zn.ZMatrix, n: int) -> zn.ZMatrix:
    k = n - len(A)
    full = [list(row) for row in zn.identity(n)]
    for r, row in enumerate(A):
        full[k + r][k:] = list(row)
    return tuple(tuple(row) for row in full)


def decompose(f: LogicFunction, engine: str = "fast") -> Decomposition:
    N, n = f.N, f.n
    report = analyze(f, engine)
    if not report.is_gpb:
        raise NotGPB("decomposition needs a partially bent function")
    A_total = zn.identity(n)
    coeffs: list[int] = []
    h = f
    while h.n > 0 and not report.is_pure:
        A, g, t_prime = decompose_step(h, report)
        coeffs.append((-t_prime[0]) % N)
        A_total = zn.mat_mul(_lift(A, n), A_total, N)
        h = restrict(g, {0: 0})
        report = analyze(h, engine)
        if not report.is_gpb:
            raise InvariantViolation("restricted function lost the partially bent property")
    constant = int(h.table[0])
    residual = LogicFunction(N, h.n, (h.table - constant) % N)
    return Decomposition(N, n, A_total, len(coeffs), tuple(coeffs), residual, constant)


def reconstruct(D: Decomposition) -> LogicFunction:
    """The table of ``x -> f(x A_total)`` predicted by ``D``."""
    N, n, m = D.N, D.n, D.m
    V = zn.all_vectors(N, n)
    tail = zn.encode(V[:, m:], N) if n > m else np.zeros(V.shape[0], dtype=np.int64)
    head = V[:, :m] @ np.asarray(D.affine_coeffs, dtype=np.int64).reshape(m) if m else 0
    return LogicFunction(N, n, (D.residual.table[tail] + head + D.constant) % N)


def verify_decomposition(f: LogicFunction, D: Decomposition) -> bool:
    if (D.N, D.n) != (f.N, f.n) or D.residual.n != D.n - D.m or len(D.affine_coeffs) != D.m:
        return False
    if not zn.is_invertible(D.A_total, D.N):
        return False
    if linear_substitute(f, D.A_total) != reconstruct(D):
        return False
    if D.residual.n == 0:
        return True
    report = analyze(D.residual)
    return report.is_gpb and report.is_pure


def is_prime(N: int) -> bool:
    return N >= 2 and all(N % p for p in range(2, int(N**0.5) + 1))


def prime_case_check(D: Decomposition) -> bool:
    """For prime N the residual of a decomposition must be generalized bent."""
    if not is_prime(D.N):
        raise ValueError(f"N = {D.N} is not prime")
    return is_generalized_bent(D.residual)
