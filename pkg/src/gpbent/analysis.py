"""Classification of logic functions: bent, partially bent, pure.

For a partially bent ``f`` there is a shift ``t`` such that every
autocorrelation value is either 0 or ``u^(-s.t) N^n``.  The shifts with the
second value form a subgroup ``E`` of Z_N^n, and ``f(x + y) = f(y) - t.x``
holds for every ``x`` in ``E``.  The purity indices ``m_i`` are the smallest
positive i-th coordinates found in ``E``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import zn
from .cyclotomic import CycInt, reduction_matrix, rows_equal, rows_is_zero
from .transforms import (
    AutocorrTable,
    CycTable,
    LogicFunction,
    SpectrumTable,
    autocorr_via_spectrum,
    autocorrelation,
    chrestenson_spectrum,
    fast_chrestenson,
)


class NotGPB(ValueError):
    """The function is not generalized partially bent."""


class SubgroupViolation(ArithmeticError):
    """A set that theory says is a subgroup failed the closure check."""


class InvariantViolation(AssertionError):
    """An identity guaranteed by the theory failed; indicates a bug."""


@dataclass(frozen=True)
class AnalysisReport:
    N: int
    n: int
    N_C: int
    N_S: int
    is_gbent: bool
    is_gpb: bool
    spectral_level: Optional[CycInt]
    t: Optional[zn.ZVec] = None
    E: tuple[int, ...] = ()
    E_perp: tuple[int, ...] = ()
    m: tuple[int, ...] = ()
    is_pure: bool = False
    inequality_holds: bool = True

    @property
    def product(self) -> int:
        size = self.N**self.n
        return (size - self.N_C) * (size - self.N_S)

    def E_vectors(self) -> list[zn.ZVec]:
        return [zn.idx_to_vec(i, self.N, self.n) for i in self.E]


def tables(f: LogicFunction, engine: str = "fast") -> tuple[SpectrumTable, AutocorrTable]:
    if engine == "fast":
        return fast_chrestenson(f), autocorr_via_spectrum(f)
    if engine == "naive":
        return chrestenson_spectrum(f), autocorrelation(f)
    raise ValueError(f"unknown engine {engine!r}")


def count_zeros(table: CycTable) -> int:
    return int(np.count_nonzero(table.zero_mask()))


def gpb_product(N: int, n: int, N_C: int, N_S: int) -> int:
    size = N**n
    return (size - N_C) * (size - N_S)


def is_generalized_bent(f: LogicFunction, spectrum: SpectrumTable | None = None) -> bool:
    spectrum = spectrum if spectrum is not None else fast_chrestenson(f)
    norms = spectrum.norm_sq()
    return bool(np.all(norms[:, 0] == f.size) and not np.any(norms[:, 1:]))


def is_generalized_partially_bent(
    f: LogicFunction,
    spectrum: SpectrumTable | None = None,
    autocorr: AutocorrTable | None = None,
) -> bool:
    spectrum = spectrum if spectrum is not None else fast_chrestenson(f)
    autocorr = autocorr if autocorr is not None else autocorr_via_spectrum(f)
    return gpb_product(f.N, f.n, count_zeros(autocorr), count_zeros(spectrum)) == f.size


def check_inequality(
    f: LogicFunction,
    spectrum: SpectrumTable | None = None,
    autocorr: AutocorrTable | None = None,
) -> bool:
    spectrum = spectrum if spectrum is not None else fast_chrestenson(f)
    autocorr = autocorr if autocorr is not None else autocorr_via_spectrum(f)
    return gpb_product(f.N, f.n, count_zeros(autocorr), count_zeros(spectrum)) >= f.size


def expected_autocorr(N: int, n: int, t: Sequence[int]) -> np.ndarray:
    """Canonical rows of ``u^(-s.t) N^n`` for every shift ``s``."""
    V = zn.all_vectors(N, n)
    dots = (-(V @ np.asarray(t, dtype=np.int64).reshape(n))) % N if n else np.zeros(1, np.int64)
    return reduction_matrix(N)[dots].astype(np.int64) * N**n


def linear_structure_mask(autocorr: AutocorrTable, t: Sequence[int]) -> np.ndarray:
    """Shifts ``s`` with ``C_f(s) = u^(-s.t) N^n``."""
    target = expected_autocorr(autocorr.N, autocorr.n, t)
    return rows_equal(autocorr.coeffs, target)


def satisfies_t_condition(autocorr: AutocorrTable, t: Sequence[int]) -> bool:
    """True iff every ``C_f(s)`` is 0 or ``u^(-s.t) N^n``."""
    ok = linear_structure_mask(autocorr, t) | rows_is_zero(autocorr.coeffs)
    return bool(np.all(ok))


def spectral_support(spectrum: SpectrumTable) -> list[int]:
    return np.flatnonzero(~spectrum.zero_mask()).tolist()


def find_t(
    f: LogicFunction,
    spectrum: SpectrumTable | None = None,
    autocorr: AutocorrTable | None = None,
) -> zn.ZVec:
    """Canonical shift vector ``t``; raises :class:`NotGPB` if none exists.

    The support of the spectrum of a partially bent function is the coset
    ``E_perp - t``, so every negated support point is a valid ``t``.  The
    lexicographically smallest negated support point is returned.
    """
    spectrum = spectrum if spectrum is not None else fast_chrestenson(f)
    autocorr = autocorr if autocorr is not None else autocorr_via_spectrum(f)
    N, n = f.N, f.n
    candidates = sorted(
        zn.vec_neg(zn.idx_to_vec(i, N, n), N) for i in spectral_support(spectrum)
    )
    if not candidates:
        raise InvariantViolation("spectrum vanishes identically")
    t = candidates[0]
    if not satisfies_t_condition(autocorr, t):
        raise NotGPB(f"autocorrelation is not of the form 0 or u^(-s.t) N^n for t={t}")
    return t


def _span(indices: Sequence[int], N: int, n: int) -> tuple[np.ndarray, list[np.ndarray]]:
    """Subgroup generated by the given points, plus a generating list."""
    V = zn.all_vectors(N, n)
    member = np.zeros(N**n, dtype=bool)
    member[0] = True
    H = np.zeros((1, n), dtype=np.int64)
    gens = []
    for i in indices:
        if member[i]:
            continue
        g = V[i]
        gens.append(g)
        # H + <g> as a union of cosets H + k g
        layers = [H]
        k = 1
        while True:
            shifted = (H + k * g) % N
            if member[zn.encode(shifted[:1], N)[0]]:
                break
            layers.append(shifted)
            k += 1
        H = np.concatenate(layers)
        member[zn.encode(H, N)] = True
    return member, gens


def is_subgroup(indices: Sequence[int], N: int, n: int) -> bool:
    indices = sorted(set(int(i) for i in indices))
    if not indices or indices[0] != 0:
        return False
    member, _ = _span(indices, N, n)
    return int(np.count_nonzero(member)) == len(indices)


def extract_E(f: LogicFunction, t: Sequence[int], autocorr: AutocorrTable | None = None) -> tuple[int, ...]:
    """Indices of ``E = {s : C_f(s) = u^(-s.t) N^n}``, checked to be a subgroup."""
    autocorr = autocorr if autocorr is not None else autocorr_via_spectrum(f)
    if not satisfies_t_condition(autocorr, t):
        raise NotGPB(f"t={tuple(t)} does not describe the autocorrelation")
    E = tuple(np.flatnonzero(linear_structure_mask(autocorr, t)).tolist())
    if not is_subgroup(E, f.N, f.n):
        raise SubgroupViolation("E is not closed under addition")
    return E


def annihilator(E: Sequence[int], N: int, n: int) -> tuple[int, ...]:
    """Indices of ``{x : y.x = 0 for all y in E}``."""
    V = zn.all_vectors(N, n)
    _, gens = _span(sorted(E), N, n)
    if not gens:
        return tuple(range(N**n))
    G = np.stack(gens)
    mask = np.all((V @ G.T) % N == 0, axis=1)
    return tuple(np.flatnonzero(mask).tolist())


def compute_m(E: Sequence[int], N: int, n: int) -> tuple[int, ...]:
    V = zn.all_vectors(N, n)[np.asarray(E, dtype=np.int64)]
    out = []
    for i in range(n):
        pos = V[:, i][V[:, i] > 0]
        out.append(int(pos.min()) if pos.size else 0)
    return tuple(out)


def is_pure(report: AnalysisReport) -> bool:
    if not report.is_gpb:
        raise NotGPB("purity is only defined for partially bent functions")
    return all(mi != 1 for mi in report.m)


def functional_equation_holds(f: LogicFunction, t: Sequence[int], E: Sequence[int]) -> bool:
    """``f(x + y) = f(y) - t.x`` for every x in E and every y."""
    N, n = f.N, f.n
    V = zn.all_vectors(N, n)
    tv = np.asarray(t, dtype=np.int64).reshape(n)
    for i in E:
        x = V[i]
        shifted = f.table[zn.encode(V + x, N)]
        if not np.array_equal(shifted, (f.table - int(x @ tv)) % N):
            return False
    return True


def analyze(f: LogicFunction, engine: str = "fast") -> AnalysisReport:
    spectrum, autocorr = tables(f, engine)
    N, n, size = f.N, f.n, f.size
    N_C, N_S = count_zeros(autocorr), count_zeros(spectrum)
    product = gpb_product(N, n, N_C, N_S)
    norms = spectrum.norm_sq()
    support = ~spectrum.zero_mask()
    gbent = bool(np.all(norms[:, 0] == size) and not np.any(norms[:, 1:]))
    level_rows = np.unique(norms[support], axis=0)
    level = CycInt(N, tuple(int(c) for c in level_rows[0])) if len(level_rows) == 1 else None

    if product != size:
        return AnalysisReport(
            N, n, N_C, N_S, gbent, False, level, inequality_holds=product >= size
        )

    try:
        t = find_t(f, spectrum, autocorr)
    except NotGPB as exc:
        raise InvariantViolation(f"product criterion holds but {exc}") from exc
    E = extract_E(f, t, autocorr)
    E_perp = annihilator(E, N, n)
    if len(E) != size - N_C or len(E_perp) != size - N_S:
        raise InvariantViolation("|E|, |E_perp| disagree with the zero counts")
    if level is None:
        raise InvariantViolation("|S|^2 is not constant on the spectral support")
    m = compute_m(E, N, n)
    return AnalysisReport(
        N, n, N_C, N_S, gbent, True, level,
        t=t, E=E, E_perp=E_perp, m=m, is_pure=all(mi != 1 for mi in m),
    )
