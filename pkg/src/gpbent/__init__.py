"""Exact analysis of multivalued logic functions f: Z_N^n -> Z_N.

Computes Chrestenson spectra and autocorrelation tables in Z[exp(2 pi i/N)],
classifies generalized bent and generalized partially bent functions, and
splits non-pure partially bent functions into affine coordinates plus a pure
core by invertible linear substitution.
"""
from .analysis import AnalysisReport, NotGPB, analyze
from .corpus import make_example_2_1, random_function
from .cyclotomic import CycInt, root_power
from .decompose import Decomposition, decompose, verify_decomposition
from .transforms import (
    LogicFunction,
    autocorr_via_spectrum,
    autocorrelation,
    chrestenson_spectrum,
    fast_chrestenson,
    linear_substitute,
)

__all__ = [
    "AnalysisReport",
    "CycInt",
    "Decomposition",
    "LogicFunction",
    "NotGPB",
    "analyze",
    "autocorr_via_spectrum",
    "autocorrelation",
    "chrestenson_spectrum",
    "decompose",
    "fast_chrestenson",
    "linear_substitute",
    "make_example_2_1",
    "random_function",
    "root_power",
    "verify_decomposition",
]
