"""Time-bounded information distances on a toy prefix machine, and practical NCD.

Modules:

- ``bitcore``: bit strings, length-lex indexing, pairing, XOR
- ``machine``: the prefix-free toy machine and program enumeration
- ``complexity``: K^t, E^t and the time-bounded NID surrogate
- ``constructions``: diagonal string, XOR pair, threshold search
- ``approx``: approximation traces and fluctuation counting
- ``lz``, ``corpus``, ``ncd``, ``cluster``: compression distance and UPGMA
"""

__version__ = "0.1.0"

from .approx import ApproximationTrace, classify, fluctuation_count, is_n_approx
from .bitcore import index, pair, string_of, unpair, xor
from .complexity import ComplexityEstimate, e_time, k_time, k_upper_trace, nid_time
from .constructions import (
    GapReport,
    ThresholdResult,
    diagonal_nid,
    diagonal_u,
    random_v,
    s_of_n,
    threshold_search,
    xor_pair,
)
from .errors import (
    CompressorInsane,
    DuplicateLabel,
    Infeasible,
    LengthMismatch,
    MalformedTrace,
    NoWitness,
)
from .machine import ExecutionResult, StepBound, enumerate_programs, run

__all__ = [
    "ApproximationTrace", "classify", "fluctuation_count", "is_n_approx",
    "index", "pair", "string_of", "unpair", "xor",
    "ComplexityEstimate", "e_time", "k_time", "k_upper_trace", "nid_time",
    "GapReport", "ThresholdResult", "diagonal_nid", "diagonal_u", "random_v", "s_of_n",
    "threshold_search", "xor_pair",
    "CompressorInsane", "DuplicateLabel", "Infeasible", "LengthMismatch", "MalformedTrace",
    "NoWitness",
    "ExecutionResult", "StepBound", "enumerate_programs", "run",
]
