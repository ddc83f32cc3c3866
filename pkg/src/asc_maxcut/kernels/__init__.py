"""Hot inner loops of the greedy engines and the trace-pair counter.

``ASC_MAXCUT_NUMBA`` picks the implementation at import time; both modules
stay importable so tests and benchmarks can compare them directly.
"""
from .._accel import USE_NUMBA
from . import _numpy as numpy_backend

if USE_NUMBA:
    from . import _numba as numba_backend

    active = numba_backend
    BACKEND = "numba"
else:
    numba_backend = None
    active = numpy_backend
    BACKEND = "numpy"

double_greedy = active.double_greedy
single_greedy = active.single_greedy
edge_contraction = active.edge_contraction
pair_step_stats = active.pair_step_stats

__all__ = [
    "BACKEND",
    "double_greedy",
    "edge_contraction",
    "numba_backend",
    "numpy_backend",
    "pair_step_stats",
    "single_greedy",
]
