"""Kernel backend selection: compiled extension when available, else pure Python.

Set NCLINDEP_PURE=1 to force the pure-Python backend (useful for testing and
for the backend comparison benchmark).  Both backends expose the same
contract and are exercised against each other in the test suite.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("NCLINDEP_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _accel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

mat_mul = _impl.mat_mul
alternating_sum = _impl.alternating_sum
alternating_sum_naive = _impl.alternating_sum_naive


def available_backends() -> dict:
    """Name -> module for every importable backend (used by the benchmark)."""
    backends = {_pykernels.BACKEND: _pykernels}
    try:
        from . import _accel

        backends[_accel.BACKEND] = _accel
    except ImportError:
        pass
    return backends
