"""Hot numeric loops, numba-compiled when available.

Set ``COPRIMALITY_PURE_NUMPY=1`` to force the pure-numpy path (also used
automatically when numba cannot be imported). ``BACKEND`` names the active one.
"""

import os

import numpy as np

from . import _numpy

_want_numpy = os.environ.get("COPRIMALITY_PURE_NUMPY", "").strip().lower() in {"1", "true", "yes", "on"}

_impl = _numpy
BACKEND = "numpy"
if not _want_numpy:
    try:
        from . import _numba
    except ImportError:  # pragma: no cover - numba is a hard dependency in practice
        pass
    else:
        _impl = _numba
        BACKEND = "numba"


def _i64(values):
    return np.ascontiguousarray(values, dtype=np.int64)


def set_arrays(s):
    """``(mask, m, added, removed)`` kernel arguments for an EPSet."""
    return (np.ascontiguousarray(s.mask, dtype=np.bool_), int(s.m), _i64(s.added), _i64(s.removed))


def spf_sieve(limit):
    return _impl.spf_sieve(int(limit))


def first_coprime(ns, members):
    return _impl.first_coprime(_i64(ns), _i64(members))


def find_first(arrays, n, window, want_member):
    """See ``_numpy.find_first``; ``arrays`` comes from :func:`set_arrays`."""
    return int(_impl.find_first(*arrays, int(n), int(window), bool(want_member)))


def progression_step(arrays, x, b_bound):
    return int(_impl.progression_step(*arrays, int(x), int(b_bound)))


def warmup():
    """Compile every kernel once so later timings exclude JIT cost."""
    arrays = (np.array([False, True]), 2, _i64([]), _i64([]))
    spf_sieve(10)
    first_coprime(_i64([2]), _i64([3]))
    find_first(arrays, 1, 4, True)
    progression_step(arrays, 1, 3)
