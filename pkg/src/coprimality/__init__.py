"""Exact computations in the coprimality topology on the positive integers."""

from .kernels import BACKEND
from .perset import EMPTY, N1, NATURALS, EPSet, make_explicit, make_periodic, multiples
from .topology import boundary, classify, closure, interior, is_dense, is_open, sigma

__all__ = [
    "BACKEND",
    "EMPTY",
    "N1",
    "NATURALS",
    "EPSet",
    "boundary",
    "classify",
    "closure",
    "interior",
    "is_dense",
    "is_open",
    "make_explicit",
    "make_periodic",
    "multiples",
    "sigma",
]
