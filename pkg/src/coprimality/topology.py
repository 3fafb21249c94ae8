"""The coprimality topology on the positive integers.

The base consists of the sets ``sigma(n) = {x : gcd(n, x) == 1}``.

Closure of an arbitrary EPSet (engine-level result, checked against the
brute-force oracle): ``x`` misses ``cl(S)`` iff some ``sigma(k)`` contains
``x`` and misses ``S``, i.e. the primes of ``k`` cover ``S``.  A residue
class ``a mod m`` is covered by a finite prime set ``Q`` iff some ``q in Q``
divides ``g = gcd(a, m)``; otherwise the uncovered members keep density
``prod(1 - 1/q) > 0``.  Hence

    cl(S) = N                                 if 1 in S or some g == 1
    cl(S) = U M_rad(g_i)  U  U_{s in A} M_rad(s)   otherwise

Finitely many removed points never change coverability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import check_pos, radical
from .perset import (
    EMPTY,
    NATURALS,
    EPSet,
    complement,
    difference,
    from_mask,
    make_periodic,
    union_of_multiples,
)


@lru_cache(maxsize=4096)
def _sigma_of_radical(r: int) -> EPSet:
    return from_mask(r, np.gcd(np.arange(r), r) == 1)


def sigma(n: int) -> EPSet:
    """Basic open set of integers coprime to ``n``; ``sigma(1)`` is N."""
    n = check_pos(n)
    if n == 1:
        return NATURALS
    return _sigma_of_radical(radical(n))


def sigma_decomposition(n: int) -> list[tuple[int, int]]:
    """Progressions ``(first, step)`` whose union is ``sigma(n)``.

    For ``n == 1`` the single progression ``(1, 1)``, i.e. all of N.
    """
    n = check_pos(n)
    if n == 1:
        return [(1, 1)]
    return [(a, n) for a in range(1, n) if math.gcd(a, n) == 1]


def closure_singleton(n: int) -> EPSet:
    n = check_pos(n)
    if n == 1:
        return NATURALS
    return make_periodic(radical(n), {0})


def _class_gcds(s: EPSet):
    return {math.gcd(a, s.m) for a in s.residues}


def is_dense(s: EPSet) -> bool:
    if s.is_empty():
        return False
    return 1 in s or 1 in _class_gcds(s)


def closure(s: EPSet) -> EPSet:
    if s.is_empty():
        return EMPTY
    if is_dense(s):
        return NATURALS
    radicals = {radical(g) for g in _class_gcds(s)}
    radicals.update(radical(a) for a in s.added)
    return union_of_multiples(radicals)


def interior(s: EPSet) -> EPSet:
    return complement(closure(complement(s)))


def boundary(s: EPSet) -> EPSet:
    return difference(closure(s), interior(s))


def is_open(s: EPSet) -> bool:
    return interior(s) == s


def is_closed(s: EPSet) -> bool:
    return closure(s) == s


def is_nowhere_dense(s: EPSet) -> bool:
    return interior(closure(s)).is_empty()


@dataclass(frozen=True)
class ClassifyReport:
    is_open: bool
    is_closed: bool
    is_dense: bool
    is_nowhere_dense: bool
    closure: EPSet
    interior: EPSet
    boundary: EPSet

    def flags(self) -> list[str]:
        """Names of the properties that hold, e.g. ``["closed", "nowhere dense"]``."""
        names = ("open", "closed", "dense", "nowhere dense")
        held = (self.is_open, self.is_closed, self.is_dense, self.is_nowhere_dense)
        return [name for name, ok in zip(names, held) if ok]

    def to_json(self) -> dict:
        return {
            "is_open": self.is_open,
            "is_closed": self.is_closed,
            "is_dense": self.is_dense,
            "is_nowhere_dense": self.is_nowhere_dense,
            "closure": self.closure.to_json(),
            "interior": self.interior.to_json(),
            "boundary": self.boundary.to_json(),
        }


def classify(s: EPSet) -> ClassifyReport:
    cl = closure(s)
    inner = interior(s)
    return ClassifyReport(
        is_open=inner == s,
        is_closed=cl == s,
        is_dense=cl == NATURALS,
        is_nowhere_dense=interior(cl).is_empty(),
        closure=cl,
        interior=inner,
        boundary=difference(cl, inner),
    )
