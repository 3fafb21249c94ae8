"""Golomb's topology on N, used as a comparison basis.

Golomb's base is the progressions ``a + b*N0`` with ``gcd(a, b) == 1``.  A
point ``x`` of an EPSet ``S`` (modulus ``m``, residues ``R``) is Golomb-interior
iff some step ``b`` with ``gcd(b, x) == 1`` keeps ``x + b*N0`` inside ``S``.

Math notes for the decision procedure:

* Modulo ``m`` the progression visits the coset ``x + <b>``, and ``<b mod m>``
  is the subgroup generated by ``d = gcd(b, m)``.
* Taking ``b = d*t`` with ``t`` a large prime coprime to ``m*x`` realizes any
  ``d | m`` with ``gcd(d, x) == 1`` while jumping past every exception, so a
  periodic point qualifies iff ``exists d | m: gcd(d, a) == 1 and a + <d> in R``
  (``gcd(d, x) == gcd(d, a)`` because ``d | m``).
* If no such ``d`` exists, every admissible step revisits residues outside
  ``R`` infinitely often and finitely many added points cannot absorb them.
* An added point ``x`` lies in a class outside ``R``, and the progression
  returns to that class every ``m/d`` steps, so it is never interior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import check_pos
from .perset import EPSet
from . import topology


def _divisors(m: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def golomb_basic(a: int, b: int) -> EPSet:
    """``{a + k*b : k >= 0}``."""
    a = check_pos(a, "a")
    b = check_pos(b, "b")
    if math.gcd(a, b) != 1:
        raise ValueError(f"not a Golomb basic set: gcd({a}, {b}) = {math.gcd(a, b)}")
    return EPSet.build(b, {a % b}, removed=range(a % b or b, a, b))


def _good_classes(s: EPSet) -> set[int]:
    res = set(s.residues)
    good = set()
    divisors = _divisors(s.m)
    for a in s.residues:
        for d in divisors:
            if math.gcd(d, a) == 1 and all((a + k * d) % s.m in res for k in range(s.m // d)):
                good.add(a)
                break
    return good


def golomb_interior_point(s: EPSet, x: int) -> bool:
    """Whether ``x`` has a Golomb-basic neighbourhood inside ``s``."""
    x = check_pos(x, "x")
    if x not in s or x in s.added:
        return False
    return x % s.m in _good_classes(s)


def is_golomb_open(s: EPSet) -> bool:
    if s.added:
        return False
    return len(_good_classes(s)) == len(s.residues)


@dataclass(frozen=True)
class CoarsenessReport:
    checked_sigma_max: int
    all_sigma_golomb_open: bool
    witness: EPSet
    witness_is_golomb_open: bool
    witness_is_tau_open: bool

    @property
    def strict(self) -> bool:
        return self.all_sigma_golomb_open and self.witness_is_golomb_open and not self.witness_is_tau_open

    def to_json(self) -> dict:
        return {
            "checked_sigma_max": self.checked_sigma_max,
            "all_sigma_golomb_open": self.all_sigma_golomb_open,
            "witness": self.witness.to_json(),
            "witness_is_golomb_open": self.witness_is_golomb_open,
            "witness_is_tau_open": self.witness_is_tau_open,
            "strictly_coarser": self.strict,
        }


def coarseness_demo(n_max: int = 200) -> CoarsenessReport:
    n_max = check_pos(n_max, "n_max")
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    witness = golomb_basic(1, 4)
    return CoarsenessReport(
        checked_sigma_max=n_max,
        all_sigma_golomb_open=all(is_golomb_open(topology.sigma(n)) for n in range(1, n_max + 1)),
        witness=witness,
        witness_is_golomb_open=is_golomb_open(witness),
        witness_is_tau_open=topology.is_open(witness),
    )
