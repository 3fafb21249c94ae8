"""Brute-force cross-checks for the engine's decision procedures.

Independence rule: nothing in this module may call the engine's closure
formula, cover characterization or Golomb criterion.  It uses only gcd,
membership of the set under test, and exhaustive scans over one full
period.  Engine answers are imported solely to be compared against.

Window exhaustiveness: ``S ∩ sigma(n)`` is periodic with period
``lcm(m, n)`` beyond the last exception, so scanning ``[1, lcm(m, n) +
max_exception]`` decides its emptiness exactly (and likewise for
``sigma(n) - S``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import kernels
from .arith import INT64_MAX, checked_lcm
from .perset import EPSet

INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Discrepancy:
    x: int
    engine_says: bool
    oracle_says: bool | str

    def to_json(self) -> dict:
        return {"x": self.x, "engine_says": self.engine_says, "oracle_says": self.oracle_says}


@dataclass(frozen=True)
class OracleVerdict:
    check: str
    checked_window: int
    cover_prime_bound: int
    discrepancies: tuple[Discrepancy, ...]
    # per-point oracle answers (x -> witness or None), for reporting and goldens
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def agrees(self) -> bool:
        return not self.discrepancies

    @property
    def inconclusive(self) -> list[int]:
        return [d.x for d in self.discrepancies if d.oracle_says == INCONCLUSIVE]

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "checked_window": self.checked_window,
            "cover_prime_bound": self.cover_prime_bound,
            "agrees": self.agrees,
            "discrepancies": [d.to_json() for d in self.discrepancies],
            "evidence": {str(k): v for k, v in sorted(self.evidence.items())},
        }


def _scan_window(s: EPSet, n: int) -> int:
    w = checked_lcm(s.m, n) + s.max_exception
    if w > INT64_MAX:
        raise OverflowError("period scan window exceeds the 64-bit range")
    return w


def meets_sigma(s: EPSet, n: int, arrays=None) -> int:
    """Smallest element of ``S ∩ sigma(n)``, or 0 if the intersection is empty."""
    arrays = arrays or kernels.set_arrays(s)
    return kernels.find_first(arrays, n, _scan_window(s, n), True)


def sigma_escapes(s: EPSet, n: int, arrays=None) -> int:
    """Smallest element of ``sigma(n) - S``, or 0 if ``sigma(n)`` lies inside S."""
    arrays = arrays or kernels.set_arrays(s)
    return kernels.find_first(arrays, n, _scan_window(s, n), False)


def _primes_up_to(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if all(p % q for q in range(2, math.isqrt(p) + 1))]


def separating_sets(s: EPSet, prime_bound: int, subset_size: int) -> list[tuple[int, ...]]:
    """Prime sets ``Q`` (primes <= prime_bound, |Q| <= subset_size) whose
    product ``n`` has ``S ∩ sigma(n)`` empty, found by period scans.

    Supersets of a known separating set are separating too (``sigma`` shrinks
    as primes are added) and are recorded without rescanning.
    """
    primes = _primes_up_to(prime_bound)
    arrays = kernels.set_arrays(s)
    found: list[tuple[int, ...]] = []
    bits: list[int] = []
    for size in range(1, subset_size + 1):
        for combo in itertools.combinations(range(len(primes)), size):
            key = sum(1 << i for i in combo)
            qs = tuple(primes[i] for i in combo)
            if any(b & key == b for b in bits):
                found.append(qs)
                continue
            if meets_sigma(s, math.prod(qs), arrays) == 0:
                found.append(qs)
                bits.append(key)
    return found


def oracle_closure_check(
    s: EPSet, n: int, prime_bound: int = 31, subset_size: int = 5, engine=None
) -> OracleVerdict:
    """Compare ``engine(s)`` (default: the engine closure) with separating
    basic opens found by brute force, for every ``x <= n``."""
    if engine is None:
        from .topology import closure as engine
    if n < 1 or prime_bound < 2 or subset_size < 1:
        raise ValueError("need n >= 1, prime_bound >= 2, subset_size >= 1")
    claimed = engine(s)
    if s.is_empty():
        separators = [()]
    else:
        separators = separating_sets(s, prime_bound, subset_size)
    # a nonempty set meets sigma(1) = N, the empty set is separated by it
    products = [math.prod(q) for q in separators]
    discrepancies = []
    evidence = {}
    for x in range(1, n + 1):
        sep = next((k for k in products if math.gcd(k, x) == 1), None)
        evidence[x] = sep
        in_engine = claimed.member(x)
        if in_engine and sep is not None:
            discrepancies.append(Discrepancy(x, True, False))
        elif not in_engine and sep is None:
            discrepancies.append(Discrepancy(x, False, INCONCLUSIVE))
    return OracleVerdict("closure", n, prime_bound, tuple(discrepancies), evidence)


def oracle_closure_members(s: EPSet, n: int, prime_bound: int = 31, subset_size: int = 5) -> list[int]:
    """Points ``x <= n`` that no separating basic open under the bound excludes."""
    verdict = oracle_closure_check(s, n, prime_bound, subset_size)
    return [x for x, sep in sorted(verdict.evidence.items()) if sep is None]


def _interior_witness(s: EPSet, x: int, n_bound: int, cache: dict, arrays) -> int | None:
    for k in range(1, n_bound + 1):
        if math.gcd(k, x) != 1:
            continue
        if k not in cache:
            cache[k] = sigma_escapes(s, k, arrays) == 0
        if cache[k]:
            return k
    return None


def oracle_open_check(s: EPSet, sample: int = 20, n_bound: int = 10**4, engine=None) -> OracleVerdict:
    """For the first ``sample`` members x, search ``sigma(k) ⊆ S`` with x in it.

    Compared point by point against the engine interior: a found witness
    for a point the engine calls non-interior is a hard discrepancy; no
    witness for a point the engine calls interior is ``inconclusive``.
    """
    if engine is None:
        from .topology import interior as engine
    inner = engine(s)
    cache: dict[int, bool] = {}
    arrays = kernels.set_arrays(s)
    discrepancies = []
    evidence = {}
    for x in s.enumerate(sample):
        w = _interior_witness(s, x, n_bound, cache, arrays)
        evidence[x] = w
        if inner.member(x) and w is None:
            discrepancies.append(Discrepancy(x, True, INCONCLUSIVE))
        elif not inner.member(x) and w is not None:
            discrepancies.append(Discrepancy(x, False, True))
    return OracleVerdict("open", n_bound, 0, tuple(discrepancies), evidence)


def oracle_golomb_check(s: EPSet, sample: int = 10, b_bound: int = 5000, engine=None) -> OracleVerdict:
    """For sampled members x, search a step ``b`` (gcd(b, x) = 1) whose
    progression from x stays in S over one full combined period."""
    if engine is None:
        from .golomb import golomb_interior_point as engine
    arrays = kernels.set_arrays(s)
    discrepancies = []
    evidence = {}
    for x in s.enumerate(sample):
        b = kernels.progression_step(arrays, x, b_bound)
        evidence[x] = b or None
        says = engine(s, x)
        if says and not b:
            discrepancies.append(Discrepancy(x, True, INCONCLUSIVE))
        elif not says and b:
            discrepancies.append(Discrepancy(x, False, True))
    return OracleVerdict("golomb", b_bound, 0, tuple(discrepancies), evidence)
